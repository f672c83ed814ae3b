#pragma once

#include <optional>

#include "chr/expr.hpp"
#include "chr/schur.hpp"

namespace chr {

/// The twelve infinite Schur function series. Each is a signed sum of Schur
/// functions over a fixed partition set:
///   A over arm-leg difference -1, sign (-1)^{w/2}   B over even columns, +
///   C over arm-leg difference +1, sign (-1)^{w/2}   D over even rows, +
///   E over self-conjugate, sign (-1)^{(w+rank)/2}   F over all, +
///   G over self-conjugate, sign (-1)^{(w-rank)/2}   H over all, (-1)^w
///   L over single columns, (-1)^w                   M over single rows, +
///   P over single rows, (-1)^w                      Q over single columns, +
/// The formal parameter t of the generating functions is not represented:
/// its exponent is always recoverable as the term weight.
enum class SeriesKind { A, B, C, D, E, F, G, H, L, M, P, Q };

char series_letter(SeriesKind k);
std::optional<SeriesKind> series_kind_from_letter(char c);

/// Signed membership indicator: the coefficient of {p} in the series, which
/// is 0 when p lies outside the series' partition set.
int series_sign(SeriesKind k, const Partition& p);

/// A series restricted to weight <= cutoff. The coefficient of {0} is 1.
struct TruncatedSeries {
  SeriesKind kind;
  int cutoff;
  SymExpr body;
};

TruncatedSeries series_terms(SeriesKind kind, int cutoff);

/// Exact series skew f/Z: only series terms of weight <= maxWeight(f)
/// contribute, so no cutoff argument is needed. The default kernel is
/// OpenMP-parallel over (term, series term) pairs; the serial variant is the
/// reference implementation.
SymExpr skew_by_series(const SymExpr& f, SeriesKind kind);
SymExpr skew_by_series_serial(const SymExpr& f, SeriesKind kind);

/// Product of two truncated series, truncated to weight <= cutoff. Rejects
/// inputs whose own cutoffs cannot support the request.
SymExpr truncated_product(const TruncatedSeries& u, const TruncatedSeries& v, int cutoff);

/// The cut coproduct Delta'(Z) of the series coproduct factorisation
/// Delta(Z) = (Z (x) Z) Delta'(Z), truncated to weight <= cutoff/2 per slot
/// (each slot of a cut term carries the same t^2 grading).
TensorExpr series_cut_coproduct(SeriesKind kind, int cutoff);

} // namespace chr
