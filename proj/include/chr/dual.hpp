#pragma once

#include <limits>

#include "chr/classical.hpp"
#include "chr/expr.hpp"

namespace chr {

// The dual Hopf algebras CR(O)* and CR(Sp)* in the starred bases
// [lambda]* = {lambda}.D and <lambda>* = {lambda}.B. Products and coproducts
// here involve infinite series, so every value carries the cutoff under
// which it is exact; combining values checks that the inputs can support the
// requested cutoff and the result records the tightest guarantee.

class DualExpr {
 public:
  /// Cutoff of values that are exact at every weight (plain combinations of
  /// starred basis elements).
  static constexpr int kUnlimited = std::numeric_limits<int>::max();

  explicit DualExpr(Basis ring, int cutoff = kUnlimited) : ring_(ring), cutoff_(cutoff) {
    check_ring();
  }
  DualExpr(Basis ring, const Partition& p, const Int& coeff = 1, int cutoff = kUnlimited)
      : ring_(ring), cutoff_(cutoff) {
    check_ring();
    terms_.add(p, coeff);
  }

  Basis ring() const { return ring_; }
  int cutoff() const { return cutoff_; }
  const LinearCombo<Partition>& terms() const { return terms_; }

  void add(const Partition& p, const Int& coeff) { terms_.add(p, coeff); }
  Int coefficient(const Partition& p) const { return terms_.coefficient(p); }
  bool is_zero() const { return terms_.is_zero(); }

  /// Restrict to weight <= w; the result is exact at w if *this was.
  DualExpr truncated(int w) const;

  DualExpr& operator+=(const DualExpr& o);
  DualExpr& operator-=(const DualExpr& o);
  DualExpr& operator*=(const Int& k) {
    terms_ *= k;
    return *this;
  }
  friend DualExpr operator+(DualExpr a, const DualExpr& b) { return a += b; }
  friend DualExpr operator-(DualExpr a, const DualExpr& b) { return a -= b; }

  bool operator==(const DualExpr& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
  }

 private:
  void check_ring() const {
    if (ring_ != Basis::DualO && ring_ != Basis::DualSp)
      throw ring_mismatch_error("dual expressions live in the O* or Sp* ring");
  }

  Basis ring_;
  LinearCombo<Partition> terms_;
  int cutoff_;
};

/// The Hopf unit of the dual ring at the given cutoff: the starred C series
/// for O* and the starred A series for Sp*. Materialised on demand because
/// it is cutoff-dependent.
DualExpr dual_unit(Basis ring, int cutoff);

/// GL expansion sum coeff {lambda}.Z truncated to the cutoff, with Z = D for
/// O* and Z = B for Sp*. Requires f exact at the cutoff.
SymExpr dual_to_gl(const DualExpr& f, int cutoff);

/// [mu]*.[nu]* = [mu.nu.Z]*: the starred coefficients are the Schur
/// coefficients of {mu}.{nu}.Z truncated to the cutoff.
DualExpr dual_product(const DualExpr& f, const DualExpr& g, int cutoff);

/// delta([lambda]*) = sum_{sigma,zeta} [(lambda/sigma).zeta]* (x)
/// [sigma.zeta]*, truncated to weight <= cutoff in each slot. Requires f
/// exact at 2*cutoff since both slots grow with zeta.
TensorExpr dual_coproduct(const DualExpr& f, int cutoff);

/// Coefficient of the empty label.
Int dual_counit(const DualExpr& f);

/// S([lambda]*) = (-1)^{|lambda|}[lambda'.B.C]* (O* case; series swap
/// B.C -> D.A in the Sp* case), truncated to the cutoff.
DualExpr dual_antipode(const DualExpr& f, int cutoff);

} // namespace chr
