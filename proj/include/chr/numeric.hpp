#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chr/bigint.hpp"
#include "chr/classical.hpp"
#include "chr/errors.hpp"
#include "chr/expr.hpp"
#include "chr/lr.hpp"
#include "chr/rational.hpp"

namespace chr {

// Specialisation of universal characters to explicit eigenvalue lists. The
// full argument list of a character is assembled from the free eigenvalues
// x_k, their inverses, and the fixed entries demanded by the group kind:
//   GL(N)        x_1..x_N                    (values: N entries)
//   SO(2K)       x, x^-1                     (K entries)
//   O(2K)-       x, x^-1, 1, -1              (K-1 entries)
//   SO(2K+1)     x, x^-1, 1                  (K entries)
//   O(2K+1)-     x, x^-1, -1                 (K entries)
//   Sp(2K)       x, x^-1                     (K entries)
//   Sp(2K+1)     x, x^-1, x_{2K+1}           (K+1 entries, last is the GL(1) one)
enum class GroupKind { GL, SOEven, OEvenMinus, SOOdd, OOddMinus, SpEven, SpOdd };

std::string group_kind_name(GroupKind k);

struct EigenvalueSpec {
  GroupKind kind = GroupKind::GL;
  std::vector<Rat> values;
};

/// Route used by schur_value. The tableau route (iterated one-variable
/// branching over horizontal strips) works for any input; the alternant
/// ratio needs pairwise distinct values and falls back to the tableau route
/// on degenerate input.
enum class SchurRoute { Tableau, Alternant };

namespace detail {

template <class Num>
Num num_pow(const Num& x, int e) {
  Num r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

template <class Num>
bool pairwise_distinct(const std::vector<Num>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) return false;
  return true;
}

template <class Num>
Num schur_value_tableau(const Partition& lambda, const std::vector<Num>& xs) {
  int n = static_cast<int>(xs.size());
  if (lambda.length() > n) return Num(0);
  std::map<std::pair<Partition, int>, Num> memo;
  auto rec = [&](auto&& self, const Partition& shape, int vars) -> Num {
    if (shape.empty()) return Num(1);
    if (vars == 0 || shape.length() > vars) return Num(0);
    auto key = std::make_pair(shape, vars);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Num total(0);
    // Peel a horizontal strip off shape and charge it to x_{vars}.
    std::vector<int> mu(static_cast<std::size_t>(shape.length()), 0);
    auto walk = [&](auto&& inner, int row) -> void {
      if (row == shape.length()) {
        Partition m(std::vector<int>(mu.begin(), mu.end()));
        int removed = shape.weight() - m.weight();
        total += detail::num_pow(xs[static_cast<std::size_t>(vars - 1)], removed) *
                 self(self, m, vars - 1);
        return;
      }
      int lo = shape.part(row + 1);
      int hi = shape.part(row);
      for (int v = lo; v <= hi; ++v) {
        mu[static_cast<std::size_t>(row)] = v;
        inner(inner, row + 1);
      }
      mu[static_cast<std::size_t>(row)] = 0;
    };
    walk(walk, 0);
    return memo.emplace(std::move(key), std::move(total)).first->second;
  };
  return rec(rec, lambda, n);
}

template <class Num>
Num determinant(std::vector<std::vector<Num>> m) {
  std::size_t n = m.size();
  Num det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == Num(0)) ++pivot;
    if (pivot == n) return Num(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == Num(0)) continue;
      Num factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

template <class Num>
Num schur_value_alternant(const Partition& lambda, const std::vector<Num>& xs) {
  int n = static_cast<int>(xs.size());
  if (lambda.length() > n) return Num(0);
  if (!pairwise_distinct(xs))
    throw eval_error("alternant route needs pairwise distinct eigenvalues");
  if (n == 0) return Num(1);
  auto alternant = [&](bool shifted) {
    std::vector<std::vector<Num>> m(static_cast<std::size_t>(n),
                                    std::vector<Num>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int e = n - 1 - j + (shifted ? lambda.part(j) : 0);
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            num_pow(xs[static_cast<std::size_t>(i)], e);
      }
    return determinant(std::move(m));
  };
  return alternant(true) / alternant(false);
}

} // namespace detail

/// s_lambda(x_1,...,x_N); zero when the partition is longer than the list.
template <class Num>
Num schur_value(const Partition& lambda, const std::vector<Num>& xs,
                SchurRoute route = SchurRoute::Tableau) {
  if (route == SchurRoute::Alternant && detail::pairwise_distinct(xs))
    return detail::schur_value_alternant(lambda, xs);
  return detail::schur_value_tableau(lambda, xs);
}

/// The fully assembled argument list of the spec.
std::vector<Rat> assemble_arguments(const EigenvalueSpec& spec);

/// Rank K (or N for GL) implied by the value list length.
int spec_rank(const EigenvalueSpec& spec);

/// Evaluates a character expression on an eigenvalue spec. GL expressions
/// are plain symmetric functions and evaluate on any assembled list; O and
/// Sp expressions require a matching group kind and must stay inside the
/// stable range (no modification rules here).
Rat char_value(const SymExpr& f, const EigenvalueSpec& spec);

/// Float-mode variant over an already assembled argument list.
double char_value_f(const SymExpr& f, GroupKind kind, const std::vector<double>& args);

/// Evaluates a rational character on nonzero eigenvalues x (contravariant
/// slots take the inverses).
Rat rational_char_value(const RationalExpr& f, const std::vector<Rat>& xs);
double rational_char_value_f(const RationalExpr& f, const std::vector<double>& xs);

} // namespace chr
