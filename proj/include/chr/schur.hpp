#pragma once

#include "chr/expr.hpp"
#include "chr/lr.hpp"
#include "chr/partition.hpp"

namespace chr {

// The ring Lambda in the Schur basis. All operations expect GL-basis
// expressions and throw ring_mismatch_error otherwise.

/// Outer product, extended bilinearly from the Littlewood-Richardson rule.
/// The default kernel fans the term pairs out over OpenMP threads;
/// product_serial is the plain reference loop kept for tests and benchmarks.
SymExpr product(const SymExpr& f, const SymExpr& g);
SymExpr product_serial(const SymExpr& f, const SymExpr& g);

/// s_{lambda/mu} as a GL expression; zero if mu is not contained in lambda.
SymExpr skew(const Partition& lambda, const Partition& mu);

/// f / a, both arguments extended bilinearly: sum_a coeff * skew by term.
SymExpr skew_by_expr(const SymExpr& f, const SymExpr& a);

/// Outer coproduct of a GL expression.
TensorExpr coproduct(const SymExpr& f);

/// Term-wise (-1)^{|lambda|} s_{lambda'}.
SymExpr antipode(const SymExpr& f);

/// Coefficient of the empty partition.
Int counit(const SymExpr& f);

/// Schur-Hall scalar product: Schur basis terms pair off Kronecker-style.
Int schur_hall(const SymExpr& f, const SymExpr& g);

/// Schur expansions of the multiplicative bases h, e, p indexed by a
/// partition; integer coefficients throughout.
SymExpr from_h(const Partition& lambda);
SymExpr from_e(const Partition& lambda);
SymExpr from_p(const Partition& lambda);

/// Foulkes derivative a^perp(f) in Lambda; on basis elements this is the
/// skew s_{f/a}.
SymExpr foulkes_gl(const SymExpr& a, const SymExpr& f);

} // namespace chr
