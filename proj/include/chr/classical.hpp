#pragma once

#include "chr/expr.hpp"
#include "chr/schur.hpp"
#include "chr/series.hpp"

namespace chr {

// The character Hopf algebras CR(O) and CR(Sp) in their bracket bases.
// Values carry their ring tag; every operation checks it and there is no
// implicit coercion. Conversion through GL is the bridge between rings:
//   o_to_gl  [lambda] = {lambda/C}       gl_to_o  {lambda} = [lambda/D]
//   sp_to_gl <lambda> = {lambda/A}       gl_to_sp {lambda} = <lambda/B>
// the pairs being mutually inverse because AB = CD = 1.

SymExpr o_to_gl(const SymExpr& f);
SymExpr sp_to_gl(const SymExpr& f);
SymExpr gl_to_o(const SymExpr& f);
SymExpr gl_to_sp(const SymExpr& f);

/// Conversion of any covariant-ring expression to/from a target ring,
/// composed through GL where needed.
SymExpr convert(const SymExpr& f, Basis target);

/// Newell-Littlewood product: [mu].[nu] = sum_zeta [mu/zeta . nu/zeta],
/// valid verbatim in both bracket rings. The default kernel distributes
/// (term pair, zeta) tasks over OpenMP; the serial variant is the reference.
SymExpr nl_product(const SymExpr& f, const SymExpr& g);
SymExpr nl_product_serial(const SymExpr& f, const SymExpr& g);

SymExpr product_o(const SymExpr& f, const SymExpr& g);
SymExpr product_sp(const SymExpr& f, const SymExpr& g);

/// Coproducts in the bracket bases: Delta([lambda]) = sum [lambda/sigma] (x)
/// [sigma/D], and <lambda/zeta> (x) <zeta/B> in the symplectic case.
TensorExpr coproduct_o(const SymExpr& f);
TensorExpr coproduct_sp(const SymExpr& f);

/// Counits: the signed indicator sums over the C (resp. A) partition sets.
Int counit_o(const SymExpr& f);
Int counit_sp(const SymExpr& f);

/// Antipodes: S([lambda]) = (-1)^{|lambda|}[lambda'/(AD)] and
/// S(<lambda>) = (-1)^{|lambda|}<lambda'/(BC)>.
SymExpr antipode_o(const SymExpr& f);
SymExpr antipode_sp(const SymExpr& f);

/// The orthogonal and symplectic Schur-Hall scalar products, Kronecker on
/// bracket coefficients.
Int scalar_o(const SymExpr& f, const SymExpr& g);
Int scalar_sp(const SymExpr& f, const SymExpr& g);

/// Adjoint of multiplication. Multiplication is self-adjoint in the bracket
/// rings, so this is the ring product there; in GL it is the skew.
SymExpr adjoint_mult(const SymExpr& a, const SymExpr& f);

/// Foulkes derivative a^perp(f) = sum <a|f_(1)> f_(2) in the ring of f:
/// on basis elements [lambda]^perp([mu]) = [mu/(lambda D)] and
/// <lambda>^perp(<mu>) = <mu/(lambda B)>.
SymExpr foulkes(const SymExpr& a, const SymExpr& f);
SymExpr foulkes_o(const SymExpr& a, const SymExpr& f);
SymExpr foulkes_sp(const SymExpr& a, const SymExpr& f);

/// Ring-generic dispatchers (GL, O or Sp).
SymExpr ring_product(const SymExpr& f, const SymExpr& g);
TensorExpr ring_coproduct(const SymExpr& f);
Int ring_counit(const SymExpr& f);
SymExpr ring_antipode(const SymExpr& f);
Int ring_scalar(const SymExpr& f, const SymExpr& g);

/// Component-wise product of tensors; each slot multiplies in its own ring.
TensorExpr tensor_product(const TensorExpr& a, const TensorExpr& b);

enum class BasisFamily { p, h, e };

/// The power sum, complete and elementary symmetric functions written in
/// the canonical basis of the given ring, e.g. in CR(O)
///   p_n = sum_b (-1)^b [n-b,1^b] + chi(2|n)[0],   h_n = sum_k [n-2k],
///   e_n = [1^n]. Requires n >= 1.
SymExpr ring_basis_element(Basis ring, BasisFamily family, int n);

/// The linear forms a, b, c, d on CR(GL): a and c are the signed indicator
/// sums over the A and C partition sets (the Sp and O counits), b and d the
/// plain indicators of B and D (their convolutive inverses).
enum class LinearFormKind { a, b, c, d };

Int apply_form(LinearFormKind kind, const Partition& p);

/// Convolution (x * y)(f) through the GL coproduct.
Int convolve_forms(LinearFormKind x, LinearFormKind y, const SymExpr& f);

} // namespace chr
