#pragma once

#include <utility>

#include "chr/expr.hpp"
#include "chr/schur.hpp"

namespace chr {

// The universal rational character ring CR(GL)rat on Lambda (x) Lambda-bar.
// Labels are pairs (lambda; mu-bar): lambda indexes the covariant slot, mu
// the contravariant one. Two bases coexist: the irreducible mixed characters
// {lambda;mu-bar} and the tensor basis {lambda} (x) {mu-bar}; the conversion
// kernels are the J and K Cauchy series, which never get materialised --
// every conversion is a finite signed double-skew sum.

enum class RationalBasis { Mixed, Tensor };

using PartitionPair = std::pair<Partition, Partition>;

class RationalExpr {
 public:
  RationalExpr() = default;
  explicit RationalExpr(RationalBasis b) : basis_(b) {}
  RationalExpr(RationalBasis b, const Partition& cov, const Partition& contra,
               const Int& coeff = 1)
      : basis_(b) {
    terms_.add({cov, contra}, coeff);
  }

  static RationalExpr unit() {
    return RationalExpr(RationalBasis::Mixed, Partition{}, Partition{});
  }

  RationalBasis basis() const { return basis_; }
  const LinearCombo<PartitionPair>& terms() const { return terms_; }

  void add(const Partition& cov, const Partition& contra, const Int& coeff) {
    terms_.add({cov, contra}, coeff);
  }
  Int coefficient(const Partition& cov, const Partition& contra) const {
    return terms_.coefficient({cov, contra});
  }
  bool is_zero() const { return terms_.is_zero(); }

  RationalExpr& operator+=(const RationalExpr& o);
  RationalExpr& operator-=(const RationalExpr& o);
  RationalExpr& operator*=(const Int& k) {
    terms_ *= k;
    return *this;
  }
  friend RationalExpr operator+(RationalExpr a, const RationalExpr& b) { return a += b; }
  friend RationalExpr operator-(RationalExpr a, const RationalExpr& b) { return a -= b; }

  bool operator==(const RationalExpr& o) const {
    return basis_ == o.basis_ && terms_ == o.terms_;
  }

 private:
  RationalBasis basis_ = RationalBasis::Mixed;
  LinearCombo<PartitionPair> terms_;
};

/// {lambda} (x) {mu-bar} = sum_eta {lambda/eta; (mu/eta)-bar}.
RationalExpr tensor_to_mixed(const RationalExpr& f);

/// {lambda; mu-bar} = sum_zeta (-1)^{|zeta|} {lambda/zeta} (x) {(mu/zeta')-bar};
/// exact inverse of tensor_to_mixed.
RationalExpr mixed_to_tensor(const RationalExpr& f);

/// Abramsky-King product of mixed characters; accepts either basis and
/// returns the mixed basis.
RationalExpr rational_product(const RationalExpr& f, const RationalExpr& g);

/// Coproduct carrier: combination of pairs of mixed labels.
class RationalTensorExpr {
 public:
  using Label = std::pair<PartitionPair, PartitionPair>;

  const LinearCombo<Label>& terms() const { return terms_; }
  void add(const PartitionPair& l, const PartitionPair& r, const Int& coeff) {
    terms_.add({l, r}, coeff);
  }
  bool is_zero() const { return terms_.is_zero(); }
  RationalTensorExpr& operator-=(const RationalTensorExpr& o) {
    terms_ -= o.terms_;
    return *this;
  }
  bool operator==(const RationalTensorExpr& o) const = default;

 private:
  LinearCombo<Label> terms_;
};

/// Delta({mu;nu-bar}) = sum_{sigma,tau,rho} {mu/sigma;(nu/tau)-bar} (x)
/// {sigma/rho;(tau/rho)-bar}; exact and finite.
RationalTensorExpr rational_coproduct(const RationalExpr& f);

Int rational_counit(const RationalExpr& f);

/// S({mu;nu-bar}) = (-1)^{|mu|+|nu|} sum_rho {mu'/rho;(nu'/rho)-bar}.
RationalExpr rational_antipode(const RationalExpr& f);

/// Kronecker pairing of mixed-basis coefficients.
Int rational_scalar(const RationalExpr& f, const RationalExpr& g);

} // namespace chr
