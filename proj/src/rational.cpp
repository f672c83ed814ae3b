#include "chr/rational.hpp"

#include <string>

#include "chr/errors.hpp"
#include "chr/lr.hpp"

namespace chr {

namespace {

void require_basis(const RationalExpr& f, RationalBasis b, const char* what) {
  if (f.basis() != b)
    throw ring_mismatch_error(std::string(what) + ": expression is in the wrong basis");
}

void require_same_basis(const RationalExpr& f, const RationalExpr& g, const char* what) {
  if (f.basis() != g.basis())
    throw ring_mismatch_error(std::string(what) + ": mixed bases");
}

} // namespace

RationalExpr& RationalExpr::operator+=(const RationalExpr& o) {
  require_same_basis(*this, o, "+");
  terms_ += o.terms();
  return *this;
}

RationalExpr& RationalExpr::operator-=(const RationalExpr& o) {
  require_same_basis(*this, o, "-");
  terms_ -= o.terms();
  return *this;
}

RationalExpr tensor_to_mixed(const RationalExpr& f) {
  require_basis(f, RationalBasis::Tensor, "tensor_to_mixed");
  RationalExpr out(RationalBasis::Mixed);
  for (const auto& [lm, c] : f.terms()) {
    const auto& [lambda, mu] = lm;
    for (const Partition& eta : subpartitions(lambda)) {
      if (!mu.contains(eta)) continue;
      const SymExpr& cov = skew_expansion(lambda, eta);
      const SymExpr& contra = skew_expansion(mu, eta);
      for (const auto& [a, ca] : cov.terms())
        for (const auto& [b, cb] : contra.terms()) out.add(a, b, c * ca * cb);
    }
  }
  return out;
}

RationalExpr mixed_to_tensor(const RationalExpr& f) {
  require_basis(f, RationalBasis::Mixed, "mixed_to_tensor");
  RationalExpr out(RationalBasis::Tensor);
  for (const auto& [lm, c] : f.terms()) {
    const auto& [lambda, mu] = lm;
    for (const Partition& zeta : subpartitions(lambda)) {
      Partition zc = zeta.conjugate();
      if (!mu.contains(zc)) continue;
      Int sign = zeta.weight() % 2 == 0 ? c : -c;
      const SymExpr& cov = skew_expansion(lambda, zeta);
      const SymExpr& contra = skew_expansion(mu, zc);
      for (const auto& [a, ca] : cov.terms())
        for (const auto& [b, cb] : contra.terms()) out.add(a, b, sign * ca * cb);
    }
  }
  return out;
}

RationalExpr rational_product(const RationalExpr& f, const RationalExpr& g) {
  RationalExpr fm = f.basis() == RationalBasis::Mixed ? f : tensor_to_mixed(f);
  RationalExpr gm = g.basis() == RationalBasis::Mixed ? g : tensor_to_mixed(g);
  RationalExpr out(RationalBasis::Mixed);
  // {kappa;lambda-bar}.{mu;nu-bar}
  //   = sum_{sigma,tau} {(kappa/sigma).(mu/tau); ((lambda/tau).(nu/sigma))-bar}
  for (const auto& [kl, c1] : fm.terms()) {
    const auto& [kappa, lambda] = kl;
    for (const auto& [mn, c2] : gm.terms()) {
      const auto& [mu, nu] = mn;
      Int c = c1 * c2;
      for (const Partition& sigma : subpartitions(kappa)) {
        if (!nu.contains(sigma)) continue;
        for (const Partition& tau : subpartitions(mu)) {
          if (!lambda.contains(tau)) continue;
          SymExpr cov(Basis::GL);
          for (const auto& [a, ca] : skew_expansion(kappa, sigma).terms())
            for (const auto& [b, cb] : skew_expansion(mu, tau).terms())
              for (const auto& [l, k] : product_expansion(a, b).terms())
                cov.add(l, ca * cb * k);
          SymExpr contra(Basis::GL);
          for (const auto& [a, ca] : skew_expansion(lambda, tau).terms())
            for (const auto& [b, cb] : skew_expansion(nu, sigma).terms())
              for (const auto& [l, k] : product_expansion(a, b).terms())
                contra.add(l, ca * cb * k);
          for (const auto& [x, cx] : cov.terms())
            for (const auto& [y, cy] : contra.terms()) out.add(x, y, c * cx * cy);
        }
      }
    }
  }
  return out;
}

RationalTensorExpr rational_coproduct(const RationalExpr& f) {
  require_basis(f, RationalBasis::Mixed, "rational_coproduct");
  RationalTensorExpr out;
  for (const auto& [mn, c] : f.terms()) {
    const auto& [mu, nu] = mn;
    for (const Partition& sigma : subpartitions(mu)) {
      const SymExpr& left_cov = skew_expansion(mu, sigma);
      for (const Partition& tau : subpartitions(nu)) {
        const SymExpr& left_contra = skew_expansion(nu, tau);
        for (const Partition& rho : subpartitions(sigma)) {
          if (!tau.contains(rho)) continue;
          const SymExpr& right_cov = skew_expansion(sigma, rho);
          const SymExpr& right_contra = skew_expansion(tau, rho);
          for (const auto& [a, ca] : left_cov.terms())
            for (const auto& [b, cb] : left_contra.terms()) {
              Int cl = c * ca * cb;
              for (const auto& [x, cx] : right_cov.terms())
                for (const auto& [y, cy] : right_contra.terms())
                  out.add({a, b}, {x, y}, cl * cx * cy);
            }
        }
      }
    }
  }
  return out;
}

Int rational_counit(const RationalExpr& f) {
  require_basis(f, RationalBasis::Mixed, "rational_counit");
  return f.coefficient(Partition{}, Partition{});
}

RationalExpr rational_antipode(const RationalExpr& f) {
  require_basis(f, RationalBasis::Mixed, "rational_antipode");
  RationalExpr out(RationalBasis::Mixed);
  for (const auto& [mn, c] : f.terms()) {
    Partition mc = mn.first.conjugate();
    Partition nc = mn.second.conjugate();
    Int sign = (mc.weight() + nc.weight()) % 2 == 0 ? c : -c;
    for (const Partition& rho : subpartitions(mc)) {
      if (!nc.contains(rho)) continue;
      for (const auto& [a, ca] : skew_expansion(mc, rho).terms())
        for (const auto& [b, cb] : skew_expansion(nc, rho).terms())
          out.add(a, b, sign * ca * cb);
    }
  }
  return out;
}

Int rational_scalar(const RationalExpr& f, const RationalExpr& g) {
  require_basis(f, RationalBasis::Mixed, "rational_scalar");
  require_basis(g, RationalBasis::Mixed, "rational_scalar");
  Int total = 0;
  for (const auto& [lm, c] : f.terms()) total += c * g.terms().coefficient(lm);
  return total;
}

} // namespace chr
