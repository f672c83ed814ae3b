#include "chr/dual.hpp"

#include <algorithm>
#include <string>

#include "chr/errors.hpp"

namespace chr {

namespace {

void require_exact_at(const DualExpr& f, int cutoff, const char* what) {
  if (f.cutoff() < cutoff)
    throw cutoff_error(std::string(what) + ": operand is exact only up to weight " +
                       std::to_string(f.cutoff()) + ", need " + std::to_string(cutoff));
}

void require_same_ring(const DualExpr& f, const DualExpr& g, const char* what) {
  if (f.ring() != g.ring())
    throw ring_mismatch_error(std::string(what) + ": ring tags differ (" +
                              basis_name(f.ring()) + " vs " + basis_name(g.ring()) + ")");
}

// The series mate of the starred basis: [lambda]* = {lambda}.D, <lambda>* = {lambda}.B.
SeriesKind companion(Basis ring) {
  return ring == Basis::DualO ? SeriesKind::D : SeriesKind::B;
}

// Antipode series pair: lambda'.B.C for O*, lambda'.D.A for Sp*.
std::pair<SeriesKind, SeriesKind> antipode_pair(Basis ring) {
  return ring == Basis::DualO ? std::pair{SeriesKind::B, SeriesKind::C}
                              : std::pair{SeriesKind::D, SeriesKind::A};
}

SeriesKind unit_series(Basis ring) {
  return ring == Basis::DualO ? SeriesKind::C : SeriesKind::A;
}

} // namespace

DualExpr DualExpr::truncated(int w) const {
  DualExpr out(ring_, std::min(cutoff_, w));
  for (const auto& [p, c] : terms_)
    if (p.weight() <= w) out.add(p, c);
  return out;
}

DualExpr& DualExpr::operator+=(const DualExpr& o) {
  require_same_ring(*this, o, "+");
  cutoff_ = std::min(cutoff_, o.cutoff_);
  terms_ += o.terms();
  return *this;
}

DualExpr& DualExpr::operator-=(const DualExpr& o) {
  require_same_ring(*this, o, "-");
  cutoff_ = std::min(cutoff_, o.cutoff_);
  terms_ -= o.terms();
  return *this;
}

DualExpr dual_unit(Basis ring, int cutoff) {
  DualExpr out(ring, cutoff);
  for (const auto& [p, c] : series_terms(unit_series(ring), cutoff).body.terms())
    out.add(p, c);
  return out;
}

SymExpr dual_to_gl(const DualExpr& f, int cutoff) {
  require_exact_at(f, cutoff, "dual_to_gl");
  SymExpr series = series_terms(companion(f.ring()), cutoff).body;
  SymExpr out(Basis::GL);
  for (const auto& [lambda, c] : f.terms()) {
    if (lambda.weight() > cutoff) continue;
    for (const auto& [delta, s] : series.terms()) {
      if (lambda.weight() + delta.weight() > cutoff) continue;
      Int cs = c * s;
      for (const auto& [tau, k] : product_expansion(lambda, delta).terms())
        out.add(tau, cs * k);
    }
  }
  return out;
}

DualExpr dual_product(const DualExpr& f, const DualExpr& g, int cutoff) {
  require_same_ring(f, g, "dual product");
  require_exact_at(f, cutoff, "dual product");
  require_exact_at(g, cutoff, "dual product");
  SymExpr series = series_terms(companion(f.ring()), cutoff).body;
  DualExpr out(f.ring(), cutoff);
  for (const auto& [mu, a] : f.terms()) {
    if (mu.weight() > cutoff) continue;
    for (const auto& [nu, b] : g.terms()) {
      if (mu.weight() + nu.weight() > cutoff) continue;
      Int ab = a * b;
      for (const auto& [sigma, k] : product_expansion(mu, nu).terms()) {
        for (const auto& [delta, s] : series.terms()) {
          if (sigma.weight() + delta.weight() > cutoff) continue;
          Int c = ab * k * s;
          for (const auto& [tau, k2] : product_expansion(sigma, delta).terms())
            out.add(tau, c * k2);
        }
      }
    }
  }
  return out;
}

TensorExpr dual_coproduct(const DualExpr& f, int cutoff) {
  // Both slots grow with zeta, so a slot-w guarantee needs terms of f up to
  // weight 2*cutoff.
  if (f.cutoff() != DualExpr::kUnlimited && f.cutoff() < 2 * cutoff)
    throw cutoff_error("dual coproduct: operand is exact only up to weight " +
                       std::to_string(f.cutoff()) + ", need " + std::to_string(2 * cutoff));
  TensorExpr out(f.ring(), f.ring());
  for (const auto& [lambda, c] : f.terms()) {
    for (const Partition& sigma : subpartitions(lambda)) {
      const SymExpr& skewed = skew_expansion(lambda, sigma);
      int zeta_max = cutoff - std::max(lambda.weight() - sigma.weight(), sigma.weight());
      for (const Partition& zeta : partitions_up_to(std::max(zeta_max, -1))) {
        // left slot: (lambda/sigma).zeta, right slot: sigma.zeta
        SymExpr left(Basis::GL);
        for (const auto& [x, cx] : skewed.terms())
          for (const auto& [l, k] : product_expansion(x, zeta).terms()) left.add(l, cx * k);
        const SymExpr& right = product_expansion(sigma, zeta);
        for (const auto& [l, cl] : left.terms()) {
          if (l.weight() > cutoff) continue;
          for (const auto& [r, cr] : right.terms()) {
            if (r.weight() > cutoff) continue;
            out.add(l, r, c * cl * cr);
          }
        }
      }
    }
  }
  return out;
}

Int dual_counit(const DualExpr& f) { return f.coefficient(Partition{}); }

DualExpr dual_antipode(const DualExpr& f, int cutoff) {
  require_exact_at(f, cutoff, "dual antipode");
  auto [s1, s2] = antipode_pair(f.ring());
  SymExpr table = truncated_product(series_terms(s1, cutoff), series_terms(s2, cutoff), cutoff);
  DualExpr out(f.ring(), cutoff);
  for (const auto& [lambda, c] : f.terms()) {
    if (lambda.weight() > cutoff) continue;
    Int sc = lambda.weight() % 2 == 0 ? c : -c;
    Partition conj = lambda.conjugate();
    for (const auto& [tau, s] : table.terms()) {
      if (conj.weight() + tau.weight() > cutoff) continue;
      Int cs = sc * s;
      for (const auto& [out_label, k] : product_expansion(conj, tau).terms())
        out.add(out_label, cs * k);
    }
  }
  return out;
}

} // namespace chr
