#include "chr/schur.hpp"

#include <utility>
#include <vector>

#include "chr/parallel.hpp"

namespace chr {

namespace {

void require_gl(const SymExpr& f, const char* what) {
  if (f.basis() != Basis::GL)
    throw ring_mismatch_error(std::string(what) + " expects a GL expression, got " +
                              basis_name(f.basis()));
}

using TermRef = std::pair<const Partition*, const Int*>;

std::vector<TermRef> term_refs(const SymExpr& f) {
  std::vector<TermRef> v;
  v.reserve(f.size());
  for (const auto& [p, c] : f.terms()) v.push_back({&p, &c});
  return v;
}

} // namespace

SymExpr product_serial(const SymExpr& f, const SymExpr& g) {
  require_gl(f, "product");
  require_gl(g, "product");
  SymExpr out(Basis::GL);
  for (const auto& [mu, a] : f.terms())
    for (const auto& [nu, b] : g.terms()) {
      Int ab = a * b;
      for (const auto& [lambda, c] : product_expansion(mu, nu).terms())
        out.add(lambda, ab * c);
    }
  return out;
}

SymExpr product(const SymExpr& f, const SymExpr& g) {
  require_gl(f, "product");
  require_gl(g, "product");
  auto fs = term_refs(f);
  auto gs = term_refs(g);
  std::size_t n = fs.size() * gs.size();
  auto out = par::indexed_reduce<SymExpr>(
      n,
      [&](std::size_t i, SymExpr& acc) {
        const auto& [mu, a] = fs[i / gs.size()];
        const auto& [nu, b] = gs[i % gs.size()];
        Int ab = *a * *b;
        for (const auto& [lambda, c] : product_expansion(*mu, *nu).terms())
          acc.add(lambda, ab * c);
      },
      [](SymExpr& total, SymExpr&& local) { total += local; });
  return out;
}

SymExpr skew(const Partition& lambda, const Partition& mu) {
  return skew_expansion(lambda, mu);
}

SymExpr skew_by_expr(const SymExpr& f, const SymExpr& a) {
  require_gl(f, "skew");
  require_gl(a, "skew");
  SymExpr out(Basis::GL);
  for (const auto& [lambda, cf] : f.terms())
    for (const auto& [mu, ca] : a.terms()) {
      Int c = cf * ca;
      for (const auto& [nu, k] : skew_expansion(lambda, mu).terms()) out.add(nu, c * k);
    }
  return out;
}

TensorExpr coproduct(const SymExpr& f) {
  require_gl(f, "coproduct");
  TensorExpr out(Basis::GL, Basis::GL);
  for (const auto& [lambda, c] : f.terms())
    for (const Partition& mu : subpartitions(lambda))
      for (const auto& [nu, k] : skew_expansion(lambda, mu).terms())
        out.add(mu, nu, c * k);
  return out;
}

SymExpr antipode(const SymExpr& f) {
  require_gl(f, "antipode");
  SymExpr out(Basis::GL);
  for (const auto& [lambda, c] : f.terms())
    out.add(lambda.conjugate(), lambda.weight() % 2 == 0 ? c : -c);
  return out;
}

Int counit(const SymExpr& f) {
  require_gl(f, "counit");
  return f.coefficient(Partition{});
}

Int schur_hall(const SymExpr& f, const SymExpr& g) {
  require_gl(f, "scalar product");
  require_gl(g, "scalar product");
  Int total = 0;
  // Walk the smaller map.
  const SymExpr& small = f.size() <= g.size() ? f : g;
  const SymExpr& large = f.size() <= g.size() ? g : f;
  for (const auto& [p, c] : small.terms()) total += c * large.coefficient(p);
  return total;
}

namespace {

SymExpr one_part_h(int n) {
  return SymExpr(Basis::GL, Partition(std::vector<int>(1, n)));
}

SymExpr one_part_e(int n) {
  return SymExpr(Basis::GL, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

// Hook expansion p_n = sum_{a+b+1=n} (-1)^b s_{(a+1,1^b)}.
SymExpr one_part_p(int n) {
  SymExpr out(Basis::GL);
  for (int b = 0; b <= n - 1; ++b) {
    std::vector<int> hook{n - b};
    hook.insert(hook.end(), static_cast<std::size_t>(b), 1);
    out.add(Partition(std::move(hook)), b % 2 == 0 ? 1 : -1);
  }
  return out;
}

template <class OnePart>
SymExpr multiplicative(const Partition& lambda, OnePart&& one) {
  SymExpr out = SymExpr::unit(Basis::GL);
  for (int part : lambda.parts()) out = product(out, one(part));
  return out;
}

} // namespace

SymExpr from_h(const Partition& lambda) { return multiplicative(lambda, one_part_h); }
SymExpr from_e(const Partition& lambda) { return multiplicative(lambda, one_part_e); }
SymExpr from_p(const Partition& lambda) { return multiplicative(lambda, one_part_p); }

SymExpr foulkes_gl(const SymExpr& a, const SymExpr& f) { return skew_by_expr(f, a); }

} // namespace chr
