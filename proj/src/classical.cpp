#include "chr/classical.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "chr/errors.hpp"
#include "chr/parallel.hpp"

namespace chr {

namespace {

void require_basis(const SymExpr& f, Basis b, const char* what) {
  if (f.basis() != b)
    throw ring_mismatch_error(std::string(what) + " expects a " + basis_name(b) +
                              " expression, got " + basis_name(f.basis()));
}

void require_bracket(const SymExpr& f, const char* what) {
  if (f.basis() != Basis::O && f.basis() != Basis::Sp)
    throw ring_mismatch_error(std::string(what) + " expects an O or Sp expression, got " +
                              basis_name(f.basis()));
}

SymExpr relabel(SymExpr f, Basis b) {
  SymExpr out(b);
  for (const auto& [p, c] : f.terms()) out.add(p, c);
  return out;
}

SymExpr convert_termwise(const SymExpr& f, SeriesKind kind, Basis out_basis) {
  SymExpr gl = relabel(f, Basis::GL);
  return relabel(skew_by_series(gl, kind), out_basis);
}

} // namespace

SymExpr o_to_gl(const SymExpr& f) {
  require_basis(f, Basis::O, "o_to_gl");
  return convert_termwise(f, SeriesKind::C, Basis::GL);
}

SymExpr sp_to_gl(const SymExpr& f) {
  require_basis(f, Basis::Sp, "sp_to_gl");
  return convert_termwise(f, SeriesKind::A, Basis::GL);
}

SymExpr gl_to_o(const SymExpr& f) {
  require_basis(f, Basis::GL, "gl_to_o");
  return convert_termwise(f, SeriesKind::D, Basis::O);
}

SymExpr gl_to_sp(const SymExpr& f) {
  require_basis(f, Basis::GL, "gl_to_sp");
  return convert_termwise(f, SeriesKind::B, Basis::Sp);
}

SymExpr convert(const SymExpr& f, Basis target) {
  if (f.basis() == target) return f;
  SymExpr gl = f;
  switch (f.basis()) {
    case Basis::GL: break;
    case Basis::O: gl = o_to_gl(f); break;
    case Basis::Sp: gl = sp_to_gl(f); break;
    default:
      throw ring_mismatch_error("cannot convert a dual-ring expression");
  }
  switch (target) {
    case Basis::GL: return gl;
    case Basis::O: return gl_to_o(gl);
    case Basis::Sp: return gl_to_sp(gl);
    default:
      throw ring_mismatch_error("cannot convert into a dual ring");
  }
}

namespace {

void require_matching_bracket(const SymExpr& f, const SymExpr& g, const char* what) {
  if (f.basis() != g.basis())
    throw ring_mismatch_error(std::string(what) + ": ring tags differ (" +
                              basis_name(f.basis()) + " vs " + basis_name(g.basis()) + ")");
  require_bracket(f, what);
}

// One Newell-Littlewood task: the zeta term of [mu].[nu].
void nl_term(const Partition& mu, const Partition& nu, const Partition& zeta, const Int& coeff,
             SymExpr& acc) {
  const SymExpr& left = skew_expansion(mu, zeta);
  const SymExpr& right = skew_expansion(nu, zeta);
  for (const auto& [a, ca] : left.terms())
    for (const auto& [b, cb] : right.terms()) {
      Int c = coeff * ca * cb;
      for (const auto& [lambda, k] : product_expansion(a, b).terms()) acc.add(lambda, c * k);
    }
}

} // namespace

SymExpr nl_product_serial(const SymExpr& f, const SymExpr& g) {
  require_matching_bracket(f, g, "product");
  SymExpr out(f.basis());
  for (const auto& [mu, a] : f.terms())
    for (const auto& [nu, b] : g.terms()) {
      Int ab = a * b;
      for (const Partition& zeta : subpartitions(mu))
        if (nu.contains(zeta)) nl_term(mu, nu, zeta, ab, out);
    }
  return out;
}

SymExpr nl_product(const SymExpr& f, const SymExpr& g) {
  require_matching_bracket(f, g, "product");
  struct Task {
    const Partition* mu;
    const Partition* nu;
    Partition zeta;
    Int coeff;
  };
  std::vector<Task> tasks;
  for (const auto& [mu, a] : f.terms())
    for (const auto& [nu, b] : g.terms())
      for (const Partition& zeta : subpartitions(mu))
        if (nu.contains(zeta)) tasks.push_back({&mu, &nu, zeta, a * b});
  SymExpr out = par::indexed_reduce<SymExpr>(
      tasks.size(),
      [&](std::size_t i, SymExpr& acc) {
        const Task& t = tasks[i];
        nl_term(*t.mu, *t.nu, t.zeta, t.coeff, acc);
      },
      [](SymExpr& total, SymExpr&& local) { total += local; });
  return relabel(std::move(out), f.basis());
}

SymExpr product_o(const SymExpr& f, const SymExpr& g) {
  require_basis(f, Basis::O, "product_o");
  return nl_product(f, g);
}

SymExpr product_sp(const SymExpr& f, const SymExpr& g) {
  require_basis(f, Basis::Sp, "product_sp");
  return nl_product(f, g);
}

namespace {

TensorExpr bracket_coproduct(const SymExpr& f, SeriesKind right_series) {
  Basis b = f.basis();
  TensorExpr out(b, b);
  for (const auto& [lambda, c] : f.terms())
    for (const Partition& sigma : subpartitions(lambda)) {
      const SymExpr& left = skew_expansion(lambda, sigma);
      SymExpr right = skew_by_series(SymExpr(Basis::GL, sigma), right_series);
      for (const auto& [l, cl] : left.terms())
        for (const auto& [r, cr] : right.terms()) out.add(l, r, c * cl * cr);
    }
  return out;
}

} // namespace

TensorExpr coproduct_o(const SymExpr& f) {
  require_basis(f, Basis::O, "coproduct_o");
  return bracket_coproduct(f, SeriesKind::D);
}

TensorExpr coproduct_sp(const SymExpr& f) {
  require_basis(f, Basis::Sp, "coproduct_sp");
  return bracket_coproduct(f, SeriesKind::B);
}

Int counit_o(const SymExpr& f) {
  require_basis(f, Basis::O, "counit_o");
  Int total = 0;
  for (const auto& [p, c] : f.terms()) total += c * series_sign(SeriesKind::C, p);
  return total;
}

Int counit_sp(const SymExpr& f) {
  require_basis(f, Basis::Sp, "counit_sp");
  Int total = 0;
  for (const auto& [p, c] : f.terms()) total += c * series_sign(SeriesKind::A, p);
  return total;
}

namespace {

SymExpr bracket_antipode(const SymExpr& f, SeriesKind s1, SeriesKind s2) {
  Basis b = f.basis();
  int w = f.max_weight();
  SymExpr table = truncated_product(series_terms(s1, w), series_terms(s2, w), w);
  SymExpr out(b);
  for (const auto& [lambda, c] : f.terms()) {
    Int sc = lambda.weight() % 2 == 0 ? c : -c;
    SymExpr conj(Basis::GL, lambda.conjugate(), sc);
    for (const auto& [nu, k] : skew_by_expr(conj, table).terms()) out.add(nu, k);
  }
  return out;
}

} // namespace

SymExpr antipode_o(const SymExpr& f) {
  require_basis(f, Basis::O, "antipode_o");
  return bracket_antipode(f, SeriesKind::A, SeriesKind::D);
}

SymExpr antipode_sp(const SymExpr& f) {
  require_basis(f, Basis::Sp, "antipode_sp");
  return bracket_antipode(f, SeriesKind::B, SeriesKind::C);
}

Int scalar_o(const SymExpr& f, const SymExpr& g) {
  require_basis(f, Basis::O, "scalar_o");
  require_basis(g, Basis::O, "scalar_o");
  Int total = 0;
  for (const auto& [p, c] : f.terms()) total += c * g.coefficient(p);
  return total;
}

Int scalar_sp(const SymExpr& f, const SymExpr& g) {
  require_basis(f, Basis::Sp, "scalar_sp");
  require_basis(g, Basis::Sp, "scalar_sp");
  Int total = 0;
  for (const auto& [p, c] : f.terms()) total += c * g.coefficient(p);
  return total;
}

SymExpr adjoint_mult(const SymExpr& a, const SymExpr& f) {
  if (a.basis() != f.basis())
    throw ring_mismatch_error("adjoint: ring tags differ");
  if (a.basis() == Basis::GL) return skew_by_expr(f, a);
  return nl_product(a, f);
}

namespace {

SymExpr bracket_foulkes(const SymExpr& a, const SymExpr& f, SeriesKind series) {
  Basis b = f.basis();
  SymExpr out(b);
  for (const auto& [mu, cf] : f.terms()) {
    for (const auto& [lambda, ca] : a.terms()) {
      if (lambda.weight() > mu.weight()) continue;
      // mu / (lambda Z): multiply s_lambda by the series terms that still fit.
      SymExpr table(Basis::GL);
      for (const Partition& sigma : partitions_up_to(mu.weight() - lambda.weight())) {
        int s = series_sign(series, sigma);
        if (s == 0) continue;
        for (const auto& [tau, k] : product_expansion(lambda, sigma).terms())
          table.add(tau, s * k);
      }
      Int c = cf * ca;
      for (const auto& [nu, k] : skew_by_expr(SymExpr(Basis::GL, mu), table).terms())
        out.add(nu, c * k);
    }
  }
  return out;
}

} // namespace

SymExpr foulkes_o(const SymExpr& a, const SymExpr& f) {
  require_basis(a, Basis::O, "foulkes_o");
  require_basis(f, Basis::O, "foulkes_o");
  return bracket_foulkes(a, f, SeriesKind::D);
}

SymExpr foulkes_sp(const SymExpr& a, const SymExpr& f) {
  require_basis(a, Basis::Sp, "foulkes_sp");
  require_basis(f, Basis::Sp, "foulkes_sp");
  return bracket_foulkes(a, f, SeriesKind::B);
}

SymExpr foulkes(const SymExpr& a, const SymExpr& f) {
  if (a.basis() != f.basis())
    throw ring_mismatch_error("foulkes: ring tags differ");
  switch (f.basis()) {
    case Basis::GL: return foulkes_gl(a, f);
    case Basis::O: return foulkes_o(a, f);
    case Basis::Sp: return foulkes_sp(a, f);
    default: throw ring_mismatch_error("foulkes: dual rings are not supported");
  }
}

SymExpr ring_product(const SymExpr& f, const SymExpr& g) {
  if (f.basis() != g.basis())
    throw ring_mismatch_error("product: ring tags differ");
  return f.basis() == Basis::GL ? product(f, g) : nl_product(f, g);
}

TensorExpr ring_coproduct(const SymExpr& f) {
  switch (f.basis()) {
    case Basis::GL: return coproduct(f);
    case Basis::O: return coproduct_o(f);
    case Basis::Sp: return coproduct_sp(f);
    default: throw ring_mismatch_error("coproduct: use the dual-ring operations");
  }
}

Int ring_counit(const SymExpr& f) {
  switch (f.basis()) {
    case Basis::GL: return counit(f);
    case Basis::O: return counit_o(f);
    case Basis::Sp: return counit_sp(f);
    default: throw ring_mismatch_error("counit: use the dual-ring operations");
  }
}

SymExpr ring_antipode(const SymExpr& f) {
  switch (f.basis()) {
    case Basis::GL: return antipode(f);
    case Basis::O: return antipode_o(f);
    case Basis::Sp: return antipode_sp(f);
    default: throw ring_mismatch_error("antipode: use the dual-ring operations");
  }
}

Int ring_scalar(const SymExpr& f, const SymExpr& g) {
  if (f.basis() != g.basis())
    throw ring_mismatch_error("scalar product: ring tags differ");
  switch (f.basis()) {
    case Basis::GL: return schur_hall(f, g);
    case Basis::O: return scalar_o(f, g);
    case Basis::Sp: return scalar_sp(f, g);
    default: throw ring_mismatch_error("scalar product: not defined for dual rings");
  }
}

TensorExpr tensor_product(const TensorExpr& a, const TensorExpr& b) {
  if (a.bases() != b.bases())
    throw ring_mismatch_error("tensor product: basis pairs differ");
  auto [lb, rb] = a.bases();
  TensorExpr out(lb, rb);
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      SymExpr left = ring_product(SymExpr(lb, x.first), SymExpr(lb, y.first));
      SymExpr right = ring_product(SymExpr(rb, x.second), SymExpr(rb, y.second));
      Int c = cx * cy;
      for (const auto& [l, cl] : left.terms())
        for (const auto& [r, cr] : right.terms()) out.add(l, r, c * cl * cr);
    }
  return out;
}

SymExpr ring_basis_element(Basis ring, BasisFamily family, int n) {
  if (n < 1) throw std::invalid_argument("basis element index must be >= 1");
  std::vector<int> row(1, n);
  std::vector<int> column(static_cast<std::size_t>(n), 1);
  SymExpr out(ring);
  switch (family) {
    case BasisFamily::h:
      switch (ring) {
        case Basis::GL:
          out.add(Partition(row), 1);
          return out;
        case Basis::O:  // [n/D] = sum_k [n-2k]
          for (int k = n; k >= 0; k -= 2)
            out.add(Partition(std::vector<int>(k == 0 ? 0 : 1, k)), 1);
          return out;
        case Basis::Sp:
          out.add(Partition(row), 1);
          return out;
        default: break;
      }
      break;
    case BasisFamily::e:
      switch (ring) {
        case Basis::GL:
        case Basis::O:  // [1^n/D] = [1^n]
          out.add(Partition(column), 1);
          return out;
        case Basis::Sp:  // <1^n/B> = sum_r <1^{n-2r}>
          for (int k = n; k >= 0; k -= 2)
            out.add(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), 1);
          return out;
        default: break;
      }
      break;
    case BasisFamily::p: {
      if (ring == Basis::DualO || ring == Basis::DualSp) break;
      // hook sum, plus the chi(2|n) unit correction away from GL
      for (int b = 0; b <= n - 1; ++b) {
        std::vector<int> hook{n - b};
        hook.insert(hook.end(), static_cast<std::size_t>(b), 1);
        out.add(Partition(std::move(hook)), b % 2 == 0 ? 1 : -1);
      }
      if (ring != Basis::GL && n % 2 == 0) out.add(Partition{}, 1);
      return out;
    }
  }
  throw ring_mismatch_error("basis elements exist only in the GL, O and Sp rings");
}

Int apply_form(LinearFormKind kind, const Partition& p) {
  switch (kind) {
    case LinearFormKind::a: return series_sign(SeriesKind::A, p);
    case LinearFormKind::b: return series_sign(SeriesKind::B, p);
    case LinearFormKind::c: return series_sign(SeriesKind::C, p);
    case LinearFormKind::d: return series_sign(SeriesKind::D, p);
  }
  return 0;
}

Int convolve_forms(LinearFormKind x, LinearFormKind y, const SymExpr& f) {
  if (f.basis() != Basis::GL)
    throw ring_mismatch_error("linear forms act on GL expressions");
  Int total = 0;
  for (const auto& [pair, c] : coproduct(f).terms()) {
    Int fx = apply_form(x, pair.first);
    if (fx == 0) continue;
    total += c * fx * apply_form(y, pair.second);
  }
  return total;
}

} // namespace chr
