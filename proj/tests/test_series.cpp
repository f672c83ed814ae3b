#include "doctest.h"

#include "chr/classical.hpp"
#include "chr/series.hpp"

using namespace chr;

namespace {

SymExpr gl(const Partition& p) { return SymExpr(Basis::GL, p); }

const SeriesKind kAll[] = {SeriesKind::A, SeriesKind::B, SeriesKind::C, SeriesKind::D,
                           SeriesKind::E, SeriesKind::F, SeriesKind::G, SeriesKind::H,
                           SeriesKind::L, SeriesKind::M, SeriesKind::P, SeriesKind::Q};

} // namespace

TEST_CASE("series terms") {
  SymExpr d4 = series_terms(SeriesKind::D, 4).body;
  SymExpr want_d = SymExpr::unit(Basis::GL) + gl(Partition{2}) + gl(Partition{4}) +
                   gl(Partition{2, 2});
  CHECK(d4 == want_d);

  SymExpr a2 = series_terms(SeriesKind::A, 2).body;
  CHECK(a2 == SymExpr::unit(Basis::GL) - gl(Partition{1, 1}));

  SymExpr l2 = series_terms(SeriesKind::L, 2).body;
  CHECK(l2 == SymExpr::unit(Basis::GL) - gl(Partition{1}) + gl(Partition{1, 1}));

  // every series starts with {0} at +1
  for (SeriesKind k : kAll) CHECK(series_terms(k, 5).body.coefficient(Partition{}) == 1);

  // E picks up mixed signs: (1) enters with -1, (2,1) with +1
  SymExpr e3 = series_terms(SeriesKind::E, 3).body;
  CHECK(e3.coefficient(Partition{1}) == -1);
  CHECK(e3.coefficient(Partition{2, 1}) == 1);
  SymExpr g3 = series_terms(SeriesKind::G, 3).body;
  CHECK(g3.coefficient(Partition{1}) == 1);
  CHECK(g3.coefficient(Partition{2, 1}) == -1);
}

TEST_CASE("series skew") {
  CHECK(skew_by_series(gl(Partition{2, 1}), SeriesKind::C) ==
        gl(Partition{2, 1}) - gl(Partition{1}));
  CHECK(skew_by_series(SymExpr::unit(Basis::GL), SeriesKind::F) == SymExpr::unit(Basis::GL));
  CHECK(skew_by_series(gl(Partition{1, 1}), SeriesKind::B) ==
        gl(Partition{1, 1}) + SymExpr::unit(Basis::GL));

  // parallel kernel agrees with the serial reference
  SymExpr f = gl(Partition{3, 2, 1}) - 2 * gl(Partition{4, 2}) + gl(Partition{2, 2, 1, 1});
  for (SeriesKind k : kAll) CHECK(skew_by_series(f, k) == skew_by_series_serial(f, k));
}

TEST_CASE("mutually inverse pairs up to weight 8") {
  const std::pair<SeriesKind, SeriesKind> pairs[] = {
      {SeriesKind::A, SeriesKind::B}, {SeriesKind::C, SeriesKind::D},
      {SeriesKind::E, SeriesKind::F}, {SeriesKind::G, SeriesKind::H},
      {SeriesKind::L, SeriesKind::M}, {SeriesKind::P, SeriesKind::Q}};
  for (auto [x, y] : pairs) {
    SymExpr prod = truncated_product(series_terms(x, 8), series_terms(y, 8), 8);
    CHECK(prod == SymExpr::unit(Basis::GL));
  }
}

TEST_CASE("cross identities up to weight 8") {
  auto tp = [](SeriesKind x, SeriesKind y, int w) {
    return truncated_product(series_terms(x, w), series_terms(y, w), w);
  };
  // LA = PC = E, MB = QD = F, MC = QA = G, LD = PB = H
  CHECK(tp(SeriesKind::L, SeriesKind::A, 8) == series_terms(SeriesKind::E, 8).body);
  CHECK(tp(SeriesKind::P, SeriesKind::C, 8) == series_terms(SeriesKind::E, 8).body);
  CHECK(tp(SeriesKind::M, SeriesKind::B, 8) == series_terms(SeriesKind::F, 8).body);
  CHECK(tp(SeriesKind::Q, SeriesKind::D, 8) == series_terms(SeriesKind::F, 8).body);
  CHECK(tp(SeriesKind::M, SeriesKind::C, 8) == series_terms(SeriesKind::G, 8).body);
  CHECK(tp(SeriesKind::Q, SeriesKind::A, 8) == series_terms(SeriesKind::G, 8).body);
  CHECK(tp(SeriesKind::L, SeriesKind::D, 8) == series_terms(SeriesKind::H, 8).body);
  CHECK(tp(SeriesKind::P, SeriesKind::B, 8) == series_terms(SeriesKind::H, 8).body);
}

TEST_CASE("insufficient operand cutoff is rejected") {
  CHECK_THROWS_AS(
      truncated_product(series_terms(SeriesKind::A, 4), series_terms(SeriesKind::B, 6), 6),
      cutoff_error);
}

TEST_CASE("cut coproducts") {
  TensorExpr l = series_cut_coproduct(SeriesKind::L, 10);
  CHECK(l.size() == 1);
  CHECK(l.coefficient(Partition{}, Partition{}) == 1);

  TensorExpr d = series_cut_coproduct(SeriesKind::D, 2);
  CHECK(d.size() == 2);
  CHECK(d.coefficient(Partition{}, Partition{}) == 1);
  CHECK(d.coefficient(Partition{1}, Partition{1}) == 1);

  TensorExpr c = series_cut_coproduct(SeriesKind::C, 2);
  CHECK(c.coefficient(Partition{1}, Partition{1}) == -1);

  // Cauchy kernel shape: the cut coproduct of B/D/F/H lists {sigma}(x){sigma}
  TensorExpr b = series_cut_coproduct(SeriesKind::B, 8);
  for (const Partition& sigma : partitions_up_to(4))
    CHECK(b.coefficient(sigma, sigma) == 1);
  CHECK(b.size() == partitions_up_to(4).size());
}

TEST_CASE("coproduct factorisation Delta(Z) = (Z x Z) Delta'(Z) up to weight 5") {
  const int w = 5;
  for (SeriesKind k : kAll) {
    SymExpr body = series_terms(k, w).body;
    TensorExpr lhs = coproduct(body).truncated(w, w);
    // drop tensor terms of total weight > w
    TensorExpr lhs_cut(Basis::GL, Basis::GL);
    for (const auto& [pq, c] : lhs.terms())
      if (pq.first.weight() + pq.second.weight() <= w) lhs_cut.add(pq.first, pq.second, c);
    TensorExpr rhs_full = tensor_product(tensor_of(body, body), series_cut_coproduct(k, w));
    TensorExpr rhs(Basis::GL, Basis::GL);
    for (const auto& [pq, c] : rhs_full.terms())
      if (pq.first.weight() + pq.second.weight() <= w) rhs.add(pq.first, pq.second, c);
    CHECK(lhs_cut == rhs);
  }
}

TEST_CASE("signed domino sum equals AC") {
  // sum_zeta (-1)^{|zeta|} {zeta.zeta'} = A.C, truncated to weight 8
  SymExpr lhs(Basis::GL);
  for (const Partition& zeta : partitions_up_to(4)) {
    SymExpr piece = product(gl(zeta), gl(zeta.conjugate()));
    if (zeta.weight() % 2 == 1) piece *= Int(-1);
    lhs += piece;
  }
  SymExpr rhs = truncated_product(series_terms(SeriesKind::A, 8), series_terms(SeriesKind::C, 8), 8);
  CHECK(lhs == rhs);

  // and the unsigned sum equals B.D
  SymExpr lhs2(Basis::GL);
  for (const Partition& sigma : partitions_up_to(4))
    lhs2 += product(gl(sigma), gl(sigma));
  SymExpr rhs2 =
      truncated_product(series_terms(SeriesKind::B, 8), series_terms(SeriesKind::D, 8), 8);
  CHECK(lhs2 == rhs2);
}
