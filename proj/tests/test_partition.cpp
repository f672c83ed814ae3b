#include "doctest.h"

#include <numeric>
#include <set>
#include <vector>

#include "chr/partition.hpp"

using namespace chr;

namespace {

// Independent conjugation oracle: count column occupancy straight off the
// diagram description.
Partition conjugate_by_columns(const Partition& p) {
  std::vector<int> cols;
  for (int c = 0; c < p.part(0); ++c) {
    int h = 0;
    for (int r = 0; r < p.length(); ++r)
      if (p.part(r) > c) ++h;
    cols.push_back(h);
  }
  return Partition(cols);
}

// Partition counting via the Euler pentagonal recurrence, independent of the
// generator.
std::vector<long> partition_counts(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long total = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      long sign = k % 2 == 1 ? 1 : -1;
      if (g1 <= m) total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p;
}

} // namespace

TEST_CASE("canonical form") {
  CHECK(Partition{}.weight() == 0);
  CHECK(Partition{3, 1}.weight() == 4);
  CHECK(Partition({2, 0, 0}) == Partition{2});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugation") {
  CHECK(Partition{7, 4, 4, 2}.conjugate() == Partition{4, 4, 3, 3, 1, 1, 1});
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition{3, 1}.conjugate() == conjugate_by_columns(Partition{3, 1}));
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  for (const Partition& p : partitions_up_to(10)) {
    CHECK(p.conjugate() == conjugate_by_columns(p));
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conjugate().weight() == p.weight());
  }
}

TEST_CASE("frobenius coordinates") {
  FrobeniusForm f = frobenius(Partition{7, 4, 4, 2});
  CHECK(f.arms == std::vector<int>{6, 2, 1});
  CHECK(f.legs == std::vector<int>{3, 2, 0});
  CHECK(f.rank() == 3);

  CHECK(frobenius(Partition{}).rank() == 0);

  FrobeniusForm g = frobenius(Partition{2, 2});
  CHECK(g.arms == std::vector<int>{1, 0});
  CHECK(g.legs == std::vector<int>{1, 0});

  for (const Partition& p : partitions_up_to(10)) {
    CHECK(from_frobenius(frobenius(p)) == p);
    FrobeniusForm a = frobenius(p);
    FrobeniusForm b = frobenius(p.conjugate());
    CHECK(a.arms == b.legs);
    CHECK(a.legs == b.arms);
  }
}

TEST_CASE("z_lambda") {
  CHECK(z_of(Partition{1, 1, 1}) == 6);
  CHECK(z_of(Partition{}) == 1);
  CHECK(z_of(Partition{2, 1}) == 2);
  CHECK(z_of(Partition{3, 3, 2, 1, 1, 1}) == 3 * 3 * 2 * 2 * 1 * 1 * 1 * 6);
}

TEST_CASE("set membership") {
  CHECK(set_contains(PartitionSetKind::EvenRows, Partition{4, 2, 2}));
  CHECK_FALSE(set_contains(PartitionSetKind::EvenRows, Partition{3, 2}));
  CHECK(set_contains(PartitionSetKind::EvenColumns, Partition{2, 2, 1, 1}));
  CHECK_FALSE(set_contains(PartitionSetKind::EvenColumns, Partition{2, 1}));
  CHECK(set_contains(PartitionSetKind::FrobeniusMinus, Partition{1, 1}));
  CHECK(set_contains(PartitionSetKind::FrobeniusPlus, Partition{2}));
  CHECK(set_contains(PartitionSetKind::FrobeniusZero, Partition{2, 1}));

  // Frob(0) up to weight 10 is exactly the self-conjugate partitions.
  for (const Partition& p : partitions_up_to(10))
    CHECK(set_contains(PartitionSetKind::FrobeniusZero, p) == (p == p.conjugate()));

  // EvenColumns and EvenRows swap under conjugation.
  for (const Partition& p : partitions_up_to(10)) {
    if (set_contains(PartitionSetKind::EvenColumns, p))
      CHECK(set_contains(PartitionSetKind::EvenRows, p.conjugate()));
    if (set_contains(PartitionSetKind::EvenRows, p))
      CHECK(set_contains(PartitionSetKind::EvenColumns, p.conjugate()));
  }
}

TEST_CASE("enumeration order and contents") {
  auto all3 = partitions_up_to(3);
  std::vector<Partition> want{Partition{},     Partition{1},    Partition{2},
                              Partition{1, 1}, Partition{3},    Partition{2, 1},
                              Partition{1, 1, 1}};
  CHECK(all3 == want);

  auto even4 = partitions_up_to(4, PartitionSetKind::EvenRows);
  CHECK(even4 == std::vector<Partition>{Partition{}, Partition{2}, Partition{4}, Partition{2, 2}});

  auto frob4 = partitions_up_to(4, PartitionSetKind::FrobeniusMinus);
  CHECK(frob4 == std::vector<Partition>{Partition{}, Partition{1, 1}, Partition{2, 1, 1}});

  // cardinality against the pentagonal recurrence; p(10) = 42
  auto counts = partition_counts(10);
  CHECK(counts[10] == 42);
  long total = std::accumulate(counts.begin(), counts.end(), 0L);
  CHECK(partitions_up_to(10).size() == static_cast<std::size_t>(total));
}

TEST_CASE("subpartitions") {
  auto subs = subpartitions(Partition{2, 1});
  CHECK(subs == std::vector<Partition>{Partition{}, Partition{1}, Partition{2}, Partition{1, 1},
                                       Partition{2, 1}});
  for (const Partition& m : subpartitions(Partition{4, 3, 1}))
    CHECK(Partition{4, 3, 1}.contains(m));
  std::set<Partition> unique_subs;
  for (const Partition& m : subpartitions(Partition{4, 3, 1})) unique_subs.insert(m);
  CHECK(unique_subs.size() == subpartitions(Partition{4, 3, 1}).size());
}
