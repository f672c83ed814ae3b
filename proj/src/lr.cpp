#include "chr/lr.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace chr {

namespace {

// Enumerates the Littlewood-Richardson skew tableaux of shape outer/inner:
// column-strict fillings whose reading word (right to left along rows, top
// row first) is a lattice word. Each completed filling contributes 1 to the
// coefficient of its content.
class LrEnumerator {
 public:
  LrEnumerator(const Partition& outer, const Partition& inner)
      : outer_(outer), inner_(inner), rows_(outer.length()) {
    entries_.resize(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
      entries_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer_.part(r)), 0);
    for (int r = 0; r < rows_; ++r)
      for (int c = outer_.part(r) - 1; c >= inner_.part(r); --c)
        cells_.push_back({r, c});
    counts_.assign(static_cast<std::size_t>(rows_) + 2, 0);
  }

  SymExpr run() {
    SymExpr out(Basis::GL);
    if (!outer_.contains(inner_)) return out;
    fill(0, out);
    return out;
  }

 private:
  struct Cell {
    int r, c;
  };

  void fill(std::size_t i, SymExpr& out) {
    if (i == cells_.size()) {
      std::vector<int> content;
      for (int k = 1; k <= rows_ && counts_[static_cast<std::size_t>(k)] > 0; ++k)
        content.push_back(counts_[static_cast<std::size_t>(k)]);
      out.add(Partition(std::move(content)), 1);
      return;
    }
    auto [r, c] = cells_[i];
    int lo = 1;
    int hi = rows_;
    if (c + 1 < outer_.part(r))  // right neighbour already filled: weak rows
      hi = std::min(hi, entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
    if (r > 0 && c < outer_.part(r - 1) && c >= inner_.part(r - 1))  // strict columns
      lo = std::max(lo, entries_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int k = lo; k <= hi; ++k) {
      if (k > 1 && counts_[static_cast<std::size_t>(k)] >= counts_[static_cast<std::size_t>(k - 1)])
        continue;  // lattice word condition
      entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = k;
      ++counts_[static_cast<std::size_t>(k)];
      fill(i + 1, out);
      --counts_[static_cast<std::size_t>(k)];
    }
    entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  }

  const Partition& outer_;
  const Partition& inner_;
  int rows_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> entries_;
  std::vector<int> counts_;
};

struct PairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& key) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](int v) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (int p : key.first.parts()) mix(p);
    mix(-1);
    for (int p : key.second.parts()) mix(p);
    return h;
  }
};

// Read-through cache: shared lock for hits, compute outside any lock, then
// first writer wins under the exclusive lock. unique_ptr nodes keep the
// returned references stable across rehashes.
class ExpansionCache {
 public:
  template <class Compute>
  const SymExpr& get(const Partition& a, const Partition& b, Compute&& compute) {
    std::pair<Partition, Partition> key{a, b};
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto value = std::make_unique<SymExpr>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.try_emplace(std::move(key), std::move(value));
    return *it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::pair<Partition, Partition>, std::unique_ptr<SymExpr>, PairHash> map_;
};

ExpansionCache& skew_cache() {
  static ExpansionCache cache;
  return cache;
}

ExpansionCache& product_cache() {
  static ExpansionCache cache;
  return cache;
}

// Partitions lambda that can carry a nonzero c^lambda_{mu,nu}: weight
// |mu|+|nu|, containing both mu and nu, first part and length bounded by the
// Pieri limits.
std::vector<Partition> product_shapes(const Partition& mu, const Partition& nu) {
  std::vector<Partition> shapes;
  int total = mu.weight() + nu.weight();
  int max_first = mu.part(0) + nu.part(0);
  int max_rows = mu.length() + nu.length();
  std::vector<int> acc;
  auto rec = [&](auto&& self, int row, int remaining, int cap) -> void {
    if (remaining == 0) {
      Partition lambda(acc);
      if (lambda.contains(mu) && lambda.contains(nu)) shapes.push_back(std::move(lambda));
      return;
    }
    if (row >= max_rows) return;
    int hi = std::min(remaining, cap);
    // A row shorter than mu's row can never contain mu.
    for (int v = hi; v >= std::max(1, mu.part(row)); --v) {
      acc.push_back(v);
      self(self, row + 1, remaining - v, v);
      acc.pop_back();
    }
  };
  if (total == 0) {
    shapes.push_back(Partition{});
  } else {
    rec(rec, 0, total, max_first);
  }
  return shapes;
}

} // namespace

const SymExpr& skew_expansion(const Partition& outer, const Partition& inner) {
  return skew_cache().get(outer, inner, [&] { return LrEnumerator(outer, inner).run(); });
}

const SymExpr& product_expansion(const Partition& mu, const Partition& nu) {
  // c^lambda_{mu,nu} is symmetric in mu,nu; normalise the key.
  const Partition& a = nu < mu ? nu : mu;
  const Partition& b = nu < mu ? mu : nu;
  return product_cache().get(a, b, [&] {
    SymExpr out(Basis::GL);
    for (const Partition& lambda : product_shapes(a, b)) {
      Int c = skew_expansion(lambda, a).coefficient(b);
      if (c != 0) out.add(lambda, c);
    }
    return out;
  });
}

Int lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  if (!lambda.contains(mu)) return 0;
  return skew_expansion(lambda, mu).coefficient(nu);
}

std::size_t lr_cache_size() { return skew_cache().size() + product_cache().size(); }

void lr_cache_clear() {
  skew_cache().clear();
  product_cache().clear();
}

} // namespace chr
