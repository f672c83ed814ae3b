#include "chr/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace chr {

namespace {

int sum_parts(const std::vector<int>& parts) {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = sum_parts(parts_);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(static_cast<std::size_t>(parts_[0]));
    for (int row : parts_)
      for (int c = 0; c < row; ++c) cols[static_cast<std::size_t>(c)] += 1;
  }
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

bool operator<(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

FrobeniusForm frobenius(const Partition& p) {
  FrobeniusForm f;
  Partition conj = p.conjugate();
  for (int k = 0; p.part(k) > k; ++k) {
    f.arms.push_back(p.part(k) - (k + 1));
    f.legs.push_back(conj.part(k) - (k + 1));
  }
  return f;
}

Partition from_frobenius(const FrobeniusForm& f) {
  int r = f.rank();
  int rows = r;
  for (int k = 0; k < r; ++k) rows = std::max(rows, f.legs[static_cast<std::size_t>(k)] + k + 1);
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  // Diagonal box k contributes a row of k + 1 + a_k boxes and one extra box
  // to each of the b_k rows below it.
  for (int k = 0; k < r; ++k) {
    parts[static_cast<std::size_t>(k)] = k + 1 + f.arms[static_cast<std::size_t>(k)];
    for (int j = k + 1; j <= k + f.legs[static_cast<std::size_t>(k)]; ++j)
      parts[static_cast<std::size_t>(j)] += 1;
  }
  return Partition(std::move(parts));
}

Int z_of(const Partition& p) {
  Int z = 1;
  int i = 0;
  const auto& parts = p.parts();
  int n = p.length();
  while (i < n) {
    int j = i;
    while (j < n && parts[static_cast<std::size_t>(j)] == parts[static_cast<std::size_t>(i)]) ++j;
    int mult = j - i;
    for (int m = 1; m <= mult; ++m) {
      z *= parts[static_cast<std::size_t>(i)];
      z *= m;
    }
    i = j;
  }
  return z;
}

bool set_contains(PartitionSetKind kind, const Partition& p) {
  switch (kind) {
    case PartitionSetKind::All:
      return true;
    case PartitionSetKind::EvenRows:
      for (int part : p.parts())
        if (part % 2 != 0) return false;
      return true;
    case PartitionSetKind::EvenColumns:
      return set_contains(PartitionSetKind::EvenRows, p.conjugate());
    case PartitionSetKind::FrobeniusMinus:
    case PartitionSetKind::FrobeniusZero:
    case PartitionSetKind::FrobeniusPlus: {
      int want = kind == PartitionSetKind::FrobeniusMinus ? -1
               : kind == PartitionSetKind::FrobeniusZero  ? 0
                                                          : 1;
      FrobeniusForm f = frobenius(p);
      for (int k = 0; k < f.rank(); ++k)
        if (f.arms[static_cast<std::size_t>(k)] - f.legs[static_cast<std::size_t>(k)] != want)
          return false;
      return true;
    }
  }
  return false;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    acc.push_back(k);
    gen_partitions(remaining - k, k, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> acc;
  if (n >= 0) gen_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, PartitionSetKind kind) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n)
    for (Partition& p : partitions_of(n))
      if (set_contains(kind, p)) out.push_back(std::move(p));
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  // Row-by-row choice of mu_i in [1, min(lambda_i, mu_{i-1})], or stop.
  std::vector<Partition> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int row, int cap) -> void {
    out.push_back(Partition(acc));  // mu stops before this row
    if (row == lambda.length()) return;
    int hi = std::min(lambda.part(row), cap);
    for (int v = hi; v >= 1; --v) {
      acc.push_back(v);
      self(self, row + 1, v);
      acc.pop_back();
    }
  };
  rec(rec, 0, lambda.part(0));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace chr
