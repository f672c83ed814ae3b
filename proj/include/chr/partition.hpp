#pragma once

#include <cstddef>
#include <vector>

#include "chr/bigint.hpp"

namespace chr {

/// An integer partition in canonical form: weakly decreasing positive parts,
/// trailing zeros stripped. The empty sequence is the zero partition.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// nonnegative. Zeros are stripped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part at 0-based row index, 0 beyond the length.
  int part(int row) const {
    return row >= 0 && row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  /// Column lengths of the Young diagram.
  Partition conjugate() const;

  /// Containment of Young diagrams: inner fits inside *this row by row.
  bool contains(const Partition& inner) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Graded reverse-lexicographic order: grade by weight, then lex-descending
/// part sequences within a grade, so (3) < (2,1) < (1,1,1). This is the
/// canonical order for map keys, enumeration and output.
bool operator<(const Partition& a, const Partition& b);

/// Diagonal arm/leg coordinates of a Young diagram. arms and legs are
/// strictly decreasing; rank is the number of diagonal boxes.
struct FrobeniusForm {
  std::vector<int> arms;
  std::vector<int> legs;
  int rank() const { return static_cast<int>(arms.size()); }
  bool operator==(const FrobeniusForm& o) const = default;
};

FrobeniusForm frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusForm& f);

/// z_lambda = prod_k k^{m_k} m_k! from the exponent form of the partition.
Int z_of(const Partition& p);

/// Membership sets used by the Schur function series.
enum class PartitionSetKind {
  All,            // every partition
  EvenRows,       // all parts even
  EvenColumns,    // conjugate has all parts even
  FrobeniusMinus, // arm - leg = -1 on every diagonal box
  FrobeniusZero,  // self-conjugate
  FrobeniusPlus,  // arm - leg = +1 on every diagonal box
};

bool set_contains(PartitionSetKind kind, const Partition& p);

/// All members of the set with weight <= max_weight, in graded
/// reverse-lexicographic order.
std::vector<Partition> partitions_up_to(int max_weight,
                                        PartitionSetKind kind = PartitionSetKind::All);

/// Partitions of exactly n, lex-descending: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// All subdiagrams mu of lambda, in graded reverse-lexicographic order.
std::vector<Partition> subpartitions(const Partition& lambda);

} // namespace chr
