#pragma once

#include <map>
#include <string>
#include <utility>

#include "chr/bigint.hpp"
#include "chr/errors.hpp"
#include "chr/partition.hpp"

namespace chr {

/// Sparse integer linear combination over an ordered label type. Zero
/// coefficients are never stored, so equality is plain map equality.
template <class Label>
class LinearCombo {
 public:
  using Map = std::map<Label, Int>;
  using const_iterator = typename Map::const_iterator;

  void add(const Label& label, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(label, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int coefficient(const Label& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Int(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinearCombo& operator+=(const LinearCombo& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
  }
  LinearCombo& operator-=(const LinearCombo& o) {
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
  }
  LinearCombo& operator*=(const Int& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [l, c] : terms_) c *= k;
    }
    return *this;
  }

  bool operator==(const LinearCombo& o) const { return terms_ == o.terms_; }

 private:
  Map terms_;
};

/// Canonical bases carried by expressions. GL is the Schur basis of Lambda;
/// O and Sp are the universal character bases; DualO and DualSp label the
/// dual Hopf algebra bases.
enum class Basis { GL, O, Sp, DualO, DualSp };

std::string basis_name(Basis b);

/// Finite integer combination of basis elements of one declared ring.
class SymExpr {
 public:
  SymExpr() = default;
  explicit SymExpr(Basis b) : basis_(b) {}
  SymExpr(Basis b, const Partition& p, const Int& coeff = 1) : basis_(b) {
    terms_.add(p, coeff);
  }

  static SymExpr unit(Basis b) { return SymExpr(b, Partition{}); }

  Basis basis() const { return basis_; }
  const LinearCombo<Partition>& terms() const { return terms_; }

  void add(const Partition& p, const Int& coeff) { terms_.add(p, coeff); }
  Int coefficient(const Partition& p) const { return terms_.coefficient(p); }
  bool is_zero() const { return terms_.is_zero(); }
  std::size_t size() const { return terms_.size(); }

  int max_weight() const {
    int w = 0;
    for (const auto& [p, c] : terms_) w = std::max(w, p.weight());
    return w;
  }

  /// Drop all terms of weight > w.
  SymExpr truncated(int w) const {
    SymExpr out(basis_);
    for (const auto& [p, c] : terms_)
      if (p.weight() <= w) out.add(p, c);
    return out;
  }

  SymExpr& operator+=(const SymExpr& o) {
    require_same_basis(o, "+");
    terms_ += o.terms_;
    return *this;
  }
  SymExpr& operator-=(const SymExpr& o) {
    require_same_basis(o, "-");
    terms_ -= o.terms_;
    return *this;
  }
  SymExpr& operator*=(const Int& k) {
    terms_ *= k;
    return *this;
  }

  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(const Int& k, SymExpr a) { return a *= k; }
  friend SymExpr operator-(SymExpr a) { return a *= Int(-1); }

  bool operator==(const SymExpr& o) const {
    return basis_ == o.basis_ && terms_ == o.terms_;
  }

 private:
  void require_same_basis(const SymExpr& o, const char* op) const {
    if (basis_ != o.basis_)
      throw ring_mismatch_error(std::string("cannot apply '") + op + "' to " +
                                basis_name(basis_) + " and " + basis_name(o.basis_) +
                                " expressions");
  }

  Basis basis_ = Basis::GL;
  LinearCombo<Partition> terms_;
};

/// Carrier for coproducts: integer combination of ordered label pairs.
class TensorExpr {
 public:
  using Label = std::pair<Partition, Partition>;

  TensorExpr() = default;
  TensorExpr(Basis left, Basis right) : bases_(left, right) {}

  std::pair<Basis, Basis> bases() const { return bases_; }
  const LinearCombo<Label>& terms() const { return terms_; }

  void add(const Partition& l, const Partition& r, const Int& coeff) {
    terms_.add({l, r}, coeff);
  }
  Int coefficient(const Partition& l, const Partition& r) const {
    return terms_.coefficient({l, r});
  }
  bool is_zero() const { return terms_.is_zero(); }
  std::size_t size() const { return terms_.size(); }

  /// Drop all terms whose slot weights exceed the per-slot bounds.
  TensorExpr truncated(int left_w, int right_w) const {
    TensorExpr out(bases_.first, bases_.second);
    for (const auto& [lr, c] : terms_)
      if (lr.first.weight() <= left_w && lr.second.weight() <= right_w)
        out.terms_.add(lr, c);
    return out;
  }

  TensorExpr& operator+=(const TensorExpr& o) {
    require_same_bases(o);
    terms_ += o.terms_;
    return *this;
  }
  TensorExpr& operator-=(const TensorExpr& o) {
    require_same_bases(o);
    terms_ -= o.terms_;
    return *this;
  }
  TensorExpr& operator*=(const Int& k) {
    terms_ *= k;
    return *this;
  }

  friend TensorExpr operator+(TensorExpr a, const TensorExpr& b) { return a += b; }
  friend TensorExpr operator-(TensorExpr a, const TensorExpr& b) { return a -= b; }

  bool operator==(const TensorExpr& o) const {
    return bases_ == o.bases_ && terms_ == o.terms_;
  }

 private:
  void require_same_bases(const TensorExpr& o) const {
    if (bases_ != o.bases_)
      throw ring_mismatch_error("tensor expressions carry different basis pairs");
  }

  std::pair<Basis, Basis> bases_{Basis::GL, Basis::GL};
  LinearCombo<Label> terms_;
};

/// f tensor g, term by term.
TensorExpr tensor_of(const SymExpr& f, const SymExpr& g);

} // namespace chr
