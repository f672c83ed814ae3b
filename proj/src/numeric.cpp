#include "chr/numeric.hpp"

#include <algorithm>
#include <string>

namespace chr {

std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "GL(N)";
    case GroupKind::SOEven: return "SO(2K)";
    case GroupKind::OEvenMinus: return "O(2K) det -1";
    case GroupKind::SOOdd: return "SO(2K+1)";
    case GroupKind::OOddMinus: return "O(2K+1) det -1";
    case GroupKind::SpEven: return "Sp(2K)";
    case GroupKind::SpOdd: return "Sp(2K+1)";
  }
  return "?";
}

namespace {

bool orthogonal_kind(GroupKind k) {
  return k == GroupKind::SOEven || k == GroupKind::OEvenMinus || k == GroupKind::SOOdd ||
         k == GroupKind::OOddMinus;
}

bool symplectic_kind(GroupKind k) {
  return k == GroupKind::SpEven || k == GroupKind::SpOdd;
}

template <class Num>
Num from_int(const Int& c) {
  return Rat(c);
}

template <>
double from_int<double>(const Int& c) {
  return c.get_d();
}

template <class Num>
std::vector<Num> assemble(GroupKind kind, const std::vector<Num>& values) {
  auto inverted = [&](std::size_t skip_tail) {
    std::vector<Num> out;
    for (std::size_t i = 0; i + skip_tail < values.size(); ++i) {
      if (values[i] == Num(0))
        throw eval_error("zero eigenvalue where an inverse is required");
      out.push_back(Num(1) / values[i]);
    }
    return out;
  };
  std::vector<Num> args;
  switch (kind) {
    case GroupKind::GL:
      return values;
    case GroupKind::SOEven:
    case GroupKind::SpEven: {
      args = values;
      auto inv = inverted(0);
      args.insert(args.end(), inv.begin(), inv.end());
      return args;
    }
    case GroupKind::OEvenMinus: {
      args = values;
      auto inv = inverted(0);
      args.insert(args.end(), inv.begin(), inv.end());
      args.push_back(Num(1));
      args.push_back(Num(-1));
      return args;
    }
    case GroupKind::SOOdd:
    case GroupKind::OOddMinus: {
      args = values;
      auto inv = inverted(0);
      args.insert(args.end(), inv.begin(), inv.end());
      args.push_back(kind == GroupKind::SOOdd ? Num(1) : Num(-1));
      return args;
    }
    case GroupKind::SpOdd: {
      if (values.empty()) throw eval_error("Sp(2K+1) needs at least the GL(1) eigenvalue");
      args.assign(values.begin(), values.end() - 1);
      auto inv = inverted(1);
      args.insert(args.end(), inv.begin(), inv.end());
      args.push_back(values.back());
      return args;
    }
  }
  return args;
}

int rank_of(GroupKind kind, std::size_t nvalues) {
  switch (kind) {
    case GroupKind::GL: return static_cast<int>(nvalues);
    case GroupKind::OEvenMinus: return static_cast<int>(nvalues) + 1;
    case GroupKind::SpOdd: return static_cast<int>(nvalues) - 1;
    default: return static_cast<int>(nvalues);
  }
}

// The universal characters match finite-N irreducible characters only while
// the labels are short enough; longer labels would need modification rules,
// which are out of scope here.
void check_stable_range(const SymExpr& f, GroupKind kind, int rank) {
  for (const auto& [p, c] : f.terms()) {
    bool bad = p.length() > rank || (kind == GroupKind::SOEven && p.length() == rank);
    if (bad)
      throw eval_error("a character label of length " + std::to_string(p.length()) +
                       " is outside the stable range of " + group_kind_name(kind) +
                       " at rank " + std::to_string(rank) + "; " +
                       (symplectic_kind(kind) ? "symplectic" : "orthogonal") +
                       " modification rules are not implemented");
  }
}

template <class Num>
Num char_value_impl(const SymExpr& f, GroupKind kind, int rank, const std::vector<Num>& args) {
  SymExpr gl(Basis::GL);
  switch (f.basis()) {
    case Basis::GL:
      gl = f;  // plain symmetric function: any kind goes
      break;
    case Basis::O:
      if (!orthogonal_kind(kind))
        throw eval_error("an O expression cannot be evaluated on " + group_kind_name(kind));
      check_stable_range(f, kind, rank);
      gl = o_to_gl(f);
      break;
    case Basis::Sp:
      if (!symplectic_kind(kind))
        throw eval_error("an Sp expression cannot be evaluated on " + group_kind_name(kind));
      check_stable_range(f, kind, rank);
      gl = sp_to_gl(f);
      break;
    default:
      throw eval_error("dual-ring expressions have no finite evaluation");
  }
  Num total(0);
  for (const auto& [lambda, c] : gl.terms())
    total += from_int<Num>(c) * schur_value(lambda, args);
  return total;
}

template <class Num>
Num rational_value_impl(const RationalExpr& f, const std::vector<Num>& xs) {
  std::vector<Num> inv;
  for (const Num& x : xs) {
    if (x == Num(0)) throw eval_error("zero eigenvalue in a rational character evaluation");
    inv.push_back(Num(1) / x);
  }
  RationalExpr mixed = f.basis() == RationalBasis::Mixed ? f : tensor_to_mixed(f);
  Num total(0);
  for (const auto& [lm, c] : mixed.terms()) {
    const auto& [lambda, mu] = lm;
    Num term(0);
    for (const Partition& zeta : subpartitions(lambda)) {
      Partition zc = zeta.conjugate();
      if (!mu.contains(zc)) continue;
      Num cov(0), contra(0);
      for (const auto& [a, ca] : skew_expansion(lambda, zeta).terms())
        cov += from_int<Num>(ca) * schur_value(a, xs);
      for (const auto& [b, cb] : skew_expansion(mu, zc).terms())
        contra += from_int<Num>(cb) * schur_value(b, inv);
      Num prod = cov * contra;
      if (zeta.weight() % 2 != 0) prod = -prod;
      term += prod;
    }
    total += from_int<Num>(c) * term;
  }
  return total;
}

} // namespace

std::vector<Rat> assemble_arguments(const EigenvalueSpec& spec) {
  return assemble(spec.kind, spec.values);
}

int spec_rank(const EigenvalueSpec& spec) { return rank_of(spec.kind, spec.values.size()); }

Rat char_value(const SymExpr& f, const EigenvalueSpec& spec) {
  std::vector<Rat> args = assemble(spec.kind, spec.values);
  Rat v = char_value_impl(f, spec.kind, spec_rank(spec), args);
  v.canonicalize();
  return v;
}

double char_value_f(const SymExpr& f, GroupKind kind, const std::vector<double>& args) {
  // rank only matters for the stable-range guard; infer it from the list
  int n = static_cast<int>(args.size());
  int rank = kind == GroupKind::GL ? n : n / 2;
  return char_value_impl(f, kind, rank, args);
}

Rat rational_char_value(const RationalExpr& f, const std::vector<Rat>& xs) {
  Rat v = rational_value_impl(f, xs);
  v.canonicalize();
  return v;
}

double rational_char_value_f(const RationalExpr& f, const std::vector<double>& xs) {
  return rational_value_impl(f, xs);
}

} // namespace chr
