#include "chr/expr.hpp"

namespace chr {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::GL: return "GL";
    case Basis::O: return "O";
    case Basis::Sp: return "Sp";
    case Basis::DualO: return "O*";
    case Basis::DualSp: return "Sp*";
  }
  return "?";
}

TensorExpr tensor_of(const SymExpr& f, const SymExpr& g) {
  TensorExpr out(f.basis(), g.basis());
  for (const auto& [p, a] : f.terms())
    for (const auto& [q, b] : g.terms()) out.add(p, q, a * b);
  return out;
}

} // namespace chr
