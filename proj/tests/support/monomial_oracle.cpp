#include "support/monomial_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

using chr::Int;
using chr::Partition;

// Fill the skew diagram cell by cell (row-major), keeping rows weakly and
// columns strictly increasing, entries in 1..nvars; record x^content.
void enumerate(const Partition& outer, const Partition& inner, int nvars, Poly& out) {
  if (!outer.contains(inner)) return;
  int rows = outer.length();
  std::vector<std::vector<int>> entry(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    entry[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer.part(r)), 0);
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = inner.part(r); c < outer.part(r); ++c) cells.push_back({r, c});
  Exponents content(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      auto [it, inserted] = out.try_emplace(content, 1);
      if (!inserted) it->second += 1;
      return;
    }
    auto [r, c] = cells[i];
    int lo = 1;
    if (c > inner.part(r)) lo = std::max(lo, entry[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0 && c < outer.part(r - 1) && c >= inner.part(r - 1))
      lo = std::max(lo, entry[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= nvars; ++v) {
      entry[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      self(self, i + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
    entry[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  };
  rec(rec, 0);
}

} // namespace

Poly schur_poly(const chr::Partition& lambda, int nvars) {
  Poly out;
  enumerate(lambda, chr::Partition{}, nvars, out);
  return out;
}

Poly skew_schur_poly(const chr::Partition& outer, const chr::Partition& inner, int nvars) {
  Poly out;
  enumerate(outer, inner, nvars, out);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.try_emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
      if (it->second == 0 && !inserted) out.erase(it);
    }
  return out;
}

std::map<chr::Partition, chr::Int> schur_decompose(Poly p, int nvars) {
  std::map<chr::Partition, chr::Int> out;
  while (!p.empty()) {
    // std::map is lex-ascending on exponents, so the last entry is the lex
    // leading monomial; for a symmetric polynomial it is a partition vector.
    auto lead_it = std::prev(p.end());
    Exponents lead = lead_it->first;
    Int coeff = lead_it->second;
    while (!lead.empty() && lead.back() == 0) lead.pop_back();
    if (!std::is_sorted(lead.begin(), lead.end(), std::greater<int>()))
      throw std::runtime_error("leading exponent is not a partition; input not symmetric?");
    chr::Partition lambda(lead);
    out[lambda] = coeff;
    for (const auto& [e, c] : schur_poly(lambda, nvars)) {
      auto pit = p.find(e);
      Int nc = (pit == p.end() ? Int(0) : pit->second) - coeff * c;
      if (nc == 0) {
        if (pit != p.end()) p.erase(pit);
      } else {
        p[e] = nc;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

} // namespace oracle
