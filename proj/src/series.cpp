#include "chr/series.hpp"

#include <utility>
#include <vector>

#include "chr/errors.hpp"
#include "chr/parallel.hpp"

namespace chr {

char series_letter(SeriesKind k) {
  static const char letters[] = "ABCDEFGHLMPQ";
  return letters[static_cast<int>(k)];
}

std::optional<SeriesKind> series_kind_from_letter(char c) {
  static const char letters[] = "ABCDEFGHLMPQ";
  for (int i = 0; letters[i]; ++i)
    if (letters[i] == c) return static_cast<SeriesKind>(i);
  return std::nullopt;
}

int series_sign(SeriesKind k, const Partition& p) {
  int w = p.weight();
  auto half_sign = [](int n) { return (n / 2) % 2 == 0 ? 1 : -1; };
  switch (k) {
    case SeriesKind::A:
      return set_contains(PartitionSetKind::FrobeniusMinus, p) ? half_sign(w) : 0;
    case SeriesKind::B:
      return set_contains(PartitionSetKind::EvenColumns, p) ? 1 : 0;
    case SeriesKind::C:
      return set_contains(PartitionSetKind::FrobeniusPlus, p) ? half_sign(w) : 0;
    case SeriesKind::D:
      return set_contains(PartitionSetKind::EvenRows, p) ? 1 : 0;
    case SeriesKind::E:
      return set_contains(PartitionSetKind::FrobeniusZero, p)
                 ? half_sign(w + frobenius(p).rank())
                 : 0;
    case SeriesKind::G:
      return set_contains(PartitionSetKind::FrobeniusZero, p)
                 ? half_sign(w - frobenius(p).rank())
                 : 0;
    case SeriesKind::F:
      return 1;
    case SeriesKind::H:
      return w % 2 == 0 ? 1 : -1;
    case SeriesKind::L:
      return p.length() == w ? (w % 2 == 0 ? 1 : -1) : 0;  // single column 1^w
    case SeriesKind::Q:
      return p.length() == w ? 1 : 0;
    case SeriesKind::M:
      return p.length() <= 1 ? 1 : 0;  // single row
    case SeriesKind::P:
      return p.length() <= 1 ? (w % 2 == 0 ? 1 : -1) : 0;
  }
  return 0;
}

TruncatedSeries series_terms(SeriesKind kind, int cutoff) {
  TruncatedSeries out{kind, cutoff, SymExpr(Basis::GL)};
  for (const Partition& p : partitions_up_to(cutoff)) {
    int s = series_sign(kind, p);
    if (s != 0) out.body.add(p, s);
  }
  return out;
}

SymExpr skew_by_series_serial(const SymExpr& f, SeriesKind kind) {
  if (f.basis() != Basis::GL)
    throw ring_mismatch_error("series skew expects a GL expression");
  SymExpr table = series_terms(kind, f.max_weight()).body;
  return skew_by_expr(f, table);
}

SymExpr skew_by_series(const SymExpr& f, SeriesKind kind) {
  if (f.basis() != Basis::GL)
    throw ring_mismatch_error("series skew expects a GL expression");
  SymExpr table = series_terms(kind, f.max_weight()).body;
  std::vector<std::pair<const Partition*, const Int*>> fs, ss;
  for (const auto& [p, c] : f.terms()) fs.push_back({&p, &c});
  for (const auto& [p, c] : table.terms()) ss.push_back({&p, &c});
  if (ss.empty()) return SymExpr(Basis::GL);
  return par::indexed_reduce<SymExpr>(
      fs.size() * ss.size(),
      [&](std::size_t i, SymExpr& acc) {
        const auto& [lambda, cf] = fs[i / ss.size()];
        const auto& [sigma, cs] = ss[i % ss.size()];
        if (sigma->weight() > lambda->weight()) return;
        Int c = *cf * *cs;
        for (const auto& [nu, k] : skew_expansion(*lambda, *sigma).terms())
          acc.add(nu, c * k);
      },
      [](SymExpr& total, SymExpr&& local) { total += local; });
}

SymExpr truncated_product(const TruncatedSeries& u, const TruncatedSeries& v, int cutoff) {
  if (u.cutoff < cutoff || v.cutoff < cutoff)
    throw cutoff_error("series operands are truncated below the requested cutoff");
  SymExpr out(Basis::GL);
  for (const auto& [a, ca] : u.body.terms()) {
    if (a.weight() > cutoff) continue;
    for (const auto& [b, cb] : v.body.terms()) {
      if (a.weight() + b.weight() > cutoff) continue;
      Int c = ca * cb;
      for (const auto& [lambda, k] : product_expansion(a, b).terms()) out.add(lambda, c * k);
    }
  }
  return out;
}

TensorExpr series_cut_coproduct(SeriesKind kind, int cutoff) {
  TensorExpr out(Basis::GL, Basis::GL);
  switch (kind) {
    case SeriesKind::A:
    case SeriesKind::C:
    case SeriesKind::E:
    case SeriesKind::G:
      for (const Partition& sigma : partitions_up_to(cutoff / 2))
        out.add(sigma, sigma.conjugate(), sigma.weight() % 2 == 0 ? 1 : -1);
      break;
    case SeriesKind::B:
    case SeriesKind::D:
    case SeriesKind::F:
    case SeriesKind::H:
      for (const Partition& sigma : partitions_up_to(cutoff / 2)) out.add(sigma, sigma, 1);
      break;
    case SeriesKind::L:
    case SeriesKind::M:
    case SeriesKind::P:
    case SeriesKind::Q:
      out.add(Partition{}, Partition{}, 1);
      break;
  }
  return out;
}

} // namespace chr
