#include <algorithm>
#include <stdexcept>

#include "hardsq/apex_graph.hpp"
#include "hardsq/grid.hpp"

namespace hardsq {

void for_each_cell(int n, int p, int q,
                   const std::function<bool(const Arrangement&)>& visit) {
  std::vector<Arrangement> batch;
  for_each_apex(n, p, q, [&](const Arrangement& apex) {
    ApexGraph g = ApexGraph::build(apex);
    batch.clear();
    for_each_independent_set(g, [&](VertexMask m) { batch.push_back(decode_cell(g, m)); });
    std::sort(batch.begin(), batch.end(),
              [](const Arrangement& a, const Arrangement& b) { return a.key() < b.key(); });
    for (const auto& cell : batch)
      if (!visit(cell)) return false;
    return true;
  });
}

std::vector<Arrangement> enumerate_cells(int n, int p, int q) {
  std::vector<Arrangement> out;
  for_each_cell(n, p, q, [&](const Arrangement& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

void for_each_unlabeled_apex(int n, int p, int q,
                             const std::function<bool(const Arrangement&)>& visit) {
  validate_instance(n, p, q);
  if (n > p * q) return;
  std::vector<Piece> pieces(static_cast<std::size_t>(n));
  Arrangement arr(Board{p, q}, pieces);
  std::function<bool(int, int)> place = [&](int k, int start) {
    if (k == n) return visit(arr);
    for (int s = start; s <= p * q - (n - k); ++s) {
      arr[k] = make_piece(s / q + 1, s % q + 1);
      if (!place(k + 1, s + 1)) return false;
    }
    return true;
  };
  place(0, 0);
}

FVector f_vector(int n, int p, int q) {
  std::vector<std::uint64_t> counts;
  for_each_unlabeled_apex(n, p, q, [&](const Arrangement& apex) {
    auto poly = independence_polynomial(ApexGraph::build(apex));
    if (poly.size() > counts.size()) counts.resize(poly.size(), 0);
    for (std::size_t d = 0; d < poly.size(); ++d) counts[d] += poly[d];
    return true;
  });
  std::uint64_t orderings = 1;
  for (int k = 2; k <= n; ++k) orderings *= std::uint64_t(k);
  for (auto& c : counts)
    if (__builtin_mul_overflow(c, orderings, &c)) throw std::overflow_error("f-vector overflows 64 bits");
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return FVector{std::move(counts)};
}

}  // namespace hardsq
