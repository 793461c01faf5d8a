#include "hardsq/complex.hpp"

#include <string>

namespace hardsq {

CellCapExceeded::CellCapExceeded(std::uint64_t cells, std::uint64_t cap)
    : std::runtime_error("complex has at least " + std::to_string(cells) +
                         " cells, above the cap of " + std::to_string(cap)),
      cells_(cells),
      cap_(cap) {}

CubicalComplex CubicalComplex::build(int n, int p, int q, std::uint64_t cap) {
  validate_instance(n, p, q);
  // The vertex count is a cheap lower bound that rules out huge instances
  // before the f-vector walks every apex.
  std::uint64_t vertices = 0;
  try {
    vertices = vertex_count(n, p, q);
  } catch (const std::overflow_error&) {
    throw CellCapExceeded(UINT64_MAX, cap);
  }
  if (vertices > cap) throw CellCapExceeded(vertices, cap);
  FVector fv = hardsq::f_vector(n, p, q);
  std::uint64_t total = 0;
  for (auto c : fv.counts) total += c;
  if (total > cap) throw CellCapExceeded(total, cap);

  CubicalComplex cx;
  cx.n_ = n;
  cx.board_ = Board{p, q};
  cx.cells_.resize(fv.counts.size());
  for (std::size_t d = 0; d < fv.counts.size(); ++d) cx.cells_[d].reserve(fv.counts[d]);
  cx.index_.reserve(total);
  for_each_cell(n, p, q, [&](const Arrangement& c) {
    auto d = std::size_t(c.dimension());
    cx.index_.emplace(c.key(), CellId{int(d), static_cast<std::uint32_t>(cx.cells_[d].size())});
    cx.cells_[d].push_back(c);
    return true;
  });
  return cx;
}

std::uint64_t CubicalComplex::total_cells() const {
  std::uint64_t total = 0;
  for (const auto& v : cells_) total += v.size();
  return total;
}

FVector CubicalComplex::f_vector() const {
  FVector fv;
  for (const auto& v : cells_) fv.counts.push_back(v.size());
  return fv;
}

CellId CubicalComplex::find(CellKey key) const {
  auto it = index_.find(key);
  return it == index_.end() ? CellId{} : it->second;
}

ChainComplex CubicalComplex::chain_complex() const {
  ChainComplex cc;
  for (const auto& v : cells_) cc.cells.push_back(v.size());
  cc.boundaries.reserve(cells_.size());
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    if (d == 0) {
      cc.boundaries.emplace_back(0, static_cast<std::uint32_t>(cells_[0].size()));
      continue;
    }
    std::vector<MatrixEntry> entries;
    entries.reserve(cells_[d].size() * 2 * d);
    for (std::uint32_t col = 0; col < cells_[d].size(); ++col) {
      for (const auto& term : boundary(cells_[d][col])) {
        CellId id = find(term.cell);
        if (id.dim != int(d) - 1)
          throw std::logic_error("facet " + to_string(term.cell) + " is missing from the complex");
        entries.push_back({id.index, col, term.coefficient});
      }
    }
    cc.boundaries.emplace_back(static_cast<std::uint32_t>(cells_[d - 1].size()),
                               static_cast<std::uint32_t>(cells_[d].size()), std::move(entries));
  }
  return cc;
}

}  // namespace hardsq
