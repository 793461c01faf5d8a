#pragma once

// The whole complex X(n;p,q) held in memory, for brute-force checks.

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hardsq/grid.hpp"
#include "hardsq/homology.hpp"

namespace hardsq {

inline constexpr std::uint64_t kDefaultCellCap = 2'000'000;

class CellCapExceeded : public std::runtime_error {
 public:
  CellCapExceeded(std::uint64_t cells, std::uint64_t cap);
  std::uint64_t cells() const { return cells_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cells_;
  std::uint64_t cap_;
};

struct CellId {
  int dim = -1;
  std::uint32_t index = 0;
};

class CubicalComplex {
 public:
  /// Throws CellCapExceeded before enumerating if the complex has more than
  /// `cap` cells.
  static CubicalComplex build(int n, int p, int q, std::uint64_t cap = kDefaultCellCap);

  int n() const { return n_; }
  Board board() const { return board_; }
  int top_dimension() const { return static_cast<int>(cells_.size()) - 1; }
  const std::vector<Arrangement>& cells(int dim) const { return cells_[std::size_t(dim)]; }
  std::uint64_t total_cells() const;
  FVector f_vector() const;

  /// dim == -1 when the key is not a cell of this complex.
  CellId find(CellKey key) const;
  CellId find(const Arrangement& cell) const { return find(cell.key()); }

  ChainComplex chain_complex() const;

 private:
  int n_ = 0;
  Board board_{};
  std::vector<std::vector<Arrangement>> cells_;
  std::unordered_map<CellKey, CellId, CellKeyHash> index_;
};

}  // namespace hardsq
