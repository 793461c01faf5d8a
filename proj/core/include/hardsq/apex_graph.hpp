#pragma once

// The apex graph of a 0-cell: one vertex per way a piece may grow (left or
// down), one edge per pair of growth options that would collide. Cells with a
// given apex are exactly the independent sets of this graph.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hardsq/grid.hpp"

namespace hardsq {

enum class Extension : std::uint8_t {
  Left,  // vertex at (i - 1/2, j), on the left edge of the corner square
  Down,  // vertex at (i, j - 1/2), on the lower edge of the corner square
};

/// Positions are stored doubled so that half-integers stay exact.
struct ApexVertex {
  int col2 = 0;
  int row2 = 0;
  Extension kind = Extension::Left;
  int piece = 0;

  int diagonal() const { return col2 + row2; }
  friend bool operator==(const ApexVertex&, const ApexVertex&) = default;
};

struct PathSpan {
  int first = 0;   // global index of the first vertex
  int length = 0;
};

/// Bit i of a mask selects global vertex i.
using VertexMask = std::uint32_t;

class ApexGraph {
 public:
  static constexpr int kMaxVertices = 2 * kMaxPieces;

  /// Only the corners of `arr` are used; extension flags are ignored.
  static ApexGraph build(const Arrangement& arr);

  int size() const { return count_; }
  const ApexVertex& vertex(int i) const { return vertices_[std::size_t(i)]; }
  std::vector<ApexVertex> vertices() const;
  /// Pairs of global indices, each with the smaller index first.
  std::vector<std::pair<int, int>> edges() const;
  std::span<const PathSpan> paths() const { return {paths_.data(), std::size_t(path_count_)}; }
  /// True iff vertex i is joined to vertex i - 1.
  bool linked_to_previous(int i) const { return linked_prev_[std::size_t(i)]; }

  /// Global index of the vertex for piece k growing in direction `kind`, or -1.
  int vertex_of(int piece, Extension kind) const {
    return slot_[std::size_t(2 * piece + (kind == Extension::Down ? 1 : 0))];
  }

  bool is_independent(VertexMask mask) const;
  const Arrangement& apex() const { return apex_; }

 private:
  Arrangement apex_;
  std::array<ApexVertex, kMaxVertices> vertices_{};
  std::array<bool, kMaxVertices> linked_prev_{};
  std::array<int, kMaxVertices> slot_{};
  std::array<PathSpan, kMaxVertices> paths_{};
  int path_count_ = 0;
  int count_ = 0;
};

/// Independent set of the apex graph for a cell of X.
VertexMask encode_cell(const ApexGraph& g, const Arrangement& arr);
/// Inverse of encode_cell; throws std::invalid_argument on a dependent mask.
Arrangement decode_cell(const ApexGraph& g, VertexMask mask);

/// One string per path in path order, '1' for selected vertices.
std::vector<std::string> path_strings(const ApexGraph& g, VertexMask mask);
/// Inverse of path_strings; throws std::invalid_argument on a shape mismatch.
VertexMask mask_from_strings(const ApexGraph& g, const std::vector<std::string>& strings);

/// Fibonacci F(k), F(1) = F(2) = 1.
std::uint64_t fibonacci(int k);

/// Product over paths of F(k + 2).
std::uint64_t independent_set_count(const ApexGraph& g);

/// Coefficient i counts independent sets of size i.
std::vector<std::uint64_t> independence_polynomial(const ApexGraph& g);

/// Visits every independent set, in increasing mask order.
void for_each_independent_set(const ApexGraph& g,
                              const std::function<void(VertexMask)>& visit);

enum class Half : std::uint8_t { UpperLeft, LowerRight };

/// One of the two triangles of a board square cut by the diagonal from its
/// upper-right to its lower-left corner.
struct HalfSquare {
  int col = 0;
  int row = 0;
  Half half = Half::UpperLeft;
  auto operator<=>(const HalfSquare&) const = default;
};

/// Half-squares charged to each vertex (indexed by global vertex index): the
/// two it touches, plus one more at each end of its path.
std::vector<std::vector<HalfSquare>> half_square_allocation(const ApexGraph& g);

/// {"apex", "vertices", "edges", "paths", "allocation"}; vertex positions are
/// given doubled ("x2", "y2") so that they stay integers.
std::string apex_graph_json(const ApexGraph& g);

}  // namespace hardsq
