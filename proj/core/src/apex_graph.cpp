#include "hardsq/apex_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hardsq {

namespace {

constexpr int kGridSide = kMaxBoardSide + 2;

// Occupancy of the apex, indexed [col][row] with a one-square margin.
struct Occupancy {
  std::array<std::array<std::int8_t, kGridSide>, kGridSide> owner;

  explicit Occupancy(const Arrangement& arr) {
    for (auto& column : owner) column.fill(-1);
    for (int k = 0; k < arr.size(); ++k)
      owner[arr[k].col][arr[k].row] = static_cast<std::int8_t>(k);
  }
  bool occupied(int col, int row) const { return owner[std::size_t(col)][std::size_t(row)] >= 0; }
};

bool before(const ApexVertex& a, const ApexVertex& b) {
  if (a.diagonal() != b.diagonal()) return a.diagonal() < b.diagonal();
  return a.col2 < b.col2;
}

}  // namespace

ApexGraph ApexGraph::build(const Arrangement& arr) {
  ApexGraph g;
  g.apex_ = apex_cell(arr);
  g.slot_.fill(-1);
  Occupancy occ(arr);

  for (int k = 0; k < arr.size(); ++k) {
    int i = arr[k].col;
    int j = arr[k].row;
    if (i > 1 && !occ.occupied(i - 1, j))
      g.vertices_[std::size_t(g.count_++)] = ApexVertex{2 * i - 1, 2 * j, Extension::Left, k};
    if (j > 1 && !occ.occupied(i, j - 1))
      g.vertices_[std::size_t(g.count_++)] = ApexVertex{2 * i, 2 * j - 1, Extension::Down, k};
  }
  std::sort(g.vertices_.begin(), g.vertices_.begin() + g.count_, before);

  for (int v = 0; v < g.count_; ++v) {
    const ApexVertex& cur = g.vertices_[std::size_t(v)];
    g.slot_[std::size_t(2 * cur.piece + (cur.kind == Extension::Down ? 1 : 0))] = v;
    bool linked = false;
    if (v > 0) {
      const ApexVertex& prev = g.vertices_[std::size_t(v - 1)];
      if (prev.diagonal() == cur.diagonal() && cur.col2 - prev.col2 == 1) {
        if (prev.kind == Extension::Left) {
          // Same piece growing left or down: they collide iff the square
          // diagonally below-left is occupied.
          int i = (prev.col2 + 1) / 2;
          int j = prev.row2 / 2;
          linked = occ.occupied(i - 1, j - 1);
        } else {
          // Down option of (i-1, j+1) against left option of (i, j); both
          // exist only if (i-1, j) is empty, and then they always collide.
          linked = true;
        }
      }
    }
    g.linked_prev_[std::size_t(v)] = linked;
    if (linked)
      ++g.paths_[std::size_t(g.path_count_ - 1)].length;
    else
      g.paths_[std::size_t(g.path_count_++)] = PathSpan{v, 1};
  }
  return g;
}

std::vector<ApexVertex> ApexGraph::vertices() const {
  return {vertices_.begin(), vertices_.begin() + count_};
}

std::vector<std::pair<int, int>> ApexGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < count_; ++v)
    if (linked_prev_[std::size_t(v)]) out.emplace_back(v - 1, v);
  return out;
}

bool ApexGraph::is_independent(VertexMask mask) const {
  if (count_ < 32 && (mask >> count_) != 0) return false;
  for (int v = 1; v < count_; ++v)
    if (linked_prev_[std::size_t(v)] && ((mask >> v) & 1u) && ((mask >> (v - 1)) & 1u))
      return false;
  return true;
}

VertexMask encode_cell(const ApexGraph& g, const Arrangement& arr) {
  VertexMask mask = 0;
  for (int k = 0; k < arr.size(); ++k) {
    const Piece& pc = arr[k];
    for (auto kind : {Extension::Left, Extension::Down}) {
      bool grown = kind == Extension::Left ? pc.extend_left : pc.extend_down;
      if (!grown) continue;
      int v = g.vertex_of(k, kind);
      if (v < 0) throw std::invalid_argument("cell is not in X or has a different apex");
      mask |= VertexMask{1} << v;
    }
  }
  return mask;
}

Arrangement decode_cell(const ApexGraph& g, VertexMask mask) {
  if (!g.is_independent(mask))
    throw std::invalid_argument("vertex set is not independent in the apex graph");
  Arrangement out = g.apex();
  for (int v = 0; v < g.size(); ++v) {
    if (!((mask >> v) & 1u)) continue;
    const ApexVertex& vx = g.vertex(v);
    if (vx.kind == Extension::Left)
      out[vx.piece].extend_left = true;
    else
      out[vx.piece].extend_down = true;
  }
  return out;
}

std::vector<std::string> path_strings(const ApexGraph& g, VertexMask mask) {
  std::vector<std::string> out;
  out.reserve(g.paths().size());
  for (const auto& path : g.paths()) {
    std::string s(std::size_t(path.length), '0');
    for (int t = 0; t < path.length; ++t)
      if ((mask >> (path.first + t)) & 1u) s[std::size_t(t)] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

VertexMask mask_from_strings(const ApexGraph& g, const std::vector<std::string>& strings) {
  if (strings.size() != g.paths().size())
    throw std::invalid_argument("wrong number of path strings");
  VertexMask mask = 0;
  for (std::size_t p = 0; p < strings.size(); ++p) {
    const auto& path = g.paths()[p];
    if (strings[p].size() != std::size_t(path.length))
      throw std::invalid_argument("path string has the wrong length");
    for (int t = 0; t < path.length; ++t) {
      char c = strings[p][std::size_t(t)];
      if (c == '1')
        mask |= VertexMask{1} << (path.first + t);
      else if (c != '0')
        throw std::invalid_argument("path strings must be binary");
    }
  }
  return mask;
}

std::uint64_t fibonacci(int k) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

std::uint64_t independent_set_count(const ApexGraph& g) {
  std::uint64_t total = 1;
  for (const auto& path : g.paths()) total *= fibonacci(path.length + 2);
  return total;
}

namespace {

// Independence polynomial of a path on k vertices.
std::vector<std::uint64_t> path_polynomial(int k) {
  // P(k) = P(k-1) + t P(k-2), P(0) = 1, P(1) = 1 + t.
  std::vector<std::uint64_t> older{1}, old{1, 1};
  if (k == 0) return older;
  for (int i = 2; i <= k; ++i) {
    std::vector<std::uint64_t> next(old.size() + 1, 0);
    for (std::size_t d = 0; d < old.size(); ++d) next[d] += old[d];
    for (std::size_t d = 0; d < older.size(); ++d) next[d + 1] += older[d];
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    older = std::move(old);
    old = std::move(next);
  }
  return old;
}

}  // namespace

std::vector<std::uint64_t> independence_polynomial(const ApexGraph& g) {
  std::vector<std::uint64_t> poly{1};
  for (const auto& path : g.paths()) {
    auto factor = path_polynomial(path.length);
    std::vector<std::uint64_t> next(poly.size() + factor.size() - 1, 0);
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (std::size_t b = 0; b < factor.size(); ++b) next[a + b] += poly[a] * factor[b];
    poly = std::move(next);
  }
  return poly;
}

void for_each_independent_set(const ApexGraph& g,
                              const std::function<void(VertexMask)>& visit) {
  // Depth-first over vertices from the highest index down, so that masks come
  // out in increasing numeric order.
  const int n = g.size();
  std::function<void(int, VertexMask)> rec = [&](int v, VertexMask mask) {
    if (v < 0) {
      visit(mask);
      return;
    }
    rec(v - 1, mask);
    bool blocked = v + 1 < n && g.linked_to_previous(v + 1) && ((mask >> (v + 1)) & 1u);
    if (!blocked) rec(v - 1, mask | (VertexMask{1} << v));
  };
  rec(n - 1, 0);
}

std::vector<std::vector<HalfSquare>> half_square_allocation(const ApexGraph& g) {
  std::vector<std::vector<HalfSquare>> r(std::size_t(g.size()));
  for (const auto& path : g.paths()) {
    for (int t = 0; t < path.length; ++t) {
      int v = path.first + t;
      const ApexVertex& vx = g.vertex(v);
      auto& out = r[std::size_t(v)];
      bool first = t == 0;
      bool last = t == path.length - 1;
      if (vx.kind == Extension::Left) {
        int i = (vx.col2 + 1) / 2;
        int j = vx.row2 / 2;
        out.push_back({i, j, Half::UpperLeft});
        out.push_back({i - 1, j, Half::LowerRight});
        if (first) out.push_back({i - 1, j, Half::UpperLeft});  // (1)
        if (last) {
          // The following position on the diagonal is the down option of the
          // same piece; it cannot be linked since v ends its path.
          bool follower = g.vertex_of(vx.piece, Extension::Down) >= 0;
          if (!follower)
            out.push_back({i, j, Half::LowerRight});  // (4)
          else
            out.push_back({i - 1, j - 1, Half::UpperLeft});  // (6)
        }
      } else {
        int i = vx.col2 / 2;
        int j = (vx.row2 + 1) / 2;
        out.push_back({i, j, Half::LowerRight});
        out.push_back({i, j - 1, Half::UpperLeft});
        if (last) out.push_back({i, j - 1, Half::LowerRight});  // (2)
        if (first) {
          bool predecessor = g.vertex_of(vx.piece, Extension::Left) >= 0;
          if (!predecessor)
            out.push_back({i, j, Half::UpperLeft});  // (3)
          else
            out.push_back({i - 1, j - 1, Half::LowerRight});  // (5)
        }
      }
    }
  }
  return r;
}

}  // namespace hardsq
