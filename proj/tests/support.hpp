#pragma once

// Brute-force helpers shared by the unit tests. They work from the
// definitions (square sets, coordinate products) rather than the library's
// apex graphs.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "hardsq/grid.hpp"

namespace hardsq::test {

using Square = std::pair<int, int>;

inline std::set<Square> occupied(const Piece& pc) {
  std::set<Square> out;
  for (int c = pc.col - int(pc.extend_left); c <= pc.col; ++c)
    for (int r = pc.row - int(pc.extend_down); r <= pc.row; ++r) out.insert({c, r});
  return out;
}

inline bool brute_in_x(const Arrangement& arr) {
  std::set<Square> seen;
  for (const auto& pc : arr.pieces())
    for (const auto& s : occupied(pc))
      if (!seen.insert(s).second) return false;
  return true;
}

/// Every cell of the ambient complex: each piece on the board, overlaps allowed.
inline void for_each_ambient_cell(int n, int p, int q,
                                  const std::function<void(const Arrangement&)>& visit) {
  std::vector<Piece> options;
  for (int c = 1; c <= p; ++c)
    for (int r = 1; r <= q; ++r)
      for (int l = 0; l < 2; ++l)
        for (int d = 0; d < 2; ++d)
          if ((!l || c > 1) && (!d || r > 1)) options.push_back(Piece{std::uint8_t(c), std::uint8_t(r), bool(l), bool(d)});
  std::vector<Piece> current(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      visit(Arrangement(Board{p, q}, current));
      return;
    }
    for (const auto& o : options) {
      current[std::size_t(k)] = o;
      rec(k + 1);
    }
  };
  rec(0);
}

/// The 0-faces of a cell: each extended axis collapsed to either end.
inline std::vector<Arrangement> vertices_of(const Arrangement& arr) {
  std::vector<Arrangement> out{arr};
  for (int k = 0; k < arr.size(); ++k) {
    for (int axis = 0; axis < 2; ++axis) {
      std::vector<Arrangement> next;
      for (const auto& a : out) {
        Piece pc = a[k];
        bool extended = axis == 0 ? pc.extend_left : pc.extend_down;
        if (!extended) {
          next.push_back(a);
          continue;
        }
        Arrangement near = a, far = a;
        if (axis == 0) {
          near[k].extend_left = false;
          far[k].extend_left = false;
          far[k].col = std::uint8_t(pc.col - 1);
        } else {
          near[k].extend_down = false;
          far[k].extend_down = false;
          far[k].row = std::uint8_t(pc.row - 1);
        }
        next.push_back(near);
        next.push_back(far);
      }
      out = std::move(next);
    }
  }
  return out;
}

/// Sign by which relabeling acts on the orientation of a cell: the parity of
/// the permutation taking the cell's coordinate order to the relabeled one.
inline int relabel_sign(const Arrangement& cell, const std::vector<int>& perm) {
  std::vector<int> slots;
  for (int k = 0; k < cell.size(); ++k) {
    if (cell[k].extend_left) slots.push_back(2 * perm[std::size_t(k)]);
    if (cell[k].extend_down) slots.push_back(2 * perm[std::size_t(k)] + 1);
  }
  int inversions = 0;
  for (std::size_t a = 0; a < slots.size(); ++a)
    for (std::size_t b = a + 1; b < slots.size(); ++b) inversions += slots[a] > slots[b];
  return inversions % 2 ? -1 : 1;
}

using Chain = std::map<CellKey, long long>;

inline Chain boundary_chain(const Chain& c, Board board, int n) {
  Chain out;
  for (const auto& [key, coeff] : c)
    for (const auto& t : boundary(Arrangement::from_key(board, n, key))) out[t.cell.key()] += coeff * t.coefficient;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) perm[std::size_t(k)] = k;
  std::vector<std::vector<int>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct Instance {
  int n, p, q;
};

/// Every (n, p, q) with 1 <= n <= max_n, 1 <= p, q <= max_side and n <= pq.
inline std::vector<Instance> instances(int max_n, int max_side) {
  std::vector<Instance> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 1; p <= max_side; ++p)
      for (int q = 1; q <= max_side; ++q)
        if (n <= p * q) out.push_back({n, p, q});
  return out;
}

}  // namespace hardsq::test
