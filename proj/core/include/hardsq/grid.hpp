#pragma once

// Cells of the cubical complex X(n;p,q): n labeled pieces (1x1, 1x2, 2x1 or
// 2x2 rectangles of board squares) on a p-by-q board, no two overlapping.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardsq {

inline constexpr int kMaxPieces = 12;
inline constexpr int kMaxBoardSide = 16;

/// A p-by-q board; columns are numbered 1..cols left to right, rows 1..rows
/// bottom to top.
struct Board {
  int cols = 1;
  int rows = 1;

  int area() const { return cols * rows; }
  bool contains(int col, int row) const {
    return col >= 1 && col <= cols && row >= 1 && row <= rows;
  }
  friend bool operator==(const Board&, const Board&) = default;
};

/// Throws std::invalid_argument unless 0 <= n <= kMaxPieces and
/// 1 <= p, q <= kMaxBoardSide.
void validate_instance(int n, int p, int q);

/// One labeled piece, located by its upper-right board square.
struct Piece {
  std::uint8_t col = 1;
  std::uint8_t row = 1;
  bool extend_left = false;
  bool extend_down = false;

  int dimension() const { return int(extend_left) + int(extend_down); }
  int min_col() const { return col - int(extend_left); }
  int min_row() const { return row - int(extend_down); }
  friend bool operator==(const Piece&, const Piece&) = default;
};

Piece make_piece(int col, int row, bool extend_left = false,
                 bool extend_down = false);

/// Midpoint rounding used by the retraction onto the grid: integers are fixed,
/// anything strictly between k and k+1 goes to k + 1/2.
double snap(double x);

/// True iff the board squares covered by the two pieces intersect.
bool pieces_overlap(const Piece& a, const Piece& b);

/// Totally ordered 128-bit identity of a cell. All corners occupy the high
/// bits (piece 0 most significant), extension flags the low bits, so that
/// ascending keys list cells apex by apex in lexicographic corner order.
__extension__ typedef unsigned __int128 CellKey;

struct CellKeyHash {
  std::size_t operator()(CellKey k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
    h ^= hi + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(Board board, std::span<const Piece> pieces);

  Board board() const { return board_; }
  int size() const { return count_; }
  std::span<const Piece> pieces() const { return {pieces_.data(), std::size_t(count_)}; }
  const Piece& operator[](int k) const { return pieces_[std::size_t(k)]; }
  Piece& operator[](int k) { return pieces_[std::size_t(k)]; }

  int dimension() const;
  /// Sum of all corner coordinates; strictly decreases along far facets.
  int corner_sum() const;
  bool on_board() const;

  CellKey key() const;
  static Arrangement from_key(Board board, int n, CellKey key);

  /// Moves the piece labeled k to label perm[k].
  Arrangement relabeled(std::span<const int> perm) const;

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.board_ == b.board_ && a.count_ == b.count_ && a.key() == b.key();
  }

 private:
  Board board_{};
  std::array<Piece, kMaxPieces> pieces_{};
  int count_ = 0;
};

/// True iff no two pieces overlap (pieces are assumed to be on the board).
bool is_cell_of_x(const Arrangement& arr);

/// Upper-right corners of the pieces, one per label.
struct Apex {
  std::vector<std::pair<int, int>> corners;
  friend bool operator==(const Apex&, const Apex&) = default;
};

Apex apex_of(const Arrangement& arr);
/// The 0-cell whose pieces are the apex corners.
Arrangement apex_cell(const Arrangement& arr);

struct SignedCell {
  int coefficient = 0;
  Arrangement cell;
};

/// Cubical boundary. Non-degenerate coordinates are ordered x1,y1,...,xn,yn;
/// the k-th one (0-based) contributes (-1)^k times (near facet - far facet),
/// where the near facet drops the extension in place and the far facet moves
/// the corner one square left or down.
std::vector<SignedCell> boundary(const Arrangement& arr);

/// Counts by dimension; trailing zeros are never stored.
struct FVector {
  std::vector<std::uint64_t> counts;
  std::int64_t euler_characteristic() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Visits every labeled placement of n distinct squares in lexicographic
/// order of the corner list. Returns early if the callback returns false.
void for_each_apex(int n, int p, int q,
                   const std::function<bool(const Arrangement&)>& visit);

/// Visits each n-subset of board squares once, as a 0-cell whose corners are
/// in ascending (col, row) order, subsets in lexicographic order.
void for_each_unlabeled_apex(int n, int p, int q,
                             const std::function<bool(const Arrangement&)>& visit);

/// Visits every cell of X(n;p,q) exactly once in ascending CellKey order
/// (apex-major). Nothing is visited when n > pq.
void for_each_cell(int n, int p, int q,
                   const std::function<bool(const Arrangement&)>& visit);

std::vector<Arrangement> enumerate_cells(int n, int p, int q);

/// Cell counts by dimension from the independence polynomials of the apex
/// graphs. Relabeling does not change an apex graph, so each unlabeled apex
/// is visited once and counted n! times.
FVector f_vector(int n, int p, int q);

/// Number of labeled placements pq (pq-1) ... (pq-n+1).
std::uint64_t vertex_count(int n, int p, int q);

/// JSON array of {id, pieces: [[col,row,el,ed],...], dim} in enumeration
/// order.
std::string complex_json(int n, int p, int q);

std::string to_string(const Arrangement& arr);

}  // namespace hardsq
