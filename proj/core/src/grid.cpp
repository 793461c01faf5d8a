#include "hardsq/grid.hpp"

#include <cmath>
#include <sstream>

namespace hardsq {

void validate_instance(int n, int p, int q) {
  if (n < 0 || n > kMaxPieces)
    throw std::invalid_argument("number of squares must be in 0.." +
                                std::to_string(kMaxPieces));
  if (p < 1 || q < 1 || p > kMaxBoardSide || q > kMaxBoardSide)
    throw std::invalid_argument("board sides must be in 1.." +
                                std::to_string(kMaxBoardSide));
}

Piece make_piece(int col, int row, bool extend_left, bool extend_down) {
  if (col < 1 || row < 1 || col > kMaxBoardSide || row > kMaxBoardSide)
    throw std::invalid_argument("piece corner off the board");
  if ((extend_left && col < 2) || (extend_down && row < 2))
    throw std::invalid_argument("piece extends off the board");
  return Piece{static_cast<std::uint8_t>(col), static_cast<std::uint8_t>(row),
               extend_left, extend_down};
}

double snap(double x) {
  double lo = std::floor(x);
  return lo == x ? x : lo + 0.5;
}

bool pieces_overlap(const Piece& a, const Piece& b) {
  bool cols = a.min_col() <= b.col && b.min_col() <= a.col;
  bool rows = a.min_row() <= b.row && b.min_row() <= a.row;
  return cols && rows;
}

Arrangement::Arrangement(Board board, std::span<const Piece> pieces)
    : board_(board), count_(static_cast<int>(pieces.size())) {
  if (pieces.size() > std::size_t(kMaxPieces))
    throw std::invalid_argument("too many pieces");
  for (std::size_t k = 0; k < pieces.size(); ++k) pieces_[k] = pieces[k];
}

int Arrangement::dimension() const {
  int d = 0;
  for (const auto& pc : pieces()) d += pc.dimension();
  return d;
}

int Arrangement::corner_sum() const {
  int s = 0;
  for (const auto& pc : pieces()) s += pc.col + pc.row;
  return s;
}

bool Arrangement::on_board() const {
  for (const auto& pc : pieces()) {
    if (!board_.contains(pc.col, pc.row)) return false;
    if (!board_.contains(pc.min_col(), pc.min_row())) return false;
  }
  return true;
}

CellKey Arrangement::key() const {
  CellKey k = 0;
  for (int i = 0; i < count_; ++i) {
    const Piece& pc = pieces_[std::size_t(i)];
    CellKey corner = CellKey((pc.col - 1) << 4 | (pc.row - 1));
    CellKey flags = CellKey(int(pc.extend_left) << 1 | int(pc.extend_down));
    k |= corner << (120 - 8 * i);
    k |= flags << (22 - 2 * i);
  }
  return k;
}

Arrangement Arrangement::from_key(Board board, int n, CellKey key) {
  Arrangement a;
  a.board_ = board;
  a.count_ = n;
  for (int i = 0; i < n; ++i) {
    auto corner = unsigned(key >> (120 - 8 * i)) & 0xFFu;
    auto flags = unsigned(key >> (22 - 2 * i)) & 0x3u;
    Piece& pc = a.pieces_[std::size_t(i)];
    pc.col = static_cast<std::uint8_t>((corner >> 4) + 1);
    pc.row = static_cast<std::uint8_t>((corner & 0xFu) + 1);
    pc.extend_left = (flags & 2u) != 0;
    pc.extend_down = (flags & 1u) != 0;
  }
  return a;
}

Arrangement Arrangement::relabeled(std::span<const int> perm) const {
  if (perm.size() != std::size_t(count_))
    throw std::invalid_argument("permutation size does not match piece count");
  Arrangement out = *this;
  for (int k = 0; k < count_; ++k)
    out.pieces_[std::size_t(perm[std::size_t(k)])] = pieces_[std::size_t(k)];
  return out;
}

bool is_cell_of_x(const Arrangement& arr) {
  auto ps = arr.pieces();
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a + 1; b < ps.size(); ++b)
      if (pieces_overlap(ps[a], ps[b])) return false;
  return true;
}

Apex apex_of(const Arrangement& arr) {
  Apex apex;
  apex.corners.reserve(std::size_t(arr.size()));
  for (const auto& pc : arr.pieces()) apex.corners.emplace_back(pc.col, pc.row);
  return apex;
}

Arrangement apex_cell(const Arrangement& arr) {
  Arrangement out = arr;
  for (int k = 0; k < out.size(); ++k) {
    out[k].extend_left = false;
    out[k].extend_down = false;
  }
  return out;
}

std::vector<SignedCell> boundary(const Arrangement& arr) {
  std::vector<SignedCell> out;
  out.reserve(std::size_t(2 * arr.dimension()));
  int axis = 0;
  for (int k = 0; k < arr.size(); ++k) {
    for (int dir = 0; dir < 2; ++dir) {
      const Piece& pc = arr[k];
      bool extended = dir == 0 ? pc.extend_left : pc.extend_down;
      if (!extended) continue;
      int sign = axis % 2 == 0 ? 1 : -1;
      ++axis;
      Arrangement near = arr;
      Arrangement far = arr;
      if (dir == 0) {
        near[k].extend_left = false;
        far[k].extend_left = false;
        far[k].col = static_cast<std::uint8_t>(pc.col - 1);
      } else {
        near[k].extend_down = false;
        far[k].extend_down = false;
        far[k].row = static_cast<std::uint8_t>(pc.row - 1);
      }
      out.push_back({sign, near});
      out.push_back({-sign, far});
    }
  }
  return out;
}

std::int64_t FVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(counts[i]);
  return chi;
}

namespace {

bool place_apex(Arrangement& arr, int k, std::vector<char>& used,
                const std::function<bool(const Arrangement&)>& visit) {
  Board b = arr.board();
  if (k == arr.size()) return visit(arr);
  for (int col = 1; col <= b.cols; ++col) {
    for (int row = 1; row <= b.rows; ++row) {
      auto idx = std::size_t((col - 1) * b.rows + (row - 1));
      if (used[idx]) continue;
      used[idx] = 1;
      arr[k] = Piece{static_cast<std::uint8_t>(col), static_cast<std::uint8_t>(row),
                     false, false};
      bool go_on = place_apex(arr, k + 1, used, visit);
      used[idx] = 0;
      if (!go_on) return false;
    }
  }
  return true;
}

}  // namespace

void for_each_apex(int n, int p, int q,
                   const std::function<bool(const Arrangement&)>& visit) {
  validate_instance(n, p, q);
  if (n > p * q) return;
  std::vector<Piece> pieces(static_cast<std::size_t>(n));
  Arrangement arr(Board{p, q}, pieces);
  std::vector<char> used(std::size_t(p * q), 0);
  place_apex(arr, 0, used, visit);
}

std::uint64_t vertex_count(int n, int p, int q) {
  validate_instance(n, p, q);
  if (n > p * q) return 0;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(total, std::uint64_t(p * q - i), &total))
      throw std::overflow_error("vertex count overflows 64 bits");
  }
  return total;
}

std::string to_string(const Arrangement& arr) {
  std::ostringstream os;
  os << '{';
  for (int k = 0; k < arr.size(); ++k) {
    const Piece& pc = arr[k];
    if (k) os << ' ';
    os << '(' << int(pc.col) << ',' << int(pc.row);
    if (pc.extend_left) os << ",L";
    if (pc.extend_down) os << ",D";
    os << ')';
  }
  os << '}';
  return os.str();
}

}  // namespace hardsq
