#pragma once

// Exact ranks and Betti numbers of integer chain complexes, over GF(p) or Q.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hardsq/grid.hpp"

namespace hardsq {

class Field {
 public:
  enum class Kind { Prime, Rational };

  static Field gf(std::uint32_t prime);
  static Field gf2() { return gf(2); }
  static Field rational() { return Field(Kind::Rational, 0); }
  /// Accepts "gf2", "gf<p>" for a prime p < 2^31, "rational" or "q".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint32_t prime() const { return prime_; }
  std::string name() const;
  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint32_t prime) : kind_(kind), prime_(prime) {}
  Kind kind_;
  std::uint32_t prime_;
};

struct MatrixEntry {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  std::int64_t value = 0;
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Integer matrix as triplets, kept sorted by (row, col) with no zeros and no
/// repeated positions.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::uint32_t rows, std::uint32_t cols) : rows_(rows), cols_(cols) {}
  /// Sums duplicates and drops zeros.
  SparseMatrix(std::uint32_t rows, std::uint32_t cols, std::vector<MatrixEntry> entries);

  static SparseMatrix identity(std::uint32_t k);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// this * rhs with overflow checks.
  SparseMatrix multiply(const SparseMatrix& rhs) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

struct Reduction {
  std::size_t rank = 0;
  /// Rows that ended up as pivots, one per independent column.
  std::vector<std::uint32_t> pivot_rows;
};

/// Column reduction left to right; a column's pivot is its last nonzero row.
/// Columns flagged in `cleared` are known to reduce to zero and are skipped.
Reduction reduce(const SparseMatrix& m, const Field& field, const std::vector<bool>& cleared = {});

std::size_t rank(const SparseMatrix& m, const Field& field);

/// boundaries[j] is the map C_j -> C_{j-1}; boundaries[0] is the zero map
/// out of C_0 (0 rows).
struct ChainComplex {
  std::vector<std::uint64_t> cells;
  std::vector<SparseMatrix> boundaries;

  int top_dimension() const { return static_cast<int>(cells.size()) - 1; }
  /// Throws std::logic_error when matrix shapes and cell counts disagree.
  void validate_shapes() const;
  /// Every composite of consecutive boundaries vanishes over the integers.
  bool boundary_squared_zero() const;
};

struct BettiVector {
  std::vector<std::uint64_t> values;
  Field field = Field::gf2();

  std::uint64_t at(std::size_t j) const { return j < values.size() ? values[j] : 0; }
  std::int64_t euler_characteristic() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// beta_j = dim C_j - rank d_j - rank d_{j+1}, trailing zeros removed. Ranks are
/// computed from the top degree down so that pivots clear the next matrix.
BettiVector betti(const ChainComplex& cc, const Field& field);

struct AuditReport {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool ok() const { return failures.empty(); }
};

/// Vanishing above min(pq - n, n, pq/3), Euler characteristic agreement with
/// the f-vector, and (when critical counts are given) the Morse inequalities.
AuditReport audit(int n, int p, int q, const BettiVector& bv, const FVector& fv,
                  std::span<const std::uint64_t> critical_counts = {});

/// Largest degree j allowed a nonzero Betti number: min(pq - n, n, floor(pq/3)),
/// or -1 for an empty complex.
int vanishing_bound(int n, int p, int q);

}  // namespace hardsq
