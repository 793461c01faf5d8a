#pragma once

// Cross-checks that do not go through the Morse complex: direct homology of
// the full cubical complex, the planar point configuration space, and simple
// closed forms.

#include <cstdint>
#include <string>
#include <vector>

#include "hardsq/complex.hpp"
#include "hardsq/homology.hpp"

namespace hardsq {

/// Betti numbers of X(n;p,q) from its full chain complex. Throws
/// CellCapExceeded when the complex has more than `cap` cells.
BettiVector direct_betti(int n, int p, int q, const Field& field = Field::gf2(),
                         std::uint64_t cap = kDefaultCellCap);

/// Connected components of the 1-skeleton, by union-find.
std::uint64_t component_count(int n, int p, int q, std::uint64_t cap = kDefaultCellCap);

/// Betti numbers of n labeled points in the plane: beta_j is the j-th
/// elementary symmetric polynomial in 1, ..., n-1.
BettiVector conf_plane_betti(int n);

enum class Regime : std::uint8_t { Solid, Liquid, GasConsistent };

std::string regime_name(Regime r);

/// One label per degree 0 .. max(len(bv), n) - 1 (at least one label).
std::vector<Regime> classify_regime(int n, int p, int q, const BettiVector& bv);

struct TableRow {
  int n = 0;
  int p = 0;
  int q = 0;
  BettiVector betti;
};

struct WitnessPoint {
  int n = 0;
  int p = 0;
  int q = 0;
  int degree = 0;
  /// (n/pq, j/pq) as exact fractions numerator/denominator.
  int x_num = 0;
  int y_num = 0;
  int denom = 1;
  bool inside_region = true;
};

struct WitnessReport {
  std::vector<WitnessPoint> points;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool ok() const { return failures.empty(); }
  std::string to_json() const;
  std::string to_text() const;
};

/// Records (n/pq, j/pq) for every nonzero beta_j and checks it against
/// y <= min(1 - x, x, 1/3). Also requires the rows (2,2,2) and (3,2,2), when
/// present, to have beta_1 != 0; a missing row is noted, not failed.
WitnessReport nonvanishing_witness_check(const std::vector<TableRow>& table);

struct PuzzleCounts {
  std::uint64_t f0 = 0;
  std::uint64_t f1 = 0;
  std::uint64_t dominoes = 0;
};

/// Closed forms for n = pq - 1, where X is a graph: f0 = (pq)!, f1 = (number
/// of domino positions) * (pq - 1) * (pq - 2)!. Throws std::overflow_error
/// when the counts do not fit in 64 bits.
PuzzleCounts puzzle_graph_counts(int p, int q);

}  // namespace hardsq
