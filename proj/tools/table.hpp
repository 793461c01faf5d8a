#pragma once

#include <string>
#include <vector>

#include "hardsq/homology.hpp"
#include "hardsq/morse.hpp"
#include "hardsq/oracle.hpp"

namespace hardsq::cli {

struct TableEntry {
  int n = 0;
  int p = 0;
  int q = 0;
  /// One Betti vector per requested field, in request order.
  std::vector<BettiVector> betti;
};

struct BettiTable {
  int max_n = 0;
  std::vector<Field> fields;
  std::vector<TableEntry> rows;
};

/// Rows (n, p, q) with 2 <= p <= q <= n <= max_n and pq >= n, ordered by n,
/// then p, then q. For n <= 5 every row is restricted from the (n, n, n)
/// Morse complex; larger n are built directly.
BettiTable compute_table(int max_n, const std::vector<Field>& fields, const MorseOptions& options);

/// Header n,p,q,field,b0..b{D-1},regimes where D = max(max_n, longest Betti
/// vector); regimes are the per-degree labels joined by ';'.
std::string table_csv(const BettiTable& table);

/// Rows whose Betti vectors differ between fields.
std::vector<std::string> table_disagreements(const BettiTable& table);

}  // namespace hardsq::cli
