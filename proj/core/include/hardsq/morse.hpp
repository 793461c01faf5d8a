#pragma once

// Discrete gradient on X(n;p,q) built from the apex graph, and the Morse
// complex it induces.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardsq/apex_graph.hpp"
#include "hardsq/complex.hpp"
#include "hardsq/grid.hpp"
#include "hardsq/homology.hpp"

namespace hardsq {

/// Partner of one path's independent-set string, or nullopt when the string
/// is the path's unmatched one. Leading "010" blocks are skipped and the first
/// remaining bit is flipped. Throws std::invalid_argument on strings that are
/// not binary or contain "11".
std::optional<std::string> match_string(std::string_view s);

enum class MatchKind : std::uint8_t {
  Critical,
  Up,    // paired with a coface of one dimension more
  Down,  // paired with a facet of one dimension less
};

struct MaskMatch {
  MatchKind kind = MatchKind::Critical;
  int flip_vertex = -1;
  VertexMask partner = 0;
};

/// The multi-path rule: the first path whose string is not unmatched gets its
/// string replaced by its partner.
MaskMatch match_mask(const ApexGraph& g, VertexMask mask);

struct CellMatch {
  MatchKind kind = MatchKind::Critical;
  /// Global apex-graph index of the vertex that differs from the partner.
  int flip_vertex = -1;
  /// Equal to the cell itself when critical.
  Arrangement partner;
};

CellMatch match_cell(const Arrangement& cell);

/// The critical cell with the same apex as `cell`, if any: exists iff no path
/// length is 1 mod 3, and then selects every third vertex starting from the
/// second on each path.
std::optional<Arrangement> critical_cell_of_apex(const Arrangement& cell);

struct MorseOptions {
  int threads = 1;
  std::uint64_t step_budget = 10'000'000;
  /// Compute flows once per label orbit and transport them by relabeling.
  bool use_symmetry = true;
};

class FlowBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CriticalTerm {
  Arrangement cell;
  std::int64_t coefficient = 0;
};

/// Boundary of a critical cell in the Morse complex, by gradient flow of its
/// cubical boundary. Terms are sorted by key with zero coefficients removed.
/// Throws FlowBudgetExceeded after `step_budget` expansions.
std::vector<CriticalTerm> morse_boundary(const Arrangement& critical,
                                         std::uint64_t step_budget = 10'000'000);

/// Critical cells by dimension, each list in ascending key order.
std::vector<std::vector<Arrangement>> enumerate_critical(int n, int p, int q,
                                                          bool use_symmetry = true);

struct MorseComplex {
  int n = 0;
  int p = 1;
  int q = 1;
  std::vector<std::vector<Arrangement>> critical;
  /// boundaries[j] maps degree j to degree j - 1 (boundaries[0] has no rows).
  std::vector<SparseMatrix> boundaries;

  std::vector<std::uint64_t> counts() const;
  ChainComplex chain_complex() const;
  /// {"n","p","q","dims":[...],"boundaries":[[[row,col,coeff],...],...]},
  /// one boundary list per degree starting at 1.
  std::string to_json() const;
};

MorseComplex build_morse_complex(int n, int p, int q, const MorseOptions& options = {});

/// Sub-complex on the critical cells whose apex fits in the p-by-q corner.
/// Throws std::invalid_argument unless p <= source.p and q <= source.q.
MorseComplex restrict_morse(const MorseComplex& source, int p, int q);

enum class PairStatus : std::uint8_t { Critical, PairedUp, PairedDown };

struct PairingEntry {
  PairStatus status = PairStatus::Critical;
  std::uint32_t partner = 0;  // index within the partner's dimension
};

/// Status of every cell of an enumerated complex, indexed like the complex.
struct GradientPairing {
  std::vector<std::vector<PairingEntry>> by_dim;
};

GradientPairing compute_pairing(const CubicalComplex& cx);

/// True iff there is no closed V-path.
bool verify_acyclic(const CubicalComplex& cx, const GradientPairing& pairing);
bool verify_acyclic(int n, int p, int q);

}  // namespace hardsq
