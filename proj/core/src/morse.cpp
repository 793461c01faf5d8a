#include "hardsq/morse.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <unordered_map>

#include "hardsq/parallel.hpp"

namespace hardsq {

namespace {

// Offset (within the path) of the bit that the single-path matching flips, or
// -1 for the unmatched string.
int match_path(VertexMask mask, int first, int length) {
  auto bit = [&](int t) { return (mask >> (first + t)) & 1u; };
  int pos = 0;
  while (pos + 3 <= length && !bit(pos) && bit(pos + 1) && !bit(pos + 2)) pos += 3;
  int rest = length - pos;
  if (rest == 0) return -1;
  if (rest == 2 && !bit(pos) && bit(pos + 1)) return -1;
  return pos;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Morse coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Morse coefficient overflow");
  return r;
}

bool key_less(const Arrangement& a, const Arrangement& b) { return a.key() < b.key(); }

}  // namespace

std::optional<std::string> match_string(std::string_view s) {
  if (s.size() > 32) throw std::invalid_argument("path strings longer than 32 are not supported");
  VertexMask mask = 0;
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t] != '0' && s[t] != '1') throw std::invalid_argument("path strings must be binary");
    if (s[t] == '1') {
      if (t > 0 && s[t - 1] == '1') throw std::invalid_argument("path string has adjacent 1s");
      mask |= VertexMask{1} << t;
    }
  }
  int flip = match_path(mask, 0, static_cast<int>(s.size()));
  if (flip < 0) return std::nullopt;
  std::string out(s);
  out[std::size_t(flip)] = out[std::size_t(flip)] == '0' ? '1' : '0';
  return out;
}

MaskMatch match_mask(const ApexGraph& g, VertexMask mask) {
  for (const auto& path : g.paths()) {
    int offset = match_path(mask, path.first, path.length);
    if (offset < 0) continue;
    int v = path.first + offset;
    VertexMask bit = VertexMask{1} << v;
    return MaskMatch{(mask & bit) ? MatchKind::Down : MatchKind::Up, v, mask ^ bit};
  }
  return MaskMatch{MatchKind::Critical, -1, mask};
}

CellMatch match_cell(const Arrangement& cell) {
  ApexGraph g = ApexGraph::build(cell);
  MaskMatch m = match_mask(g, encode_cell(g, cell));
  if (m.kind == MatchKind::Critical) return CellMatch{m.kind, -1, cell};
  return CellMatch{m.kind, m.flip_vertex, decode_cell(g, m.partner)};
}

std::optional<Arrangement> critical_cell_of_apex(const Arrangement& cell) {
  ApexGraph g = ApexGraph::build(cell);
  VertexMask mask = 0;
  for (const auto& path : g.paths()) {
    if (path.length % 3 == 1) return std::nullopt;
    for (int t = 1; t < path.length; t += 3) mask |= VertexMask{1} << (path.first + t);
  }
  return decode_cell(g, mask);
}

std::vector<CriticalTerm> morse_boundary(const Arrangement& critical, std::uint64_t step_budget) {
  // Upward-paired facets wait in a frontier ordered by (corner sum, flipped
  // vertex, key). Expanding one only ever produces entries that are strictly
  // smaller: far facets lower the corner sum, near facets flip an earlier
  // vertex. Popping the largest entry therefore sees its final coefficient.
  struct FlowKey {
    int corner_sum;
    int flip;
    CellKey key;
    auto operator<=>(const FlowKey&) const = default;
  };
  struct Pending {
    std::int64_t coefficient;
    Arrangement cell;
    Arrangement partner;
  };
  std::map<FlowKey, Pending> frontier;
  std::map<CellKey, CriticalTerm> result;

  auto add = [&](const Arrangement& cell, std::int64_t coefficient) {
    CellMatch m = match_cell(cell);
    if (m.kind == MatchKind::Down) return FlowKey{-1, -1, 0};
    if (m.kind == MatchKind::Critical) {
      auto [it, fresh] = result.try_emplace(cell.key(), CriticalTerm{cell, 0});
      it->second.coefficient = checked_add(it->second.coefficient, coefficient);
      return FlowKey{-1, -1, 0};
    }
    FlowKey key{cell.corner_sum(), m.flip_vertex, cell.key()};
    auto [it, fresh] = frontier.try_emplace(key, Pending{0, cell, m.partner});
    it->second.coefficient = checked_add(it->second.coefficient, coefficient);
    return key;
  };

  for (const auto& term : boundary(critical)) add(term.cell, term.coefficient);

  std::uint64_t steps = 0;
  while (!frontier.empty()) {
    auto top = std::prev(frontier.end());
    FlowKey popped = top->first;
    Pending item = std::move(top->second);
    frontier.erase(top);
    if (item.coefficient == 0) continue;
    if (++steps > step_budget)
      throw FlowBudgetExceeded("gradient flow from " + to_string(critical) + " exceeded " +
                               std::to_string(step_budget) + " steps");

    auto faces = boundary(item.partner);
    std::int64_t incidence = 0;
    for (const auto& t : faces)
      if (t.cell == item.cell) incidence = t.coefficient;
    if (incidence == 0) throw std::logic_error("paired cells are not incident");
    for (const auto& t : faces) {
      if (t.cell == item.cell) continue;
      std::int64_t c = checked_mul(-item.coefficient, checked_mul(incidence, t.coefficient));
      FlowKey k = add(t.cell, c);
      if (k.corner_sum >= 0 && !(k < popped))
        throw std::logic_error("gradient flow is not monotone at " + to_string(t.cell));
    }
  }

  std::vector<CriticalTerm> out;
  for (auto& [key, term] : result)
    if (term.coefficient != 0) out.push_back(std::move(term));
  return out;
}

namespace {

// Sign of the relabeling map on the orientation of `cell`.
int relabel_sign(const Arrangement& cell, std::span<const int> perm) {
  std::array<int, 2 * kMaxPieces> slots{};
  int m = 0;
  for (int k = 0; k < cell.size(); ++k) {
    if (cell[k].extend_left) slots[std::size_t(m++)] = 2 * perm[std::size_t(k)];
    if (cell[k].extend_down) slots[std::size_t(m++)] = 2 * perm[std::size_t(k)] + 1;
  }
  int inversions = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (slots[std::size_t(a)] > slots[std::size_t(b)]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool corners_ascending(const Arrangement& c) {
  for (int k = 1; k < c.size(); ++k) {
    auto a = std::pair(int(c[k - 1].col), int(c[k - 1].row));
    auto b = std::pair(int(c[k].col), int(c[k].row));
    if (!(a < b)) return false;
  }
  return true;
}

void push_critical(std::vector<std::vector<Arrangement>>& dims, const Arrangement& c) {
  auto d = std::size_t(c.dimension());
  if (dims.size() <= d) dims.resize(d + 1);
  dims[d].push_back(c);
}

}  // namespace

std::vector<std::vector<Arrangement>> enumerate_critical(int n, int p, int q, bool use_symmetry) {
  validate_instance(n, p, q);
  std::vector<std::vector<Arrangement>> dims;
  if (n > p * q) return dims;
  if (use_symmetry) {
    auto perms = all_permutations(n);
    for_each_unlabeled_apex(n, p, q, [&](const Arrangement& apex) {
      if (auto crit = critical_cell_of_apex(apex))
        for (const auto& perm : perms) push_critical(dims, crit->relabeled(perm));
      return true;
    });
    for (auto& v : dims) std::sort(v.begin(), v.end(), key_less);
  } else {
    for_each_apex(n, p, q, [&](const Arrangement& apex) {
      if (auto crit = critical_cell_of_apex(apex)) push_critical(dims, *crit);
      return true;
    });
  }
  return dims;
}

std::vector<std::uint64_t> MorseComplex::counts() const {
  std::vector<std::uint64_t> out;
  for (const auto& v : critical) out.push_back(v.size());
  return out;
}

ChainComplex MorseComplex::chain_complex() const {
  ChainComplex cc;
  cc.cells = counts();
  cc.boundaries = boundaries;
  return cc;
}

std::string MorseComplex::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["p"] = p;
  j["q"] = q;
  j["dims"] = counts();
  auto all = nlohmann::ordered_json::array();
  for (std::size_t d = 1; d < boundaries.size(); ++d) {
    auto degree = nlohmann::ordered_json::array();
    for (const auto& e : boundaries[d].entries()) degree.push_back({e.row, e.col, e.value});
    all.push_back(std::move(degree));
  }
  j["boundaries"] = std::move(all);
  return j.dump();
}

MorseComplex build_morse_complex(int n, int p, int q, const MorseOptions& options) {
  MorseComplex mc;
  mc.n = n;
  mc.p = p;
  mc.q = q;
  mc.critical = enumerate_critical(n, p, q, options.use_symmetry);

  std::vector<std::unordered_map<CellKey, std::uint32_t, CellKeyHash>> index(mc.critical.size());
  for (std::size_t d = 0; d < mc.critical.size(); ++d) {
    index[d].reserve(mc.critical[d].size());
    for (std::uint32_t i = 0; i < mc.critical[d].size(); ++i)
      index[d].emplace(mc.critical[d][i].key(), i);
  }

  const auto perms = options.use_symmetry ? all_permutations(n) : std::vector<std::vector<int>>{};
  mc.boundaries.reserve(mc.critical.size());
  for (std::size_t d = 0; d < mc.critical.size(); ++d) {
    auto cols = static_cast<std::uint32_t>(mc.critical[d].size());
    if (d == 0) {
      mc.boundaries.emplace_back(0, cols);
      continue;
    }
    std::vector<Arrangement> sources;
    for (const auto& c : mc.critical[d])
      if (!options.use_symmetry || corners_ascending(c)) sources.push_back(c);

    std::vector<std::vector<CriticalTerm>> flows(sources.size());
    parallel_for(sources.size(), options.threads, [&](std::size_t i) {
      flows[i] = morse_boundary(sources[i], options.step_budget);
    });

    std::vector<MatrixEntry> entries;
    auto row_of = [&](const Arrangement& g) {
      auto it = index[d - 1].find(g.key());
      if (it == index[d - 1].end())
        throw std::logic_error("flow reached a cell that is not critical: " + to_string(g));
      return it->second;
    };
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (!options.use_symmetry) {
        std::uint32_t col = index[d].at(sources[i].key());
        for (const auto& t : flows[i]) entries.push_back({row_of(t.cell), col, t.coefficient});
        continue;
      }
      for (const auto& perm : perms) {
        Arrangement image = sources[i].relabeled(perm);
        std::uint32_t col = index[d].at(image.key());
        int sign = relabel_sign(sources[i], perm);
        for (const auto& t : flows[i]) {
          int s = sign * relabel_sign(t.cell, perm);
          entries.push_back({row_of(t.cell.relabeled(perm)), col, s * t.coefficient});
        }
      }
    }
    mc.boundaries.emplace_back(static_cast<std::uint32_t>(mc.critical[d - 1].size()), cols,
                               std::move(entries));
  }
  return mc;
}

MorseComplex restrict_morse(const MorseComplex& source, int p, int q) {
  if (p < 1 || q < 1 || p > source.p || q > source.q)
    throw std::invalid_argument("restriction must fit inside the source board");
  MorseComplex out;
  out.n = source.n;
  out.p = p;
  out.q = q;
  Board board{p, q};

  auto fits = [&](const Arrangement& c) {
    for (const auto& pc : c.pieces())
      if (pc.col > p || pc.row > q) return false;
    return true;
  };

  constexpr std::uint32_t kDropped = ~std::uint32_t{0};
  std::vector<std::vector<std::uint32_t>> remap(source.critical.size());
  for (std::size_t d = 0; d < source.critical.size(); ++d) {
    std::vector<Arrangement> kept;
    remap[d].assign(source.critical[d].size(), kDropped);
    for (std::size_t i = 0; i < source.critical[d].size(); ++i) {
      const auto& c = source.critical[d][i];
      if (!fits(c)) continue;
      remap[d][i] = static_cast<std::uint32_t>(kept.size());
      kept.emplace_back(board, c.pieces());
    }
    out.critical.push_back(std::move(kept));
  }
  while (!out.critical.empty() && out.critical.back().empty()) out.critical.pop_back();

  for (std::size_t d = 0; d < out.critical.size(); ++d) {
    auto cols = static_cast<std::uint32_t>(out.critical[d].size());
    if (d == 0) {
      out.boundaries.emplace_back(0, cols);
      continue;
    }
    std::vector<MatrixEntry> entries;
    for (const auto& e : source.boundaries[d].entries()) {
      std::uint32_t col = remap[d][e.col];
      if (col == kDropped) continue;
      std::uint32_t row = remap[d - 1][e.row];
      if (row == kDropped)
        throw std::logic_error("a restricted critical cell has a boundary outside the board");
      entries.push_back({row, col, e.value});
    }
    out.boundaries.emplace_back(static_cast<std::uint32_t>(out.critical[d - 1].size()), cols,
                                std::move(entries));
  }
  return out;
}

GradientPairing compute_pairing(const CubicalComplex& cx) {
  GradientPairing pairing;
  pairing.by_dim.resize(std::size_t(cx.top_dimension() + 1));
  for (int d = 0; d <= cx.top_dimension(); ++d) {
    auto& out = pairing.by_dim[std::size_t(d)];
    out.reserve(cx.cells(d).size());
    for (const auto& cell : cx.cells(d)) {
      CellMatch m = match_cell(cell);
      if (m.kind == MatchKind::Critical) {
        out.push_back({PairStatus::Critical, 0});
        continue;
      }
      CellId id = cx.find(m.partner);
      if (id.dim < 0) throw std::logic_error("partner of " + to_string(cell) + " is not a cell");
      out.push_back({m.kind == MatchKind::Up ? PairStatus::PairedUp : PairStatus::PairedDown,
                     id.index});
    }
  }
  return pairing;
}

bool verify_acyclic(const CubicalComplex& cx, const GradientPairing& pairing) {
  // A closed V-path lives in one dimension d: f -> V(f) -> g with g a facet of
  // V(f), g != f, and g paired upward again. Look for a cycle with Kahn's
  // algorithm on that digraph.
  for (int d = 0; d < cx.top_dimension(); ++d) {
    const auto& cells = cx.cells(d);
    const auto& status = pairing.by_dim[std::size_t(d)];
    std::vector<std::vector<std::uint32_t>> out(cells.size());
    std::vector<std::uint32_t> indegree(cells.size(), 0);
    std::size_t nodes = 0;
    for (std::uint32_t f = 0; f < cells.size(); ++f) {
      if (status[f].status != PairStatus::PairedUp) continue;
      ++nodes;
      const Arrangement& e = cx.cells(d + 1)[status[f].partner];
      for (const auto& t : boundary(e)) {
        CellId g = cx.find(t.cell);
        if (g.index == f) continue;
        if (status[g.index].status != PairStatus::PairedUp) continue;
        out[f].push_back(g.index);
        ++indegree[g.index];
      }
    }
    std::vector<std::uint32_t> ready;
    for (std::uint32_t f = 0; f < cells.size(); ++f)
      if (status[f].status == PairStatus::PairedUp && indegree[f] == 0) ready.push_back(f);
    std::size_t seen = 0;
    while (!ready.empty()) {
      std::uint32_t f = ready.back();
      ready.pop_back();
      ++seen;
      for (auto g : out[f])
        if (--indegree[g] == 0) ready.push_back(g);
    }
    if (seen != nodes) return false;
  }
  return true;
}

bool verify_acyclic(int n, int p, int q) {
  CubicalComplex cx = CubicalComplex::build(n, p, q);
  return verify_acyclic(cx, compute_pairing(cx));
}

}  // namespace hardsq
