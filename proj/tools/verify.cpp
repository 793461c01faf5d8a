#include "verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hardsq/apex_graph.hpp"
#include "hardsq/complex.hpp"
#include "hardsq/morse.hpp"
#include "hardsq/oracle.hpp"

namespace hardsq::cli {

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// Collects the first failure message of a check; later ones only count.
struct Check {
  std::string name;
  std::string first_failure;
  std::uint64_t failures = 0;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  CheckResult result() const {
    if (failures == 0) return {name, true, {}};
    return {name, false, first_failure + (failures > 1 ? " (+" + std::to_string(failures - 1) + " more)" : "")};
  }
};

void check_apex_graphs(int n, int p, int q, VerifyReport& report) {
  Check paths{"apex graphs are unions of paths"};
  Check halves{"half-square allocation"};
  Check critical{"critical cells"};
  const int bound = std::min(n, p * q / 3);
  for_each_apex(n, p, q, [&](const Arrangement& apex) {
    ApexGraph g = ApexGraph::build(apex);
    std::vector<int> degree(std::size_t(g.size()), 0);
    for (auto [a, b] : g.edges()) {
      ++degree[std::size_t(a)];
      ++degree[std::size_t(b)];
      if (b != a + 1) paths.fail(to_string(apex) + ": edge joins non-consecutive vertices");
    }
    int covered = 0;
    for (const auto& path : g.paths()) {
      if (path.first != covered) paths.fail(to_string(apex) + ": paths do not partition vertices");
      covered += path.length;
    }
    if (covered != g.size()) paths.fail(to_string(apex) + ": paths do not cover vertices");
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d > 2; }))
      paths.fail(to_string(apex) + ": vertex of degree > 2");

    auto alloc = half_square_allocation(g);
    std::set<HalfSquare> seen;
    std::size_t total = 0;
    for (const auto& path : g.paths()) {
      for (int t = 0; t < path.length; ++t) {
        const auto& r = alloc[std::size_t(path.first + t)];
        std::size_t want = path.length == 1 ? 4 : (t == 0 || t == path.length - 1) ? 3 : 2;
        if (r.size() != want) halves.fail(to_string(apex) + ": wrong allocation size");
        for (const auto& h : r) {
          if (h.col < 1 || h.col > p || h.row < 1 || h.row > q)
            halves.fail(to_string(apex) + ": half-square off the board");
          if (!seen.insert(h).second) halves.fail(to_string(apex) + ": allocations overlap");
        }
        total += r.size();
      }
    }
    if (total > std::size_t(2 * p * q)) halves.fail(to_string(apex) + ": more than 2pq half-squares");

    if (auto c = critical_cell_of_apex(apex)) {
      if (c->dimension() > bound)
        critical.fail(to_string(*c) + ": critical dimension above min(n, pq/3)");
      for (const auto& pc : c->pieces())
        if (pc.extend_left && pc.extend_down) critical.fail(to_string(*c) + ": contains a 2x2 piece");
      if (match_cell(*c).kind != MatchKind::Critical)
        critical.fail(to_string(*c) + ": critical cell is matched");
    }
    return true;
  });
  report.checks.push_back(paths.result());
  report.checks.push_back(halves.result());
  report.checks.push_back(critical.result());
}

void check_complex(const CubicalComplex& cx, const std::vector<std::uint64_t>& critical_counts,
                   bool deep, VerifyReport& report) {
  const int n = cx.n();
  const int p = cx.board().cols;
  const int q = cx.board().rows;

  Check d2{"cubical boundary squares to zero"};
  ChainComplex cc = cx.chain_complex();
  if (!cc.boundary_squared_zero()) d2.fail("nonzero composite");
  report.checks.push_back(d2.result());

  Check counts{"bijection counts"};
  FVector enumerated = cx.f_vector();
  FVector fv = f_vector(n, p, q);
  if (!(enumerated == fv))
    counts.fail("enumerated " + join(enumerated.counts) + " vs polynomial " + join(fv.counts));
  if (!fv.counts.empty() && fv.counts[0] != vertex_count(n, p, q)) counts.fail("f0 is not the falling factorial");
  std::map<CellKey, std::uint64_t> per_apex;
  for (int d = 0; d <= cx.top_dimension(); ++d)
    for (const auto& c : cx.cells(d)) ++per_apex[apex_cell(c).key()];
  for (const auto& [key, count] : per_apex) {
    Arrangement apex = Arrangement::from_key(cx.board(), n, key);
    if (independent_set_count(ApexGraph::build(apex)) != count)
      counts.fail(to_string(apex) + ": cell count differs from Fibonacci product");
  }
  report.checks.push_back(counts.result());

  Check pairing_check{"pairing properties"};
  GradientPairing pairing = compute_pairing(cx);
  std::vector<std::uint64_t> critical_seen;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) perm[std::size_t(k)] = (k + 1) % n;
  for (int d = 0; d <= cx.top_dimension(); ++d) {
    for (std::uint32_t i = 0; i < cx.cells(d).size(); ++i) {
      const Arrangement& c = cx.cells(d)[i];
      const PairingEntry& e = pairing.by_dim[std::size_t(d)][i];
      CellMatch relabeled = match_cell(c.relabeled(perm));
      if (e.status == PairStatus::Critical) {
        if (critical_seen.size() <= std::size_t(d)) critical_seen.resize(std::size_t(d) + 1);
        ++critical_seen[std::size_t(d)];
        if (relabeled.kind != MatchKind::Critical) pairing_check.fail(to_string(c) + ": not equivariant");
        continue;
      }
      int pd = e.status == PairStatus::PairedUp ? d + 1 : d - 1;
      const Arrangement& partner = cx.cells(pd)[e.partner];
      const PairingEntry& back = pairing.by_dim[std::size_t(pd)][e.partner];
      if (back.partner != i || back.status == e.status || back.status == PairStatus::Critical)
        pairing_check.fail(to_string(c) + ": partner of partner is not the cell");
      if (!(apex_of(partner) == apex_of(c))) pairing_check.fail(to_string(c) + ": partner has another apex");
      const Arrangement& upper = pd > d ? partner : c;
      const Arrangement& lower = pd > d ? c : partner;
      auto faces = boundary(upper);
      if (std::none_of(faces.begin(), faces.end(), [&](const SignedCell& s) { return s.cell == lower; }))
        pairing_check.fail(to_string(c) + ": pair is not a facet pair");
      if (!(relabeled.partner == partner.relabeled(perm)))
        pairing_check.fail(to_string(c) + ": not equivariant");
    }
  }
  while (!critical_seen.empty() && critical_seen.back() == 0) critical_seen.pop_back();
  if (critical_seen != critical_counts)
    pairing_check.fail("unmatched cells " + join(critical_seen) + " vs critical cells " + join(critical_counts));
  report.checks.push_back(pairing_check.result());

  if (deep) {
    Check acyclic{"gradient is acyclic"};
    if (!verify_acyclic(cx, pairing)) acyclic.fail("closed V-path found");
    report.checks.push_back(acyclic.result());
  }
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify(int n, int p, int q, bool deep, const RunConfig& cfg) {
  validate_instance(n, p, q);
  VerifyReport report;
  if (n > p * q) {
    report.notes.push_back("n > pq: the complex is empty");
    return report;
  }

  check_apex_graphs(n, p, q, report);

  MorseOptions options;
  options.threads = cfg.threads;
  options.step_budget = cfg.step_budget;
  MorseComplex mc = build_morse_complex(n, p, q, options);
  ChainComplex mcc = mc.chain_complex();
  Check d2{"Morse boundary squares to zero"};
  if (!mcc.boundary_squared_zero()) d2.fail("nonzero composite");
  report.checks.push_back(d2.result());

  FVector fv = f_vector(n, p, q);
  BettiVector bv = betti(mcc, Field::gf2());
  AuditReport audit_report = audit(n, p, q, bv, fv, mc.counts());
  Check bounds{"vanishing bounds, Euler characteristic, Morse inequalities"};
  for (const auto& f : audit_report.failures) bounds.fail(f);
  report.checks.push_back(bounds.result());
  for (const auto& note : audit_report.notes) report.notes.push_back(note);

  std::uint64_t total = 0;
  for (auto c : fv.counts) total += c;
  if (total > cfg.cell_cap) {
    report.notes.push_back("complex has " + std::to_string(total) +
                           " cells, above the cell cap; cell-level checks skipped");
    return report;
  }
  CubicalComplex cx = CubicalComplex::build(n, p, q, cfg.cell_cap);
  check_complex(cx, mc.counts(), deep, report);

  if (deep) {
    Check agree{"direct homology agrees with the Morse complex"};
    BettiVector direct = betti(cx.chain_complex(), Field::gf2());
    if (!(direct == bv)) agree.fail("direct " + join(direct.values) + " vs Morse " + join(bv.values));
    report.checks.push_back(agree.result());
  }
  return report;
}

}  // namespace hardsq::cli
