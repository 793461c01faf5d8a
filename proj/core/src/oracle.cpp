#include "hardsq/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <nlohmann/json.hpp>
#include <sstream>

namespace hardsq {

BettiVector direct_betti(int n, int p, int q, const Field& field, std::uint64_t cap) {
  CubicalComplex cx = CubicalComplex::build(n, p, q, cap);
  return betti(cx.chain_complex(), field);
}

std::uint64_t component_count(int n, int p, int q, std::uint64_t cap) {
  CubicalComplex cx = CubicalComplex::build(n, p, q, cap);
  if (cx.top_dimension() < 0) return 0;
  const auto& vertices = cx.cells(0);
  std::vector<std::uint32_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::uint64_t components = vertices.size();
  if (cx.top_dimension() >= 1) {
    for (const auto& edge : cx.cells(1)) {
      auto faces = boundary(edge);
      auto a = find(cx.find(faces[0].cell).index);
      auto b = find(cx.find(faces[1].cell).index);
      if (a == b) continue;
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components;
}

BettiVector conf_plane_betti(int n) {
  if (n < 1) throw std::invalid_argument("conf_plane_betti needs n >= 1");
  // Coefficients of (1 + t)(1 + 2t)...(1 + (n-1)t).
  std::vector<std::uint64_t> coeff{1};
  for (int k = 1; k < n; ++k) {
    coeff.push_back(0);
    for (std::size_t j = coeff.size() - 1; j > 0; --j) {
      std::uint64_t term;
      if (__builtin_mul_overflow(coeff[j - 1], std::uint64_t(k), &term) ||
          __builtin_add_overflow(coeff[j], term, &coeff[j]))
        throw std::overflow_error("conf_plane_betti overflow");
    }
  }
  return BettiVector{coeff, Field::rational()};
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Solid: return "solid";
    case Regime::Liquid: return "liquid";
    case Regime::GasConsistent: return "gas-consistent";
  }
  return "?";
}

std::vector<Regime> classify_regime(int n, int p, int q, const BettiVector& bv) {
  validate_instance(n, p, q);
  BettiVector gas = n >= 1 ? conf_plane_betti(n) : BettiVector{{1}, Field::rational()};
  std::size_t degrees = std::max<std::size_t>({bv.values.size(), std::size_t(n), 1});
  std::vector<Regime> out;
  for (std::size_t j = 0; j < degrees; ++j) {
    if (bv.at(j) == 0)
      out.push_back(Regime::Solid);
    else if (bv.at(j) == gas.at(j))
      out.push_back(Regime::GasConsistent);
    else
      out.push_back(Regime::Liquid);
  }
  return out;
}

WitnessReport nonvanishing_witness_check(const std::vector<TableRow>& table) {
  WitnessReport report;
  for (auto [wn, wp, wq] : {std::tuple{2, 2, 2}, std::tuple{3, 2, 2}}) {
    auto it = std::find_if(table.begin(), table.end(), [&](const TableRow& r) {
      return r.n == wn && r.p == wp && r.q == wq;
    });
    std::string label = "(" + std::to_string(wn) + "," + std::to_string(wp) + "," +
                        std::to_string(wq) + ")";
    if (it == table.end())
      report.notes.push_back(label + " not in table; witness not checked");
    else if (it->betti.at(1) == 0)
      report.failures.push_back(label + " has beta_1 = 0");
  }
  for (const auto& row : table) {
    int area = row.p * row.q;
    for (std::size_t j = 0; j < row.betti.values.size(); ++j) {
      if (row.betti.values[j] == 0) continue;
      WitnessPoint pt{row.n, row.p, row.q, int(j), row.n, int(j), area, true};
      // y <= 1 - x, y <= x, y <= 1/3 with x = n/pq and y = j/pq.
      pt.inside_region = pt.y_num <= area - pt.x_num && pt.y_num <= pt.x_num && 3 * pt.y_num <= area;
      if (!pt.inside_region)
        report.failures.push_back("beta_" + std::to_string(j) + " of (" + std::to_string(row.n) +
                                  "," + std::to_string(row.p) + "," + std::to_string(row.q) +
                                  ") lies outside the vanishing region");
      report.points.push_back(pt);
    }
  }
  return report;
}

std::string WitnessReport::to_json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok();
  auto pts = nlohmann::ordered_json::array();
  for (const auto& pt : points) {
    nlohmann::ordered_json e;
    e["n"] = pt.n;
    e["p"] = pt.p;
    e["q"] = pt.q;
    e["degree"] = pt.degree;
    e["x"] = std::to_string(pt.x_num) + "/" + std::to_string(pt.denom);
    e["y"] = std::to_string(pt.y_num) + "/" + std::to_string(pt.denom);
    e["inside_region"] = pt.inside_region;
    pts.push_back(std::move(e));
  }
  j["points"] = std::move(pts);
  j["failures"] = failures;
  j["notes"] = notes;
  return j.dump();
}

std::string WitnessReport::to_text() const {
  std::ostringstream out;
  for (const auto& pt : points)
    out << "(" << pt.n << "," << pt.p << "," << pt.q << ") j=" << pt.degree << " point ("
        << pt.x_num << "/" << pt.denom << ", " << pt.y_num << "/" << pt.denom << ") "
        << (pt.inside_region ? "inside" : "OUTSIDE") << "\n";
  for (const auto& f : failures) out << "FAIL " << f << "\n";
  for (const auto& note : notes) out << "note: " << note << "\n";
  return out.str();
}

PuzzleCounts puzzle_graph_counts(int p, int q) {
  validate_instance(0, p, q);
  if (p * q < 2) throw std::invalid_argument("the puzzle case needs at least two squares");
  auto factorial = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i)
      if (__builtin_mul_overflow(f, std::uint64_t(i), &f))
        throw std::overflow_error("factorial overflow");
    return f;
  };
  PuzzleCounts out;
  int area = p * q;
  out.dominoes = std::uint64_t(p * (q - 1) + q * (p - 1));
  out.f0 = factorial(area);
  std::uint64_t f1 = out.dominoes;
  if (__builtin_mul_overflow(f1, std::uint64_t(area - 1), &f1) ||
      __builtin_mul_overflow(f1, factorial(area - 2), &f1))
    throw std::overflow_error("f1 overflow");
  out.f1 = f1;
  return out;
}

}  // namespace hardsq
