#include <gtest/gtest.h>

#include "hardsq/morse.hpp"
#include "hardsq/oracle.hpp"
#include "reference_tables.hpp"
#include "support.hpp"

namespace hardsq {
namespace {

using Values = std::vector<std::uint64_t>;

TEST(DirectBetti, Examples) {
  EXPECT_EQ(direct_betti(2, 2, 2).values, (Values{1, 1}));
  EXPECT_EQ(direct_betti(3, 2, 3).values, (Values{1, 7}));
  EXPECT_EQ(direct_betti(1, 3, 3).values, (Values{1}));
  EXPECT_EQ(direct_betti(3, 2, 2).values, (Values{2, 2}));
  EXPECT_EQ(direct_betti(3, 3, 3, Field::rational()).values, (Values{1, 3, 2}));
  EXPECT_TRUE(direct_betti(5, 2, 2).values.empty());
}

TEST(DirectBetti, CapExceeded) {
  EXPECT_THROW(direct_betti(4, 4, 4, Field::gf2(), 1000), CellCapExceeded);
  try {
    direct_betti(3, 3, 3, Field::gf2(), 10);
    FAIL();
  } catch (const CellCapExceeded& e) {
    EXPECT_EQ(e.cap(), 10u);
    EXPECT_GT(e.cells(), 10u);
  }
}

TEST(DirectBetti, AgreesWithMorseOnSmallInstances) {
  for (auto [n, p, q] : test::instances(4, 4)) {
    if (n == 4 && p * q > 9) continue;
    BettiVector morse = betti(build_morse_complex(n, p, q).chain_complex(), Field::gf2());
    EXPECT_EQ(direct_betti(n, p, q).values, morse.values) << n << p << q;
  }
}

TEST(ComponentCount, MatchesBettiZero) {
  for (auto [n, p, q] : test::instances(4, 4)) {
    if (n == 4 && p * q > 9) continue;
    std::uint64_t c = component_count(n, p, q);
    EXPECT_EQ(c, direct_betti(n, p, q).at(0)) << n << p << q;
    if (p >= 2 && q >= 2 && p * q - n >= 2) EXPECT_EQ(c, 1u) << n << p << q;
  }
  EXPECT_EQ(component_count(4, 2, 2), 24u);
  EXPECT_EQ(component_count(5, 2, 3), 2u);
}

TEST(ConfPlane, Examples) {
  EXPECT_EQ(conf_plane_betti(6).values, (Values{1, 15, 85, 225, 274, 120}));
  EXPECT_EQ(conf_plane_betti(5).values, (Values{1, 10, 35, 50, 24}));
  EXPECT_EQ(conf_plane_betti(1).values, (Values{1}));
  EXPECT_EQ(conf_plane_betti(6).field, Field::rational());
  EXPECT_THROW(conf_plane_betti(0), std::invalid_argument);
}

TEST(ConfPlane, SumIsFactorial) {
  std::uint64_t fact = 1;
  for (int n = 1; n <= 12; ++n) {
    fact *= std::uint64_t(n);
    std::uint64_t sum = 0;
    for (auto v : conf_plane_betti(n).values) sum += v;
    EXPECT_EQ(sum, fact) << n;
  }
}

BettiVector reference(int n, int p, int q) {
  for (const auto& row : testdata::kBetti)
    if (row.n == n && row.p == p && row.q == q) return {row.values, Field::gf2()};
  throw std::out_of_range("no such row");
}

TEST(Regime, Examples) {
  EXPECT_EQ(classify_regime(5, 3, 4, reference(5, 3, 4))[2], Regime::Liquid);
  EXPECT_EQ(classify_regime(6, 2, 3, reference(6, 2, 3))[1], Regime::Solid);
  EXPECT_EQ(classify_regime(6, 5, 6, reference(6, 5, 6))[2], Regime::GasConsistent);
  auto labels = classify_regime(6, 2, 3, reference(6, 2, 3));
  EXPECT_EQ(labels.size(), 6u);
  EXPECT_EQ(labels[0], Regime::Liquid);
  EXPECT_EQ(regime_name(Regime::Solid), "solid");
  EXPECT_EQ(regime_name(Regime::Liquid), "liquid");
  EXPECT_EQ(regime_name(Regime::GasConsistent), "gas-consistent");
}

TEST(Regime, FullStabilityRowsAreGasConsistent) {
  for (int n = 1; n <= 6; ++n) {
    for (Regime r : classify_regime(n, n, n, conf_plane_betti(n))) EXPECT_EQ(r, Regime::GasConsistent);
  }
}

TEST(Regime, EmptyComplexIsSolidEverywhere) {
  auto labels = classify_regime(5, 2, 2, BettiVector{});
  EXPECT_EQ(labels.size(), 5u);
  for (Regime r : labels) EXPECT_EQ(r, Regime::Solid);
  EXPECT_EQ(classify_regime(0, 2, 2, BettiVector{{1}, Field::gf2()}).size(), 1u);
}

TEST(Regime, SolidMatchesUnboldedZerosInReferenceTable) {
  for (std::size_t i = 0; i < testdata::kBetti.size(); ++i) {
    const auto& row = testdata::kBetti[i];
    const auto& bold = testdata::kBold[i];
    auto labels = classify_regime(row.n, row.p, row.q, {row.values, Field::gf2()});
    for (int d : bold.degrees) EXPECT_NE(labels[std::size_t(d)], Regime::Solid) << row.n << row.p << row.q;
  }
}

std::vector<TableRow> reference_table() {
  std::vector<TableRow> out;
  for (const auto& row : testdata::kBetti) out.push_back({row.n, row.p, row.q, {row.values, Field::gf2()}});
  return out;
}

TEST(Witness, ReferenceTablePasses) {
  WitnessReport r = nonvanishing_witness_check(reference_table());
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.notes.empty());
  std::size_t nonzero = 0;
  for (const auto& row : testdata::kBetti)
    for (auto v : row.values) nonzero += v != 0;
  EXPECT_EQ(r.points.size(), nonzero);
  for (const auto& pt : r.points) {
    EXPECT_TRUE(pt.inside_region);
    EXPECT_EQ(pt.denom, pt.p * pt.q);
    EXPECT_EQ(pt.x_num, pt.n);
    EXPECT_EQ(pt.y_num, pt.degree);
  }
  EXPECT_NE(r.to_json().find("\"points\""), std::string::npos);
  EXPECT_FALSE(r.to_text().empty());
}

TEST(Witness, MissingRowsAreNoted) {
  WitnessReport r = nonvanishing_witness_check({});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.notes.size(), 2u);
}

TEST(Witness, ZeroBetaOneFails) {
  std::vector<TableRow> t{{2, 2, 2, {{1}, Field::gf2()}}, {3, 2, 2, {{2, 2}, Field::gf2()}}};
  EXPECT_FALSE(nonvanishing_witness_check(t).ok());
}

TEST(Witness, PointOutsideRegionFails) {
  // degree 2 at n = 2 on a 2x2 board: y = 1/2 > 1 - x.
  std::vector<TableRow> t{{2, 2, 2, {{1, 1, 1}, Field::gf2()}}, {3, 2, 2, {{2, 2}, Field::gf2()}}};
  WitnessReport r = nonvanishing_witness_check(t);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.points[2].inside_region);
}

TEST(Puzzle, ThreeOnTwoByTwo) {
  PuzzleCounts c = puzzle_graph_counts(2, 2);
  EXPECT_EQ(c.f0, 24u);
  EXPECT_EQ(c.f1, 24u);
  EXPECT_EQ(c.dominoes, 4u);
  FVector fv = f_vector(3, 2, 2);
  EXPECT_EQ(fv.counts, (Values{24, 24}));
  EXPECT_EQ(direct_betti(3, 2, 2).at(1), 2u);
}

TEST(Puzzle, ClosedFormsMatchFVector) {
  for (auto [p, q] : {std::pair{2, 3}, {3, 2}, {1, 4}, {3, 3}}) {
    PuzzleCounts c = puzzle_graph_counts(p, q);
    FVector fv = f_vector(p * q - 1, p, q);
    EXPECT_EQ(fv.counts, (Values{c.f0, c.f1})) << p << q;
  }
  EXPECT_THROW(puzzle_graph_counts(1, 1), std::invalid_argument);
  EXPECT_THROW(puzzle_graph_counts(5, 5), std::overflow_error);
}

}  // namespace
}  // namespace hardsq
