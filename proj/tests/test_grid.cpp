#include <gtest/gtest.h>

#include "hardsq/grid.hpp"
#include "reference_tables.hpp"
#include "support.hpp"

namespace hardsq {
namespace {

using test::brute_in_x;

Arrangement make(int p, int q, std::vector<Piece> pieces) { return Arrangement(Board{p, q}, pieces); }

TEST(Snap, FixesIntegersAndRoundsToMidpoints) {
  EXPECT_EQ(snap(3.0), 3.0);
  EXPECT_EQ(snap(2.3), 2.5);
  EXPECT_EQ(snap(4.999), 4.5);
  EXPECT_EQ(snap(-0.25), -0.5);
  for (double x : {0.1, 1.7, 2.5, 7.0}) EXPECT_EQ(snap(snap(x)), snap(x));
}

TEST(PiecesOverlap, Examples) {
  EXPECT_TRUE(pieces_overlap(make_piece(1, 1), make_piece(1, 1)));
  EXPECT_FALSE(pieces_overlap(make_piece(1, 1), make_piece(2, 1)));
  EXPECT_TRUE(pieces_overlap(make_piece(2, 2, true, true), make_piece(1, 1)));
}

TEST(PiecesOverlap, AgreesWithSquareSets) {
  std::vector<Piece> all;
  for (int c = 1; c <= 4; ++c)
    for (int r = 1; r <= 4; ++r)
      for (int l = 0; l < 2; ++l)
        for (int d = 0; d < 2; ++d)
          if ((!l || c > 1) && (!d || r > 1)) all.push_back(make_piece(c, r, l, d));
  for (const auto& a : all) {
    for (const auto& b : all) {
      auto sa = test::occupied(a), sb = test::occupied(b);
      bool shared = std::any_of(sa.begin(), sa.end(), [&](auto s) { return sb.count(s) > 0; });
      EXPECT_EQ(pieces_overlap(a, b), shared);
    }
  }
}

TEST(MakePiece, RejectsPiecesLeavingTheBoard) {
  EXPECT_THROW(make_piece(1, 2, true, false), std::invalid_argument);
  EXPECT_THROW(make_piece(2, 1, false, true), std::invalid_argument);
  EXPECT_THROW(make_piece(0, 1), std::invalid_argument);
}

TEST(IsCellOfX, Examples) {
  EXPECT_TRUE(is_cell_of_x(make(2, 2, {make_piece(1, 1), make_piece(2, 2)})));
  EXPECT_FALSE(is_cell_of_x(make(2, 2, {make_piece(2, 2, false, true), make_piece(2, 1)})));
  EXPECT_TRUE(is_cell_of_x(make(2, 2, {make_piece(2, 2, false, true), make_piece(1, 1)})));
}

TEST(ApexOf, ReadsCorners) {
  auto zero = make(2, 2, {make_piece(1, 1), make_piece(2, 2)});
  EXPECT_EQ(apex_of(zero).corners, (std::vector<std::pair<int, int>>{{1, 1}, {2, 2}}));
  EXPECT_EQ(apex_cell(zero), zero);
  auto domino = make(2, 2, {make_piece(2, 2, false, true), make_piece(1, 1)});
  EXPECT_EQ(apex_of(domino).corners, (std::vector<std::pair<int, int>>{{2, 2}, {1, 1}}));
  auto big = make(2, 2, {make_piece(2, 2, true, true)});
  EXPECT_EQ(apex_of(big).corners, (std::vector<std::pair<int, int>>{{2, 2}}));
}

TEST(Boundary, ZeroCellHasNone) { EXPECT_TRUE(boundary(make(2, 2, {make_piece(1, 2)})).empty()); }

TEST(Boundary, HorizontalDominoEndpoints) {
  auto terms = boundary(make(2, 1, {make_piece(2, 1, true, false)}));
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].coefficient, 1);
  EXPECT_EQ(terms[0].cell, make(2, 1, {make_piece(2, 1)}));
  EXPECT_EQ(terms[1].coefficient, -1);
  EXPECT_EQ(terms[1].cell, make(2, 1, {make_piece(1, 1)}));
}

TEST(Boundary, SignsFollowCoordinateOrder) {
  // Non-degenerate coordinates are y1 then x2, with signs +1 and -1.
  auto c = make(3, 2, {make_piece(1, 2, false, true), make_piece(3, 1, true, false)});
  auto terms = boundary(c);
  ASSERT_EQ(terms.size(), 4u);
  std::map<CellKey, int> coeff;
  for (const auto& t : terms) coeff[t.cell.key()] = t.coefficient;
  EXPECT_EQ(coeff[make(3, 2, {make_piece(1, 2), make_piece(3, 1, true, false)}).key()], 1);
  EXPECT_EQ(coeff[make(3, 2, {make_piece(1, 1), make_piece(3, 1, true, false)}).key()], -1);
  EXPECT_EQ(coeff[make(3, 2, {make_piece(1, 2, false, true), make_piece(3, 1)}).key()], -1);
  EXPECT_EQ(coeff[make(3, 2, {make_piece(1, 2, false, true), make_piece(2, 1)}).key()], 1);
}

TEST(Boundary, SquaresToZeroOnTwoCellsOfX222) {
  int two_cells = 0;
  for_each_cell(2, 2, 2, [&](const Arrangement& c) {
    if (c.dimension() != 2) return true;
    ++two_cells;
    test::Chain chain{{c.key(), 1}};
    EXPECT_TRUE(test::boundary_chain(test::boundary_chain(chain, c.board(), 2), c.board(), 2).empty());
    return true;
  });
  EXPECT_EQ(two_cells, 4);
}

TEST(Boundary, SquaresToZeroOnSmallComplexes) {
  for (auto [n, p, q] : {test::Instance{2, 3, 3}, {3, 2, 3}, {3, 3, 3}, {1, 4, 4}}) {
    for_each_cell(n, p, q, [&](const Arrangement& c) {
      test::Chain chain{{c.key(), 1}};
      EXPECT_TRUE(test::boundary_chain(test::boundary_chain(chain, c.board(), n), c.board(), n).empty())
          << to_string(c);
      return true;
    });
  }
}

TEST(Boundary, FacetsStayInX) {
  for_each_cell(3, 3, 3, [&](const Arrangement& c) {
    auto terms = boundary(c);
    EXPECT_EQ(terms.size(), std::size_t(2 * c.dimension()));
    for (const auto& t : terms) {
      EXPECT_TRUE(brute_in_x(t.cell));
      EXPECT_TRUE(t.cell.on_board());
    }
    return true;
  });
}

TEST(Boundary, EquivariantUnderRelabeling) {
  auto perms = test::permutations(3);
  for_each_cell(3, 2, 3, [&](const Arrangement& c) {
    for (const auto& perm : perms) {
      std::map<CellKey, int> expected;
      for (const auto& t : boundary(c))
        expected[t.cell.relabeled(perm).key()] =
            t.coefficient * test::relabel_sign(c, perm) * test::relabel_sign(t.cell, perm);
      std::map<CellKey, int> actual;
      for (const auto& t : boundary(c.relabeled(perm))) actual[t.cell.key()] = t.coefficient;
      EXPECT_EQ(actual, expected) << to_string(c);
      EXPECT_EQ(apex_of(c.relabeled(perm)), apex_of(apex_cell(c).relabeled(perm)));
    }
    return true;
  });
}

TEST(Enumeration, MatchesBruteForceFilterOfAmbientCells) {
  for (auto [n, p, q] : test::instances(3, 3)) {
    if (n == 3 && p * q > 6) continue;  // keep the ambient walk small
    std::set<CellKey> brute;
    test::for_each_ambient_cell(n, p, q, [&](const Arrangement& a) {
      if (brute_in_x(a)) brute.insert(a.key());
    });
    std::vector<CellKey> listed;
    for (const auto& c : enumerate_cells(n, p, q)) listed.push_back(c.key());
    EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
    EXPECT_EQ(std::set<CellKey>(listed.begin(), listed.end()).size(), listed.size());
    EXPECT_EQ(std::set<CellKey>(listed.begin(), listed.end()), brute) << n << " " << p << " " << q;
  }
}

TEST(Enumeration, FullSubcomplex) {
  for (auto [n, p, q] : {test::Instance{2, 3, 3}, {3, 2, 3}, {2, 2, 2}, {3, 3, 2}}) {
    test::for_each_ambient_cell(n, p, q, [&](const Arrangement& a) {
      auto verts = test::vertices_of(a);
      bool all_in = std::all_of(verts.begin(), verts.end(), [](const Arrangement& v) { return brute_in_x(v); });
      EXPECT_EQ(is_cell_of_x(a), all_in) << to_string(a);
    });
  }
}

TEST(Enumeration, ApexOrderIsLexicographic) {
  std::vector<Apex> seen;
  for_each_apex(3, 2, 3, [&](const Arrangement& a) {
    seen.push_back(apex_of(a));
    return true;
  });
  EXPECT_EQ(seen.size(), 120u);
  for (std::size_t i = 1; i < seen.size(); ++i) EXPECT_LT(seen[i - 1].corners, seen[i].corners);
}

TEST(Enumeration, EmptyWhenTooManySquares) {
  EXPECT_TRUE(enumerate_cells(5, 2, 2).empty());
  EXPECT_TRUE(f_vector(5, 2, 2).counts.empty());
}

TEST(FVector, Examples) {
  EXPECT_EQ(f_vector(2, 2, 2).counts, (std::vector<std::uint64_t>{12, 16, 4}));
  EXPECT_EQ(f_vector(1, 2, 2).counts, (std::vector<std::uint64_t>{4, 4, 1}));
  EXPECT_EQ(f_vector(3, 2, 2).counts, (std::vector<std::uint64_t>{24, 24}));
  EXPECT_EQ(f_vector(3, 3, 3).counts, (std::vector<std::uint64_t>{504, 1512, 1560, 624, 72}));
  EXPECT_EQ(f_vector(4, 3, 4).counts, (std::vector<std::uint64_t>{11880, 48960, 76608, 56448, 19536, 2688, 96}));
  EXPECT_EQ(f_vector(0, 3, 2).counts, (std::vector<std::uint64_t>{1}));
}

TEST(FVector, SingleSquareClosedForm) {
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 6; ++q) {
      std::vector<std::uint64_t> expect{std::uint64_t(p * q)};
      if (p * (q - 1) + q * (p - 1) > 0) expect.push_back(std::uint64_t(p * (q - 1) + q * (p - 1)));
      if ((p - 1) * (q - 1) > 0) expect.push_back(std::uint64_t((p - 1) * (q - 1)));
      EXPECT_EQ(f_vector(1, p, q).counts, expect);
    }
  }
}

TEST(FVector, AgreesWithEnumerationAndBounds) {
  for (auto [n, p, q] : test::instances(4, 4)) {
    if (vertex_count(n, p, q) > 50000) continue;
    FVector counted;
    for_each_cell(n, p, q, [&](const Arrangement& c) {
      auto d = std::size_t(c.dimension());
      if (counted.counts.size() <= d) counted.counts.resize(d + 1);
      ++counted.counts[d];
      return true;
    });
    FVector fv = f_vector(n, p, q);
    EXPECT_EQ(fv, counted) << n << " " << p << " " << q;
    EXPECT_EQ(fv.counts[0], vertex_count(n, p, q));
    int top = int(fv.counts.size()) - 1;
    EXPECT_LE(top, p * q - n);
    EXPECT_LE(top, 2 * n);
  }
}

TEST(FVector, ReferenceRowsUpToN4) {
  for (const auto& row : testdata::kFVector)
    if (row.n <= 4) EXPECT_EQ(f_vector(row.n, row.p, row.q).counts, row.values) << row.n << row.p << row.q;
}

TEST(VertexCount, FallingFactorial) {
  EXPECT_EQ(vertex_count(0, 3, 3), 1u);
  EXPECT_EQ(vertex_count(2, 2, 2), 12u);
  EXPECT_EQ(vertex_count(5, 3, 3), 15120u);
  EXPECT_EQ(vertex_count(5, 2, 2), 0u);
  EXPECT_THROW(vertex_count(12, 16, 16), std::overflow_error);
}

TEST(CellKey, RoundTripsAndOrdersApexMajor) {
  std::vector<Arrangement> cells = enumerate_cells(3, 3, 2);
  for (const auto& c : cells) EXPECT_EQ(Arrangement::from_key(c.board(), 3, c.key()), c);
  for (std::size_t i = 1; i < cells.size(); ++i)
    EXPECT_LE(apex_of(cells[i - 1]).corners, apex_of(cells[i]).corners);
}

TEST(Relabel, MovesPieceToNewLabel) {
  auto c = make(3, 3, {make_piece(1, 1), make_piece(2, 2, true, false), make_piece(3, 3)});
  std::vector<int> perm{2, 0, 1};
  auto r = c.relabeled(perm);
  EXPECT_EQ(r[2], c[0]);
  EXPECT_EQ(r[0], c[1]);
  EXPECT_EQ(r[1], c[2]);
  EXPECT_THROW(c.relabeled(std::vector<int>{0, 1}), std::invalid_argument);
}

TEST(ValidateInstance, Ranges) {
  EXPECT_NO_THROW(validate_instance(0, 1, 1));
  EXPECT_THROW(validate_instance(-1, 2, 2), std::invalid_argument);
  EXPECT_THROW(validate_instance(kMaxPieces + 1, 4, 4), std::invalid_argument);
  EXPECT_THROW(validate_instance(2, 0, 2), std::invalid_argument);
  EXPECT_THROW(validate_instance(2, 2, kMaxBoardSide + 1), std::invalid_argument);
}

TEST(EulerCharacteristic, FromCounts) {
  EXPECT_EQ(f_vector(2, 2, 2).euler_characteristic(), 0);
  EXPECT_EQ(f_vector(3, 2, 2).euler_characteristic(), 0);
  EXPECT_EQ(f_vector(3, 3, 3).euler_characteristic(), 0);
}

}  // namespace
}  // namespace hardsq
