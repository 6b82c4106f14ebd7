#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "rmac/complex_core.hpp"
#include "rmac/embedding.hpp"

using namespace rmac;

TEST(PolygonBoundary, Triangle) {
  const auto k = polygon_boundary(3);
  const std::vector<std::vector<int>> want{{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(k.faces(), want);
  EXPECT_EQ(k.dimension(), 1);
}

TEST(PolygonBoundary, SquareHasNoDiagonal) {
  const auto k = polygon_boundary(4);
  EXPECT_EQ(k.face_count(), 9u);
  EXPECT_FALSE(k.contains(bit(0) | bit(2)));
  EXPECT_TRUE(k.contains(bit(0) | bit(3)));
}

TEST(PolygonBoundary, Hexagon) {
  // 1 empty + 6 vertices + 6 edges
  EXPECT_EQ(polygon_boundary(6).face_count(), 13u);
}

TEST(PolygonBoundary, RejectsDigon) {
  EXPECT_THROW(polygon_boundary(2), DomainError);
  EXPECT_THROW(polygon_boundary(0), DomainError);
}

TEST(DiscretePoints, Faces) {
  EXPECT_EQ(discrete_points(1).faces(), (std::vector<std::vector<int>>{{}, {1}}));
  EXPECT_EQ(discrete_points(3).face_count(), 4u);
  EXPECT_EQ(discrete_points(5).face_count(), 6u);
  EXPECT_THROW(discrete_points(0), DomainError);
}

TEST(SimplicialComplex, RejectsNonDownwardClosed) {
  EXPECT_THROW(SimplicialComplex(3, (std::vector<Mask>{0, 1, 2, 4, 7})), DomainError);
  EXPECT_THROW(SimplicialComplex(3, (std::vector<Mask>{0, 1, 2})), DomainError);  // vertex 3 missing
}

TEST(BuildRealMac, TriangleIsCubeBoundary) {
  const auto z = build_real_mac(polygon_boundary(3));
  EXPECT_EQ(z.count(0), 8u);
  EXPECT_EQ(z.count(1), 12u);
  EXPECT_EQ(z.count(2), 6u);
  EXPECT_EQ(euler_characteristic(z), 2);
}

TEST(BuildRealMac, DiscretePointsGiveHypercubeGraph) {
  const auto z = build_real_mac(discrete_points(3));
  EXPECT_EQ(z.count(0), 8u);
  EXPECT_EQ(z.count(1), 12u);
  EXPECT_EQ(z.count(2), 0u);
  EXPECT_EQ(euler_characteristic(build_real_mac(discrete_points(4))), -16);
}

TEST(BuildRealMac, Hexagon) {
  const auto z = build_real_mac(polygon_boundary(6));
  EXPECT_EQ(z.count(0), 64u);
  EXPECT_EQ(z.count(1), 192u);
  EXPECT_EQ(z.count(2), 96u);
  EXPECT_EQ(euler_characteristic(z), -32);
}

TEST(BuildRealMac, CellCountsMatchTernaryEnumeration) {
  for (int n = 3; n <= 9; ++n) {
    const auto z = build_real_mac(polygon_boundary(n));
    const auto want = oracle::polygon_cell_counts(n);
    for (int d = 0; d <= 2; ++d) EXPECT_EQ(static_cast<std::int64_t>(z.count(d)), want.at(d)) << "n=" << n << " d=" << d;
  }
}

TEST(BuildRealMac, CellCountClosedFormsUpTo16) {
  for (int n = 3; n <= 16; ++n) {
    const auto z = build_real_mac(polygon_boundary(n));
    EXPECT_EQ(z.count(0), std::size_t{1} << n);
    EXPECT_EQ(z.count(1), static_cast<std::size_t>(n) << (n - 1));
    EXPECT_EQ(z.count(2), static_cast<std::size_t>(n) << (n - 2));
    EXPECT_EQ(euler_characteristic(z), (4 - n) * pow2(n - 2));
  }
}

TEST(BuildRealMac, LexicographicOrder) {
  const auto z = build_real_mac(polygon_boundary(4));
  const auto cells = z.cells();
  for (std::size_t i = 1; i < cells.size(); ++i) EXPECT_TRUE(cell_less(cells[i - 1], cells[i]));
  EXPECT_EQ(cells.front().eps_string(4), "0000");
  EXPECT_EQ(cells[1].eps_string(4), "0001");
  // first square: sigma {1,2}, eps "00" on coordinates 3,4
  const auto sq = z.cells_of_dim(2).front();
  EXPECT_EQ(sq.sigma_list(), (std::vector<int>{1, 2}));
  EXPECT_EQ(sq.eps_string(4), "00");
}

TEST(BuildRealMac, AmbientCap) {
  EXPECT_THROW(build_real_mac(polygon_boundary(8), 7), ResourceLimitError);
  EXPECT_NO_THROW(build_real_mac(polygon_boundary(7), 7));
}

TEST(CubicalComplex, EachCellHasTwiceDimBoundaryCells) {
  const auto z = build_real_mac(polygon_boundary(7));
  for (int i = 0; i < static_cast<int>(z.cells().size()); ++i) {
    const auto& c = z.cell(i);
    const auto b = z.boundary(i);
    ASSERT_EQ(b.size(), static_cast<std::size_t>(2 * c.dim()));
    for (int f : b) EXPECT_EQ(z.cell(f).dim(), c.dim() - 1);
  }
}

TEST(CubicalComplex, BoundaryOfBoundaryVanishesMod2) {
  for (int n = 3; n <= 10; ++n) {
    const auto z = build_real_mac(polygon_boundary(n));
    const int s0 = z.dim_offset(2);
    for (int s = s0; s < s0 + static_cast<int>(z.count(2)); ++s) {
      std::map<int, int> hits;
      for (int e : z.boundary(s))
        for (int v : z.boundary(e)) ++hits[v];
      ASSERT_EQ(hits.size(), 4u);
      for (const auto& [v, count] : hits) EXPECT_EQ(count, 2);
    }
  }
}

TEST(CubicalComplex, RejectsDuplicateAndMissingFaces) {
  EXPECT_THROW(CubicalComplex(2, (std::vector<CubicalCell>{{0, 0}, {0, 0}})), DomainError);
  // an edge without its endpoints
  EXPECT_THROW(CubicalComplex(2, (std::vector<CubicalCell>{{1, 0}})), DomainError);
  EXPECT_THROW(CubicalComplex(2, (std::vector<CubicalCell>{{1, 1}})), DomainError);  // eps inside sigma
}

TEST(VerifyInclusion, PointsInsidePolygon) {
  EXPECT_TRUE(verify_inclusion(discrete_points(5), polygon_boundary(5)));
  const auto zl = build_real_mac(discrete_points(5));
  const auto zk = build_real_mac(polygon_boundary(5));
  EXPECT_EQ(zl.count(1), 80u);
  for (const auto& e : zl.cells_of_dim(1)) EXPECT_TRUE(zk.contains(e));
}

TEST(VerifyInclusion, IdentityAndReverse) {
  EXPECT_TRUE(verify_inclusion(polygon_boundary(4), polygon_boundary(4)));
  EXPECT_FALSE(verify_inclusion(polygon_boundary(4), discrete_points(4)));
  EXPECT_THROW(verify_inclusion(discrete_points(4), polygon_boundary(5)), DomainError);
}

TEST(BuildRealMac, OneSkeletonOfPointsIsHypercube) {
  for (int n = 1; n <= 8; ++n) {
    const auto z = build_real_mac(discrete_points(n));
    const auto skel = one_skeleton(z);
    const auto cube = hypercube_graph(n);
    ASSERT_EQ(skel.vertex_count, cube.vertex_count);
    // map skeleton vertex index -> coordinate mask, then compare edge sets
    std::set<std::pair<int, int>> a, b;
    const auto verts = z.cells_of_dim(0);
    for (const auto& [u, v] : skel.edges) {
      const int x = static_cast<int>(verts[static_cast<std::size_t>(u)].eps);
      const int y = static_cast<int>(verts[static_cast<std::size_t>(v)].eps);
      a.emplace(std::min(x, y), std::max(x, y));
    }
    for (const auto& [u, v] : cube.edges) b.emplace(std::min(u, v), std::max(u, v));
    EXPECT_EQ(a, b) << "n=" << n;
  }
}

TEST(IsPolygonComplex, Detects) {
  EXPECT_TRUE(is_polygon_complex(build_real_mac(polygon_boundary(5))));
  EXPECT_FALSE(is_polygon_complex(build_real_mac(discrete_points(5))));
}
