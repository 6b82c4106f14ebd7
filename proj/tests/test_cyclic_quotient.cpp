#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "oracles.hpp"
#include "rmac/cyclic_quotient.hpp"

using namespace rmac;

namespace {

QuotientComplex quotient_of(int n) { return quotient_complex(build_real_mac(polygon_boundary(n)), CyclicAction(n)); }

std::set<std::uint64_t> boundary_keys(const CubicalComplex& z, int idx) {
  std::set<std::uint64_t> out;
  for (int f : z.boundary(idx)) out.insert(z.cell(f).key());
  return out;
}

CubicalCell cell6(std::vector<int> sigma, const std::string& eps) { return make_cell(sigma, eps, 6); }

}  // namespace

TEST(CyclicAction, ShiftsCoordinatesUp) {
  const CyclicAction a(6);
  const auto v = cell6({}, "000111");
  EXPECT_EQ(act_on_cell(a, v, 1).eps_string(6), "100011");
  EXPECT_EQ(act_on_cell(a, v, 6), v);
  // edge * in coordinate 1 moves to coordinate 2
  const auto e = cell6({1}, "00000");
  EXPECT_EQ(act_on_cell(a, e, 1).sigma_list(), (std::vector<int>{2}));
  // square {6,1} wraps to {1,2}
  const auto s = cell6({1, 6}, "0000");
  EXPECT_EQ(act_on_cell(a, s, 1).sigma_list(), (std::vector<int>{1, 2}));
  EXPECT_THROW(CyclicAction(0), DomainError);
}

TEST(CyclicAction, OrbitSizes) {
  const CyclicAction a(6);
  EXPECT_EQ(a.orbit_size(cell6({}, "000000")), 1);
  EXPECT_EQ(a.orbit_size(cell6({}, "010101")), 2);
  EXPECT_EQ(a.orbit_size(cell6({}, "001001")), 3);
  EXPECT_EQ(a.orbit_size(cell6({}, "000111")), 6);
  EXPECT_EQ(a.orbit_size(cell6({3}, "00000")), 6);
}

TEST(QuotientComplex, OrbitCountsMatchOracle) {
  for (int n = 3; n <= 9; ++n) {
    const auto q = quotient_of(n);
    const auto want = oracle::polygon_orbit_counts(n);
    EXPECT_EQ(static_cast<std::int64_t>(q.vertices.size()), want.at(0)) << n;
    EXPECT_EQ(static_cast<std::int64_t>(q.edges.size()), want.at(1)) << n;
    EXPECT_EQ(static_cast<std::int64_t>(q.squares.size()), want.at(2)) << n;
  }
}

TEST(QuotientComplex, SmallCases) {
  struct Case {
    int n;
    std::size_t v, e, f;
    std::int64_t chi;
  };
  for (auto c : {Case{3, 4, 4, 2, 2}, Case{4, 6, 8, 4, 2}, Case{5, 8, 16, 8, 0}, Case{6, 14, 32, 16, -2}}) {
    const auto q = quotient_of(c.n);
    EXPECT_EQ(q.vertices.size(), c.v);
    EXPECT_EQ(q.edges.size(), c.e);
    EXPECT_EQ(q.squares.size(), c.f);
    EXPECT_EQ(q.euler_characteristic(), c.chi);
  }
}

TEST(QuotientComplex, VertexLabelsAndIsotropy) {
  const auto q = quotient_of(4);
  std::vector<std::string> labels;
  for (const auto& v : q.vertices) {
    labels.push_back(v.label);
    EXPECT_EQ(v.size * v.isotropy, 4);
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"0000", "0001", "0011", "0101", "0111", "1111"}));
  for (const auto& v : q.vertices)
    if (v.label == "0101") {
      EXPECT_EQ(v.isotropy, 2);
    }
}

TEST(QuotientComplex, Rejections) {
  EXPECT_THROW(quotient_complex(build_real_mac(polygon_boundary(5)), CyclicAction(4)), DomainError);
  EXPECT_THROW(quotient_complex(build_real_mac(discrete_points(5)), CyclicAction(5)), DomainError);
}

TEST(QuotientComplex, SurfaceCertification) {
  for (int n = 3; n <= 12; ++n) {
    const auto f = quotient_of(n).face_complex();
    const auto cert = certify_surface(f);
    EXPECT_TRUE(cert.closed) << n;
    EXPECT_TRUE(cert.connected) << n;
    EXPECT_TRUE(cert.orientable) << n;
    EXPECT_TRUE(orientation_is_valid(f, cert.orientation)) << n;
    ASSERT_TRUE(cert.genus.has_value());
    EXPECT_EQ(*cert.genus, quotient_genus_closed_form(n)) << n;
  }
}

TEST(QuotientGenus, ClosedForm) {
  EXPECT_EQ(quotient_genus_closed_form(3), 0);
  EXPECT_EQ(quotient_genus_closed_form(4), 0);
  EXPECT_EQ(quotient_genus_closed_form(5), 1);
  EXPECT_EQ(quotient_genus_closed_form(6), 2);
  const std::int64_t want[] = {15, 35, 75, 163, 337, 709, 1458};
  for (int n = 8; n <= 14; ++n) EXPECT_EQ(quotient_genus_closed_form(n), want[n - 8]) << n;
}

TEST(QuotientGenus, UpperBoundEqualsClosedForm) {
  EXPECT_EQ(quotient_genus_upper_bound(6), 2);
  EXPECT_EQ(quotient_genus_upper_bound(4), 0);
  EXPECT_EQ(quotient_genus_upper_bound(12), 337);
}

TEST(BranchPoints, HexagonCase) {
  const auto b = branch_points(6);
  std::vector<std::pair<std::string, int>> got;
  for (const auto& x : b) got.emplace_back(x.label, x.period);
  EXPECT_EQ(got, (std::vector<std::pair<std::string, int>>{
                     {"000000", 1}, {"001001", 3}, {"010101", 2}, {"011011", 3}, {"111111", 1}}));
  std::multiset<int> periods;
  std::int64_t sum = 0;
  for (const auto& x : b) {
    periods.insert(x.period);
    sum += 6 - 6 / x.isotropy;
  }
  EXPECT_EQ(b.size(), 5u);
  EXPECT_EQ(periods, (std::multiset<int>{1, 1, 2, 3, 3}));
  EXPECT_EQ(sum, 20);
}

TEST(BranchPoints, PrimeN) {
  // only the two constant words are fixed
  for (int n : {3, 5, 7, 11, 13}) {
    const auto b = branch_points(n);
    ASSERT_EQ(b.size(), 2u) << n;
    EXPECT_EQ(b[0].isotropy, n);
    EXPECT_EQ(b[1].isotropy, n);
  }
}

TEST(BranchPoints, MatchesStringOracle) {
  for (int n = 3; n <= 12; ++n) {
    std::size_t want = 0;
    for (const auto& [w, size] : oracle::necklace_classes(n))
      if (size < static_cast<std::size_t>(n)) ++want;
    EXPECT_EQ(branch_points(n).size(), want) << n;
  }
}

TEST(RiemannHurwitz, HoldsThrough14) {
  for (int n = 3; n <= 14; ++n) {
    const auto r = riemann_hurwitz_check(n);
    EXPECT_TRUE(r.holds) << n;
    EXPECT_EQ(r.chi_total, (4 - n) * pow2(n - 2));
  }
  const auto six = riemann_hurwitz_check(6);
  EXPECT_EQ(six.chi_total, -32);
  EXPECT_EQ(six.chi_quotient, -2);
  EXPECT_EQ(six.branch_sum, 20);
}

TEST(QuotientGraph, SmallCases) {
  const auto q3 = quotient_graph(3);
  EXPECT_EQ(q3.graph.vertex_count, 4);
  EXPECT_EQ(q3.graph.edges.size(), 4u);
  EXPECT_TRUE(q3.matches_complex);
  const auto q4 = quotient_graph(4);
  EXPECT_EQ(q4.graph.vertex_count, 6);
  EXPECT_EQ(q4.graph.edges.size(), 8u);
  EXPECT_TRUE(q4.matches_complex);
  const auto q6 = quotient_graph(6);
  EXPECT_EQ(q6.graph.vertex_count, 14);
  EXPECT_EQ(q6.graph.edges.size(), 32u);
  EXPECT_TRUE(q6.matches_complex);
}

TEST(QuotientGraph, MatchesComplexThrough12) {
  for (int n = 3; n <= 12; ++n) {
    const auto g = quotient_graph(n);
    EXPECT_TRUE(g.matches_complex) << n;
    EXPECT_EQ(g.loops, quotient_of(n).loop_count()) << n;
  }
}

// Properties of the action itself, exhaustive for n <= 10 and spot-checked at 12.
class ActionProperties : public ::testing::TestWithParam<int> {};

TEST_P(ActionProperties, EquivariantFreeAndWithoutInversion) {
  const int n = GetParam();
  const auto z = build_real_mac(polygon_boundary(n));
  const CyclicAction a(n);
  for (int i = 0; i < static_cast<int>(z.cells().size()); ++i) {
    const auto& c = z.cell(i);
    const auto r = a.rotate(c);
    const int j = z.find(r);
    ASSERT_GE(j, 0);
    std::set<std::uint64_t> rotated;
    for (int f : z.boundary(i)) rotated.insert(a.rotate(z.cell(f)).key());
    ASSERT_EQ(rotated, boundary_keys(z, j));
    if (c.dim() > 0) {
      ASSERT_EQ(a.orbit_size(c), n);
    }
    if (c.dim() == 1) {
      // the action carries the eps_i = 0 end to the eps_i = 0 end, so no edge is flipped
      const int bit_i = std::countr_zero(c.sigma);
      const int bit_r = std::countr_zero(r.sigma);
      ASSERT_EQ(rotate_word(c.eps, n, 1), r.eps);
      ASSERT_EQ(rotate_word(c.eps | bit(bit_i), n, 1), r.eps | bit(bit_r));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Exhaustive, ActionProperties, ::testing::Values(3, 4, 5, 6, 7, 8, 9, 10, 12));
