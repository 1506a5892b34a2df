#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "birch/polytope.hpp"
#include "support/oracles.hpp"

using namespace birch;

namespace {

std::set<ExponentVector> as_set(const std::vector<ExponentVector>& v) { return {v.begin(), v.end()}; }

std::set<ExponentVector> oracle_vertices(const std::vector<ExponentVector>& pts) {
  std::vector<oracle::Point> s;
  for (const auto& p : pts) s.push_back(oracle::to_point(p));
  std::set<ExponentVector> out;
  for (auto i : oracle::vertices(s)) out.insert(pts[i]);
  return out;
}

}  // namespace

TEST(Hull, SquareWithCenter) {
  const auto h = NewtonPolytope::hull({{8, 0}, {0, 8}, {4, 4}, {0, 0}, {8, 8}});
  EXPECT_EQ(h.dim(), 2);
  EXPECT_EQ(as_set(h.vertices()), (std::set<ExponentVector>{{0, 0}, {8, 0}, {0, 8}, {8, 8}}));
  EXPECT_FALSE(h.is_vertex({4, 4}));
  EXPECT_EQ(h.facets().size(), 4u);
}

TEST(Hull, DegenerateInputs) {
  const auto point = NewtonPolytope::hull({{3, 1}});
  EXPECT_EQ(point.dim(), 0);
  EXPECT_EQ(point.vertices(), (std::vector<ExponentVector>{{3, 1}}));
  const auto segment = NewtonPolytope::hull({{0, 0}, {2, 2}, {4, 4}});
  EXPECT_EQ(segment.dim(), 1);
  EXPECT_EQ(as_set(segment.vertices()), (std::set<ExponentVector>{{0, 0}, {4, 4}}));
  EXPECT_TRUE(segment.is_relative_interior({2, 2}));
  EXPECT_THROW(segment.is_interior({2, 2}), DimensionError);
}

TEST(Hull, MatchesConvexCombinationOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto pts = fixture::random_points(rng, n, 5 + trial % 6, 6);
    EXPECT_EQ(as_set(NewtonPolytope::hull(pts).vertices()), oracle_vertices(pts)) << "trial " << trial;
  }
}

TEST(Interior, StrictFacetInequalities) {
  const auto h = NewtonPolytope::hull({{0, 0}, {8, 0}, {0, 8}, {8, 8}});
  EXPECT_TRUE(h.is_interior({1, 4}));
  EXPECT_FALSE(h.is_interior({8, 4}));
  EXPECT_FALSE(h.is_interior({9, 9}));
  EXPECT_TRUE(h.contains({8, 4}));
  EXPECT_FALSE(h.contains({9, 9}));
}

TEST(Simplicity, PolygonsAreSimple) {
  const auto h = NewtonPolytope::hull({{0, 0}, {5, 1}, {4, 4}, {1, 6}, {2, 2}});
  for (const auto& v : h.vertices()) EXPECT_TRUE(h.is_simple_at(v).simple);
}

TEST(Simplicity, CubeAndOctahedron) {
  const auto cube = NewtonPolytope::hull(fixture::cube());
  for (const auto& v : fixture::cube()) {
    const auto s = cube.is_simple_at(v);
    EXPECT_TRUE(s.simple);
    EXPECT_EQ(as_set(s.neighbors), as_set(fixture::cube_neighbors(v)));
  }
  const auto octa = NewtonPolytope::hull(fixture::octahedron());
  for (const auto& v : fixture::octahedron()) {
    const auto s = octa.is_simple_at(v);
    EXPECT_FALSE(s.simple);
    EXPECT_EQ(as_set(s.neighbors), as_set(fixture::octahedron_neighbors(v)));
  }
}

TEST(Faces, AvoidingOrigin) {
  auto collect = [](const NewtonPolytope& h) {
    std::set<std::set<ExponentVector>> out;
    for (const auto& f : h.faces_avoiding_origin()) out.insert(as_set(f.vertices));
    return out;
  };
  using S = std::set<std::set<ExponentVector>>;
  EXPECT_EQ(collect(NewtonPolytope::hull({{0, 0}, {4, 0}, {0, 4}, {4, 4}})),
            (S{{{4, 0}}, {{0, 4}}, {{4, 4}}, {{4, 0}, {4, 4}}, {{0, 4}, {4, 4}}}));
  EXPECT_EQ(collect(NewtonPolytope::hull({{0, 0}, {4, 0}})), (S{{{4, 0}}}));
  EXPECT_EQ(collect(NewtonPolytope::hull({{0, 0}, {4, 0}, {0, 4}})), (S{{{4, 0}}, {{0, 4}}, {{4, 0}, {0, 4}}}));
  EXPECT_THROW(NewtonPolytope::hull({{1, 0}, {0, 1}}).faces_avoiding_origin(), std::invalid_argument);
}

TEST(Barycentric, ExactWeights) {
  const std::vector<ExponentVector> motzkin = {{4, 2}, {2, 4}, {0, 0}};
  const auto b = barycentric(motzkin, {2, 2});
  EXPECT_EQ(b.weights, (RationalVector{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
  EXPECT_TRUE(b.interior);
  const auto v = barycentric(motzkin, {4, 2});
  EXPECT_EQ(v.weights, (RationalVector{1, 0, 0}));
  EXPECT_FALSE(v.interior);
  const std::vector<ExponentVector> corner = {{4, 0}, {0, 4}, {0, 0}};
  EXPECT_EQ(barycentric(corner, {1, 1}).weights, (RationalVector{Rational(1, 4), Rational(1, 4), Rational(1, 2)}));
}
