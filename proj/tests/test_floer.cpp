// Copyright 2026 The graphhom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "census.hpp"
#include "graphhom/grid_floer.hpp"
#include "graphhom/invariants.hpp"

namespace graphhom {
namespace {

using testing::census_link;
using testing::link_names;

GridDiagram census_grid(const std::string& name) {
  return pd_to_grid(orient_link(census_link(name)));
}

BigradedDims table(std::initializer_list<std::tuple<int, int, int>> entries) {
  BigradedDims d("M", "A");
  for (auto [m2, a2, r] : entries) d.add_rank(m2, a2, r);
  return d;
}

Poly power(const Poly& p, int k) {
  Poly r = make_t(0);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

TEST(GridGradings, UnknotStates) {
  auto g = unknot_grid();
  auto a = grid_gradings(g, {0, 1}), b = grid_gradings(g, {1, 0});
  std::set<std::pair<int, int>> got{{a.m2, a.a2}, {b.m2, b.a2}};
  EXPECT_EQ(got, (std::set<std::pair<int, int>>{{0, 0}, {-2, -2}}));
}

TEST(GridFloer, UnknotTilde) {
  auto r = hfk_hat(unknot_grid());
  EXPECT_EQ(r.tilde, table({{0, 0, 1}, {-2, -2, 1}}));
  EXPECT_EQ(r.hat, table({{0, 0, 1}}));
}

TEST(GridFloer, StabilizedUnknotTilde) {
  auto g = grid_stabilize(unknot_grid(), 0, true, 1, 0);
  ASSERT_EQ(g.n, 3);
  auto r = hfk_hat(g);
  EXPECT_EQ(r.tilde.total_rank(), 4);
  EXPECT_EQ(r.hat, table({{0, 0, 1}}));
}

TEST(GridFloer, Trefoil) {
  auto r = hfk_hat(census_grid("trefoil"));
  EXPECT_TRUE(r.d_squared_zero);
  EXPECT_EQ(r.hat, table({{0, 2, 1}, {-2, 0, 1}, {-4, -2, 1}}));
}

TEST(GridFloer, CensusRanks) {
  const std::map<std::string, int> rank{{"unknot", 1},      {"unlink2", 2},    {"hopf", 4},
                                        {"trefoil", 3},     {"figure_eight", 5},
                                        {"cinquefoil", 5},  {"three_twist", 7}};
  for (const auto& [name, k] : rank) {
    auto r = hfk_hat(census_grid(name));
    EXPECT_TRUE(r.d_squared_zero) << name;
    EXPECT_EQ(r.hat.total_rank(), k) << name;
  }
}

TEST(GridFloer, EulerIsAlexander) {
  for (const auto& name : link_names()) {
    auto d = orient_link(census_link(name));
    auto r = hfk_hat(pd_to_grid(d));
    int l = component_count(d);
    EXPECT_EQ(floer_euler(r.hat, l), power(t_half_difference(), l - 1) * alexander(d)) << name;
  }
}

TEST(GridFloer, TotalHomology) {
  Poly x = Poly::monomial({"u"}, {1}) + Poly::monomial({"u"}, {-1});
  for (const auto& name : link_names()) {
    auto d = orient_link(census_link(name));
    Poly want = make_t(0, 1, "u");
    for (int i = 1; i < component_count(d); ++i) want = want * x;
    EXPECT_EQ(total_floer_homology(pd_to_grid(d)), want) << name;
  }
}

TEST(GridFloer, InvariantUnderGridMoves) {
  for (const std::string name : {"trefoil", "hopf", "figure_eight"}) {
    auto g = census_grid(name);
    auto want = hfk_hat(g).hat;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      auto h = grid_random_moves(g, seed, 30, 7);
      EXPECT_EQ(hfk_hat(h).hat, want) << name << " seed " << seed;
    }
  }
}

TEST(GridFloer, MirrorNegatesGradings) {
  for (const std::string name : {"trefoil", "hopf", "figure_eight", "three_twist"}) {
    auto g = census_grid(name);
    EXPECT_EQ(hfk_hat(grid_mirror(g)).hat, hfk_hat(g).hat.negated()) << name;
  }
}

TEST(GridFloer, ReversalPreserves) {
  for (const std::string name : {"trefoil", "hopf", "three_twist"}) {
    auto g = census_grid(name);
    EXPECT_EQ(hfk_hat(grid_reverse(g)).hat, hfk_hat(g).hat) << name;
  }
}

TEST(GridFloer, DisjointUnionAddsTwoDimensionalFactor) {
  auto t = census_grid("trefoil");
  auto factor = table({{1, 0, 1}, {-1, 0, 1}});
  auto want = tensor(hfk_hat(t).hat, factor);
  EXPECT_EQ(hfk_hat(grid_disjoint_union(t, unknot_grid())).hat, want);
  auto h = census_grid("hopf");
  EXPECT_EQ(hfk_hat(grid_disjoint_union(unknot_grid(), h)).hat,
            tensor(hfk_hat(h).hat, factor));
}

TEST(GridFloer, ConnectedSumIsTensorProduct) {
  auto t = census_grid("trefoil");
  auto ht = hfk_hat(t).hat;
  auto s = simplify_grid(grid_connected_sum(t, grid_mirror(t)));
  EXPECT_EQ(hfk_hat(s).hat, tensor(ht, ht.negated()));
}

TEST(Deconvolve, ExactAndRejects) {
  auto p = table({{0, 0, 1}, {-2, -2, 2}, {-4, -4, 1}});
  EXPECT_EQ(deconvolve(p, -2, -2, 2), table({{0, 0, 1}}));
  EXPECT_THROW(deconvolve(table({{0, 0, 1}}), -2, -2, 1), FloerError);
}

TEST(GridFloer, CapIsEnforced) {
  EXPECT_THROW(hfk_hat(census_grid("cinquefoil"), FloerOptions{6, true}), ResourceError);
}

}  // namespace
}  // namespace graphhom
