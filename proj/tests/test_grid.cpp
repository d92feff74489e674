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
#include "graphhom/grid.hpp"
#include "graphhom/invariants.hpp"
#include "graphhom/moves.hpp"

namespace graphhom {
namespace {

using testing::census_link;
using testing::link_names;

GridDiagram shifted_grid(int n, int k) {
  GridDiagram g{n, {}, {}};
  for (int r = 0; r < n; ++r) {
    g.O.push_back(r);
    g.X.push_back((r + k) % n);
  }
  return g;
}

TEST(Grid, ValidationRejectsBadMarkings) {
  EXPECT_TRUE(grid_violations(unknot_grid()).empty());
  EXPECT_FALSE(grid_violations(GridDiagram{2, {0, 1}, {0, 1}}).empty());
  EXPECT_FALSE(grid_violations(GridDiagram{3, {1, 1, 0}, {0, 2, 1}}).empty());
  EXPECT_FALSE(grid_violations(GridDiagram{3, {1, 2}, {0, 1, 2}}).empty());
  EXPECT_THROW(grid_from_json(nlohmann::json{{"n", 2}, {"X", {0, 0}}, {"O", {1, 1}}}),
               GridError);
}

TEST(Grid, JsonRoundTrip) {
  auto g = shifted_grid(5, 2);
  EXPECT_EQ(grid_from_json(to_json(g)), g);
}

TEST(Grid, ShiftedGridIsTrefoil) {
  auto d = grid_to_pd(shifted_grid(5, 2));
  EXPECT_EQ(d.crossings.size(), 3u);
  EXPECT_EQ(fingerprint(d).key(), fingerprint(mirror(census_link("trefoil"))).key());
}

TEST(Grid, ComponentCount) {
  EXPECT_EQ(grid_component_count(unknot_grid()), 1);
  EXPECT_EQ(grid_component_count(grid_disjoint_union(unknot_grid(), unknot_grid())), 2);
  EXPECT_EQ(grid_component_count(shifted_grid(4, 2)), 2);
}

TEST(Grid, MirrorAndReverseMatchDiagramOperations) {
  auto g = shifted_grid(5, 2);
  auto d = grid_to_pd(g);
  EXPECT_EQ(fingerprint(grid_to_pd(grid_mirror(g))).key(), fingerprint(mirror(d)).key());
  EXPECT_EQ(fingerprint(grid_to_pd(grid_reverse(g))).key(), fingerprint(reverse(d)).key());
}

TEST(Grid, ConnectedSumMatchesDiagram) {
  auto a = shifted_grid(5, 2), b = grid_mirror(shifted_grid(5, 2));
  auto da = grid_to_pd(a), db = grid_to_pd(b);
  auto sum = grid_to_pd(grid_connected_sum(a, b));
  EXPECT_EQ(fingerprint(sum).key(), fingerprint(connected_sum(da, 0, db, 0)).key());
}

TEST(Grid, StabilizeThenDestabilize) {
  auto g = shifted_grid(5, 2);
  auto fp = fingerprint(grid_to_pd(g)).key();
  for (int r = 0; r < g.n; ++r) {
    for (int mask = 0; mask < 8; ++mask) {
      auto h = grid_stabilize(g, r, mask & 1, (mask >> 1) & 1, (mask >> 2) & 1);
      EXPECT_EQ(h.n, 6);
      EXPECT_EQ(fingerprint(grid_to_pd(h)).key(), fp);
      EXPECT_EQ(simplify_grid(h).n, 5);
    }
  }
}

TEST(Grid, RandomMovesPreserveLinkType) {
  auto g = shifted_grid(5, 2);
  auto fp = fingerprint(grid_to_pd(g)).key();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto h = grid_random_moves(g, seed, 40, 9);
    EXPECT_EQ(fingerprint(grid_to_pd(h)).key(), fp) << "seed " << seed;
  }
}

TEST(PdToGrid, CensusRoundTrip) {
  for (const auto& name : link_names()) {
    auto d = orient_link(census_link(name));
    auto raw = pd_to_grid_raw(d);
    auto g = simplify_grid(raw);
    EXPECT_LE(g.n, raw.n);
    EXPECT_EQ(fingerprint(grid_to_pd(raw)).key(), fingerprint(d).key()) << name;
    EXPECT_EQ(fingerprint(grid_to_pd(g)).key(), fingerprint(d).key()) << name;
  }
}

TEST(PdToGrid, ReachesArcIndex) {
  const std::map<std::string, int> arc_index{
      {"unknot", 2}, {"unlink2", 4},     {"hopf", 4},       {"trefoil", 5},
      {"figure_eight", 6}, {"cinquefoil", 7}, {"three_twist", 7}};
  for (const auto& [name, n] : arc_index) {
    EXPECT_EQ(pd_to_grid(orient_link(census_link(name))).n, n) << name;
  }
}

TEST(PdToGrid, RandomDiagramsRoundTrip) {
  for (const auto& name : link_names()) {
    auto d = orient_link(census_link(name));
    auto fp = fingerprint(d).key();
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      auto e = random_moves(d, seed, 15);
      auto g = pd_to_grid_raw(e);
      EXPECT_EQ(fingerprint(grid_to_pd(g)).key(), fp) << name << " seed " << seed;
    }
  }
}

TEST(PdToGrid, SplitPiecesAndLoops) {
  auto d = disjoint_union(orient_link(census_link("trefoil")), orient_link(census_link("hopf")));
  d.loops = 1;
  auto g = pd_to_grid(d);
  EXPECT_EQ(grid_component_count(g), 4);
  EXPECT_EQ(fingerprint(grid_to_pd(g)).key(), fingerprint(d).key());
}

TEST(PdToGrid, RejectsGraphs) {
  EXPECT_THROW(pd_to_grid(testing::census_graph("theta")), GridError);
}

}  // namespace
}  // namespace graphhom
