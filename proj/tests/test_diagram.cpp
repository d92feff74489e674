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
#include "graphhom/diagram.hpp"

namespace graphhom {
namespace {

using testing::census_graph;
using testing::census_link;

TEST(Validate, UnknotLoop) {
  RawDiagram raw;
  raw.loops = 1;
  EXPECT_TRUE(validate(raw).ok());
}

TEST(Validate, ArcMultiplicity) {
  RawDiagram raw;
  raw.crossings = {{0, 3, 1, 3}, {1, 3, 0, 2}};
  auto rep = validate(raw);
  ASSERT_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.violations) found |= v.find("arc multiplicity") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(Validate, SlotCount) {
  RawDiagram raw;
  raw.crossings = {{0, 1, 0}};
  EXPECT_FALSE(validate(raw).ok());
}

TEST(Validate, CensusIsValid) {
  for (const auto& n : testing::link_names()) {
    auto d = census_link(n);
    EXPECT_TRUE(validate(d).ok()) << n;
    EXPECT_TRUE(d.oriented) << n;
  }
  for (const auto& n : testing::graph_names()) EXPECT_TRUE(validate(census_graph(n)).ok()) << n;
}

TEST(Components, Counts) {
  EXPECT_EQ(component_count(census_link("unknot")), 1);
  EXPECT_EQ(component_count(census_link("hopf")), 2);
  EXPECT_EQ(component_count(census_link("trefoil")), 1);
  EXPECT_EQ(component_count(disjoint_union(census_link("trefoil"), census_link("unknot"))), 2);
  EXPECT_EQ(component_count(disjoint_union(census_link("trefoil"), census_link("hopf"))), 3);
}

TEST(Components, LabelsCoverArcs) {
  auto d = census_link("hopf");
  auto lab = split_components(d);
  EXPECT_EQ(lab.count, 2);
  EXPECT_EQ(lab.traced, 2);
}

TEST(Mirror, Involution) {
  for (const auto& n : testing::link_names()) {
    auto d = census_link(n);
    EXPECT_EQ(mirror(mirror(d)), d) << n;
    EXPECT_EQ(reverse(reverse(d)), d) << n;
    EXPECT_TRUE(validate(mirror(d)).ok()) << n;
    EXPECT_TRUE(validate(reverse(d)).ok()) << n;
  }
}

TEST(Mirror, FlipsWrithe) {
  auto h = census_link("hopf");
  EXPECT_EQ(writhe(h), 2);
  EXPECT_EQ(writhe(mirror(h)), -2);
  EXPECT_EQ(writhe(reverse(h)), 2);
  EXPECT_EQ(writhe(reverse_component(h, 0)), -2);
}

TEST(Union, EmptyIsIdentity) {
  auto t = census_link("trefoil");
  Diagram empty;
  empty.oriented = true;
  EXPECT_TRUE(isomorphic(disjoint_union(empty, t), t));
  auto u = disjoint_union(census_link("unknot"), census_link("unknot"));
  EXPECT_EQ(u.loops, 2);
}

TEST(ConnectedSum, ValidAndAdditive) {
  auto t = census_link("trefoil"), f = census_link("figure_eight");
  auto s = connected_sum(t, 0, f, 0);
  EXPECT_TRUE(validate(s).ok());
  EXPECT_EQ(component_count(s), 1);
  EXPECT_EQ(s.crossings.size(), 7u);
  EXPECT_EQ(writhe(s), writhe(t) + writhe(f));
}

TEST(Canonical, RelabelInvariant) {
  auto d = census_link("figure_eight");
  Diagram r = d;
  int m = r.max_arc();
  for (auto& c : r.crossings) {
    for (int& a : c.arcs) a = m - a;
  }
  std::rotate(r.crossings.begin(), r.crossings.begin() + 1, r.crossings.end());
  EXPECT_TRUE(isomorphic(d, r));
  EXPECT_FALSE(isomorphic(d, mirror(d)));
}

TEST(Json, RoundTrip) {
  for (const auto& n : testing::link_names()) {
    auto d = census_link(n);
    EXPECT_EQ(diagram_from_json(to_json(d)), d) << n;
  }
  auto g = census_graph("g2_hopf_handcuff");
  EXPECT_EQ(diagram_from_json(to_json(g)), g);
}

TEST(Faces, EulerFormula) {
  for (const auto& n : {"trefoil", "figure_eight", "hopf"}) {
    auto d = census_link(n);
    // connected 4-valent planar: F = V + 2
    EXPECT_EQ(faces(d).size(), d.crossings.size() + 2) << n;
  }
}

}  // namespace
}  // namespace graphhom
