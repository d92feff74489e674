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
#include "graphhom/graph_homology.hpp"
#include "graphhom/moves.hpp"

namespace graphhom {
namespace {

using testing::census_graph;
using testing::census_link;
using testing::graph_names;

BigradedDims hat_of(const std::string& link) {
  return hfk_hat(pd_to_grid(orient_link(census_link(link)))).hat;
}

BigradedDims two_dim_factor() {
  BigradedDims x("M", "A");
  x.add_rank(1, 0, 1);
  x.add_rank(-1, 0, 1);
  return x;
}

TEST(GraphHomology, HandcuffFloerDecomposition) {
  auto r = hfg(census_graph("g1_handcuff"));
  ASSERT_EQ(r.members.size(), 2u);
  auto unknot = hat_of("unknot");
  auto want = tensor(tensor(unknot, unknot), two_dim_factor()) + unknot;
  EXPECT_EQ(r.floer, want);
  EXPECT_EQ(r.floer.total_rank(), 3);
  EXPECT_EQ(r.floer_verdict, "pass");
}

TEST(GraphHomology, HopfHandcuffFloer) {
  auto r = hfg(census_graph("g2_hopf_handcuff"));
  ASSERT_EQ(r.members.size(), 2u);
  EXPECT_EQ(r.floer, hat_of("hopf") + hat_of("unknot"));
  EXPECT_EQ(r.floer_verdict, "pass");
  for (const auto& m : r.members) {
    if (m.components == 2) {
      EXPECT_EQ(m.floer->hat.total_rank(), 4);
      EXPECT_EQ(m.total->to_string(), "u^(-1/2) + u^(1/2)");
    }
  }
}

TEST(GraphHomology, KhovanovSums) {
  auto g1 = kkh_graph(census_graph("g1_handcuff"));
  EXPECT_EQ(g1.khovanov.total_rank(), 6);
  EXPECT_EQ(g1.khovanov_verdict, "pass");
  auto g2 = kkh_graph(census_graph("g2_hopf_handcuff"));
  EXPECT_EQ(g2.khovanov.total_rank(), 6);
  EXPECT_EQ(g2.kh_euler, g2.jones_sum);
}

TEST(GraphHomology, VertexlessTrefoil) {
  auto r = graph_homology(census_link("trefoil"));
  ASSERT_EQ(r.members.size(), 1u);
  EXPECT_EQ(r.floer.total_rank(), 3);
  EXPECT_EQ(r.floer_euler.to_string(), "t^-1 - 1 + t");
  EXPECT_EQ(r.floer_verdict, "pass");
  EXPECT_EQ(r.khovanov_verdict, "pass");
}

TEST(GraphHomology, EmptyFamilyGivesZero) {
  auto g = diagram_from_json(nlohmann::json::parse(R"({"vertices":[[0],[0]]})"));
  auto r = graph_homology(g);
  EXPECT_TRUE(r.empty_family());
  EXPECT_TRUE(r.floer.empty());
  EXPECT_TRUE(r.khovanov.empty());
  EXPECT_EQ(r.floer_verdict, "pass");
  EXPECT_TRUE(r.to_json()["family"]["empty_family"].get<bool>());
}

TEST(GraphHomology, SkippedMembersMakeVerdictPartial) {
  GraphHomologyOptions opt;
  opt.max_grid = 3;
  opt.max_crossings = 1;
  auto r = graph_homology(census_graph("g2_hopf_handcuff"), opt);
  EXPECT_EQ(r.floer_verdict, "partial");
  EXPECT_EQ(r.khovanov_verdict, "partial");
  int skipped = 0;
  for (const auto& m : r.members) skipped += !m.floer_skip.empty();
  EXPECT_EQ(skipped, 1);
}

TEST(GraphHomology, AdditivityOverPartitions) {
  for (const auto& n : graph_names()) {
    auto full = graph_homology(census_graph(n));
    const auto& ms = full.members;
    for (std::size_t cut = 0; cut <= ms.size(); ++cut) {
      GraphHomologyReport a, b;
      a.options = b.options = full.options;
      for (std::size_t i = 0; i < ms.size(); ++i) accumulate(i < cut ? a : b, ms[i]);
      EXPECT_EQ(a.floer + b.floer, full.floer) << n;
      EXPECT_EQ(a.khovanov + b.khovanov, full.khovanov) << n;
      EXPECT_EQ(a.floer_euler + b.floer_euler, full.floer_euler) << n;
    }
  }
}

TEST(GraphHomology, MultisetWeightsByMultiplicity) {
  GraphHomologyOptions opt;
  opt.multiset = true;
  auto set = graph_homology(census_graph("g1_handcuff"));
  auto multi = graph_homology(census_graph("g1_handcuff"), opt);
  long long want = 0;
  for (const auto& m : set.members) {
    want += static_cast<long long>(m.member.multiplicity) * m.floer->hat.total_rank();
  }
  EXPECT_EQ(multi.floer.total_rank(), want);
  EXPECT_EQ(multi.floer_verdict, "pass");
}

TEST(GraphHomology, DeterministicAcrossJobs) {
  for (const auto& n : graph_names()) {
    GraphHomologyOptions opt;
    opt.jobs = 4;
    EXPECT_EQ(graph_homology(census_graph(n)).to_json().dump(),
              graph_homology(census_graph(n), opt).to_json().dump())
        << n;
  }
}

TEST(GraphHomology, StableUnderRandomMoves) {
  for (const auto& n : graph_names()) {
    auto g = census_graph(n);
    auto want = graph_homology(g);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      auto r = graph_homology(random_moves(g, seed, 10, 8));
      EXPECT_EQ(r.floer, want.floer) << n << " seed " << seed;
      EXPECT_EQ(r.khovanov, want.khovanov) << n << " seed " << seed;
      EXPECT_EQ(r.floer_euler, want.floer_euler) << n;
      EXPECT_EQ(r.kh_euler, want.kh_euler) << n;
    }
  }
}

TEST(GraphHomology, EqualFamiliesGiveEqualDims) {
  // the theta graph and a vertexless unknot share the family {unknot}
  auto a = graph_homology(census_graph("theta"));
  auto b = graph_homology(census_link("unknot"));
  ASSERT_EQ(member_fingerprints(a.family, false), member_fingerprints(b.family, false));
  EXPECT_EQ(a.floer, b.floer);
  EXPECT_EQ(a.khovanov, b.khovanov);
}

}  // namespace
}  // namespace graphhom
