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
#include "graphhom/moves.hpp"

namespace graphhom {
namespace {

using testing::census_graph;
using testing::census_link;

// Some site among `candidates` undoes the move.
bool undone_by_some(const Diagram& before, const Diagram& after,
                    const std::vector<MoveSite>& candidates) {
  for (const auto& s : candidates) {
    if (!check_site(after, s).empty()) continue;
    if (isomorphic(apply_move(after, s), before)) return true;
  }
  return false;
}

TEST(Moves, R1OnLoop) {
  auto u = census_link("unknot");
  auto k = apply_move(u, {MoveKind::kR1Add, {-1, 0, 0}});
  EXPECT_EQ(k.crossings.size(), 1u);
  EXPECT_EQ(k.loops, 0);
  EXPECT_TRUE(validate(k).ok());
  EXPECT_EQ(component_count(k), 1);
  auto back = apply_move(k, {MoveKind::kR1Remove, {0}});
  EXPECT_TRUE(isomorphic(back, u));
}

TEST(Moves, R1AllVariantsInvert) {
  auto t = census_link("trefoil");
  for (int arc = 0; arc <= t.max_arc(); ++arc) {
    for (int side = 0; side < 2; ++side) {
      for (int over = 0; over < 2; ++over) {
        auto k = apply_move(t, {MoveKind::kR1Add, {arc, side, over}});
        ASSERT_TRUE(validate(k).ok());
        EXPECT_EQ(std::abs(writhe(k) - writhe(t)), 1);
        EXPECT_TRUE(undone_by_some(t, k, simplifying_sites(k)));
      }
    }
  }
}

TEST(Moves, R2InsertThenRemove) {
  auto base = census_link("figure_eight");
  int tried = 0;
  for (const auto& f : faces(base)) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (i == j) continue;
        for (int over = 0; over < 2; ++over) {
          MoveSite s{MoveKind::kR2Add, {f[i].node, f[i].slot, f[j].node, f[j].slot, over}};
          if (!check_site(base, s).empty()) continue;
          auto d = apply_move(base, s);
          ASSERT_TRUE(validate(d).ok());
          EXPECT_EQ(writhe(d), writhe(base));
          EXPECT_TRUE(undone_by_some(base, d, simplifying_sites(d)));
          ++tried;
        }
      }
    }
  }
  EXPECT_GT(tried, 10);
}

TEST(Moves, ReducedKnotsHaveNoSimplifyingSites) {
  EXPECT_TRUE(simplifying_sites(census_link("trefoil")).empty());
  EXPECT_TRUE(simplifying_sites(census_link("figure_eight")).empty());
}

TEST(Moves, R3IsAnInvolution) {
  auto d = census_link("trefoil");
  int found = 0;
  for (int trial = 0; trial < 40 && found < 5; ++trial) {
    auto e = random_moves(d, 100 + trial, 4);
    for (const auto& s : r3_sites(e)) {
      auto f = apply_move(e, s);
      ASSERT_TRUE(validate(f).ok());
      EXPECT_EQ(writhe(f), writhe(e));
      EXPECT_TRUE(undone_by_some(e, f, r3_sites(f)));
      ++found;
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Moves, R5TwistUntwist) {
  auto g = census_graph("theta");
  for (int s = 0; s < 3; ++s) {
    for (int over = 0; over < 2; ++over) {
      auto t = apply_move(g, {MoveKind::kR5Twist, {0, s, over}});
      ASSERT_TRUE(validate(t).ok());
      EXPECT_EQ(t.crossings.size(), 1u);
      EXPECT_TRUE(undone_by_some(g, t, simplifying_sites(t)));
    }
  }
}

TEST(Moves, R4SlideInverts) {
  auto g = census_graph("g2_hopf_handcuff");
  int found = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto e = random_moves(g, 500 + trial, 3);
    for (const auto& s : r4_sites(e)) {
      auto f = apply_move(e, s);
      ASSERT_TRUE(validate(f).ok()) << validate(f).violations.front();
      EXPECT_TRUE(undone_by_some(e, f, r4_sites(f)));
      ++found;
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Moves, MismatchNamesTheCheck) {
  auto t = census_link("trefoil");
  try {
    apply_move(t, {MoveKind::kR1Remove, {0}});
    FAIL();
  } catch (const MoveError& e) {
    EXPECT_NE(std::string(e.what()).find("kink"), std::string::npos);
  }
}

TEST(Moves, RandomSequencesStayValid) {
  for (const auto& n : testing::graph_names()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto d = random_moves(census_graph(n), seed, 15);
      ASSERT_TRUE(validate(d).ok()) << n << " seed " << seed;
    }
  }
  for (const auto& n : testing::link_names()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto d = random_moves(census_link(n), seed, 15);
      ASSERT_TRUE(validate(d).ok()) << n << " seed " << seed;
      EXPECT_EQ(component_count(d), component_count(census_link(n)));
    }
  }
}

TEST(Moves, Deterministic) {
  auto g = census_graph("g2_hopf_handcuff");
  EXPECT_EQ(random_moves(g, 7, 20), random_moves(g, 7, 20));
}

TEST(Moves, ReduceKinkedUnknot) {
  auto u = random_moves(census_link("unknot"), 1, 6);
  auto r = reduce(u);
  EXPECT_EQ(component_count(r), 1);
}

}  // namespace
}  // namespace graphhom
