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


// Acceptance run: one PASS/FAIL line per criterion, with measured values.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "census.hpp"
#include "graphhom/graph_homology.hpp"
#include "graphhom/moves.hpp"

namespace graphhom {
namespace {

using testing::census_graph;
using testing::census_link;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// consistency counters shared by every computation in the run
struct Oracles {
  long kh_complexes = 0, kh_bad = 0;
  long tilde_complexes = 0, tilde_bad = 0;
  long deconvolutions = 0, deconvolution_failures = 0;
} oracles;

KhovanovResult kh(const Diagram& d) {
  auto r = khovanov_homology(d, Coeffs::kZ);
  ++oracles.kh_complexes;
  oracles.kh_bad += !r.d_squared_zero;
  return r;
}

std::optional<FloerResult> hfk(const GridDiagram& g) {
  ++oracles.tilde_complexes;
  ++oracles.deconvolutions;
  try {
    auto r = hfk_hat(g);
    oracles.tilde_bad += !r.d_squared_zero;
    return r;
  } catch (const FloerError&) {
    ++oracles.deconvolution_failures;
    return std::nullopt;
  }
}

BigradedDims hat(const GridDiagram& g) {
  auto r = hfk(g);
  return r ? r->hat : BigradedDims("M", "A");
}

void record(const GraphHomologyReport& r) {
  for (const auto& m : r.members) {
    if (m.khovanov) {
      ++oracles.kh_complexes;
      oracles.kh_bad += !m.khovanov->d_squared_zero;
    }
    if (m.floer) {
      ++oracles.tilde_complexes;
      ++oracles.deconvolutions;
      oracles.tilde_bad += !m.floer->d_squared_zero;
    }
  }
}

GraphHomologyReport report(const Diagram& g) {
  try {
    auto r = graph_homology(g);
    record(r);
    return r;
  } catch (const FloerError&) {
    ++oracles.deconvolutions;
    ++oracles.deconvolution_failures;
    throw;
  }
}

GridDiagram grid_of(const std::string& link) { return pd_to_grid(orient_link(census_link(link))); }

int failures = 0;

void line(int id, bool pass, const std::string& detail, double secs) {
  std::printf("criterion %d: %s  %s  (%.2f s)\n", id, pass ? "PASS" : "FAIL", detail.c_str(), secs);
  std::fflush(stdout);
  failures += !pass;
}

std::set<Fingerprint> fingerprints_of(const LinkFamily& f) {
  auto v = member_fingerprints(f, false);
  return {v.begin(), v.end()};
}

void criterion1() {
  auto t0 = Clock::now();
  auto g = census_graph("g1_handcuff");
  auto fam = fingerprints_of(family(g));
  std::set<Fingerprint> want{fingerprint(census_link("unlink2")), fingerprint(census_link("unknot"))};
  auto r = report(g);
  auto u = hat(unknot_grid());
  BigradedDims x("M", "A");
  x.add_rank(1, 0, 1);
  x.add_rank(-1, 0, 1);
  auto expected = tensor(tensor(u, u), x) + u;
  double s = seconds_since(t0);
  std::ostringstream os;
  os << "family {unlink2, unknot}: " << (fam == want ? "yes" : "no")
     << "; HFG = " << r.floer.poincare().to_string() << " rank " << r.floer.total_rank()
     << "; matches HFK(o)xHFK(o)xX + HFK(o): " << (r.floer == expected ? "yes" : "no");
  line(1, fam == want && r.floer == expected && r.floer.total_rank() == 3 && s < 5, os.str(), s);
}

void criterion2() {
  auto t0 = Clock::now();
  auto g = census_graph("g2_hopf_handcuff");
  auto fam = fingerprints_of(family(g));
  std::set<Fingerprint> want{fingerprint(census_link("hopf")), fingerprint(census_link("unknot"))};
  auto hg = grid_of("hopf");
  Poly total = total_floer_homology(hg);
  auto hr = hfk(hg);
  auto r = report(g);
  double s = seconds_since(t0);
  long long total_rank = 0;
  for (const auto& [e, c] : total.terms()) total_rank += static_cast<long long>(c);
  bool poincare_ok = total.to_string() == "u^(-1/2) + u^(1/2)";
  std::ostringstream os;
  os << "family {hopf, unknot}: " << (fam == want ? "yes" : "no")
     << "; Hopf total homology " << total.to_string() << " rank " << total_rank
     << "; Hopf hat rank " << (hr ? hr->hat.total_rank() : -1)
     << "; HFG(G2) rank " << r.floer.total_rank();
  line(2, fam == want && total_rank == 2 && poincare_ok && s < 30, os.str(), s);
}

void criterion3() {
  auto t0 = Clock::now();
  int kh_checked = 0, kh_ok = 0, fl_checked = 0, fl_ok = 0;
  std::vector<Diagram> diagrams;
  for (const auto& n : testing::link_names()) diagrams.push_back(orient_link(census_link(n)));
  int randomized = 0;
  for (std::uint64_t seed = 1; randomized < 24; ++seed) {
    const auto& base = diagrams[seed % diagrams.size()];
    Diagram d = random_moves(base, seed, 12, 10);
    if (d.crossings.size() > 10) continue;
    diagrams.push_back(d);
    ++randomized;
  }
  // a few composite diagrams beyond the census shapes
  auto tre = orient_link(census_link("trefoil")), fig = orient_link(census_link("figure_eight"));
  auto hopf = orient_link(census_link("hopf"));
  diagrams.push_back(connected_sum(tre, 0, fig, 0));
  diagrams.push_back(connected_sum(tre, 0, mirror(tre), 0));
  diagrams.push_back(disjoint_union(tre, hopf));
  for (const auto& d : diagrams) {
    ++kh_checked;
    kh_ok += khovanov_euler(kh(d).dims) == unnormalized_jones(d);
  }
  for (const auto& n : testing::link_names()) {
    auto d = orient_link(census_link(n));
    auto g = pd_to_grid(d);
    if (g.n > 7) continue;
    auto r = hfk(g);
    ++fl_checked;
    if (r) fl_ok += floer_euler(r->hat, r->components) ==
                    detail::link_factor(r->components) * alexander(d);
  }
  double s = seconds_since(t0);
  std::ostringstream os;
  os << "Kh Euler = unnormalized Jones on " << kh_ok << "/" << kh_checked << " diagrams ("
     << randomized << " randomized, <= 10 crossings); HFK Euler = (t^1/2-t^-1/2)^(l-1) Delta on "
     << fl_ok << "/" << fl_checked << " census links (k = 0)";
  line(3, kh_ok == kh_checked && fl_ok == fl_checked && randomized >= 20 && s < 300, os.str(), s);
}

// moved diagrams past this size are checked through their reduced representative
constexpr std::size_t kDirectCubeCrossings = 12;

void criterion4() {
  auto t0 = Clock::now();
  int runs = 0, ok = 0;
  std::vector<std::pair<std::string, Diagram>> inputs;
  for (const auto& n : testing::graph_names()) inputs.emplace_back(n, census_graph(n));
  for (const auto& n : testing::link_names()) inputs.emplace_back(n, orient_link(census_link(n)));
  for (const auto& [name, g] : inputs) {
    auto want = report(g);
    auto want_fp = member_fingerprints(want.family, false);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Diagram e = random_moves(g, 1000 + seed, 12, 10);
      bool same = member_fingerprints(family(e), false) == want_fp;
      if (e.is_link() && e.crossings.size() <= kDirectCubeCrossings) {
        // homology of the moved diagram itself, not of a reduced representative
        Diagram o = fingerprint_orientation(e);
        auto k = kh(o);
        same = same && k.dims == want.khovanov;
        auto g2 = pd_to_grid(o);
        same = same && g2.n <= kDefaultGridCap && hat(g2) == want.floer;
      } else {
        auto r = report(e);
        same = same && r.floer == want.floer && r.khovanov == want.khovanov;
      }
      ++runs;
      ok += same;
      if (!same) std::printf("  invariance mismatch: %s seed %llu\n", name.c_str(),
                             static_cast<unsigned long long>(1000 + seed));
    }
  }
  double s = seconds_since(t0);
  std::ostringstream os;
  os << ok << "/" << runs << " move sequences keep family fingerprints, Kh dims and HFK-hat dims ("
     << inputs.size() << " census inputs x 50 seeds)";
  line(4, ok == runs && s < 600, os.str(), s);
}

void criterion5() {
  auto t0 = Clock::now();
  std::ostringstream os;
  bool pass = true;
  BigradedDims x("M", "A");
  x.add_rank(1, 0, 1);
  x.add_rank(-1, 0, 1);
  auto check = [&](const std::string& what, const std::vector<std::pair<BigradedDims, BigradedDims>>& cases) {
    // the grading offset is fixed at zero in every case
    int ok = 0;
    for (const auto& [got, want] : cases) ok += got == want;
    os << what << " " << ok << "/" << cases.size() << " (offset 0); ";
    pass = pass && ok == static_cast<int>(cases.size()) && cases.size() >= 5;
  };
  std::vector<std::string> links{"trefoil", "figure_eight", "hopf", "three_twist", "cinquefoil", "unlink2"};
  std::vector<std::pair<BigradedDims, BigradedDims>> rev, mir, uni, sum;
  for (const auto& n : links) {
    auto g = grid_of(n);
    auto h = hat(g);
    rev.emplace_back(hat(grid_reverse(g)), h);
    mir.emplace_back(hat(grid_mirror(g)), h.negated());
  }
  std::vector<std::pair<std::string, std::string>> pairs{
      {"unknot", "unknot"}, {"unknot", "trefoil"}, {"hopf", "unknot"},
      {"trefoil", "unknot"}, {"unknot", "figure_eight"}, {"hopf", "hopf"}};
  for (const auto& [a, b] : pairs) {
    auto ga = grid_of(a), gb = grid_of(b);
    uni.emplace_back(hat(grid_disjoint_union(ga, gb)), tensor(tensor(hat(ga), hat(gb)), x));
  }
  std::vector<std::pair<std::string, std::string>> sums{
      {"unknot", "trefoil"}, {"trefoil", "unknot"}, {"hopf", "unknot"},
      {"trefoil", "trefoil"}, {"hopf", "trefoil"}, {"unknot", "figure_eight"}};
  for (const auto& [a, b] : sums) {
    auto ga = grid_of(a), gb = grid_of(b);
    auto s = simplify_grid(grid_connected_sum(ga, gb));
    if (s.n > kDefaultGridCap) {
      os << "[sum " << a << "#" << b << " grid " << s.n << " over cap] ";
      continue;
    }
    sum.emplace_back(hat(s), tensor(hat(ga), hat(gb)));
  }
  check("reversal", rev);
  check("mirror", mir);
  check("union", uni);
  check("connected sum", sum);
  double s = seconds_since(t0);
  std::string detail = os.str();
  line(5, pass, detail.substr(0, detail.size() - 2), s);
}

void criterion6() {
  auto t0 = Clock::now();
  int doubled = 0, tried = 0;
  std::vector<GridDiagram> seeds{unknot_grid(), grid_of("hopf"), grid_of("trefoil"), grid_of("unlink2")};
  for (std::uint64_t seed = 0; tried < 20; ++seed) {
    auto g = grid_random_moves(seeds[seed % seeds.size()], 77 + seed, 15, 5);
    std::mt19937_64 rng(seed);
    int row = static_cast<int>(rng() % g.n);
    auto h = grid_stabilize(g, row, rng() % 2, static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
    if (h.n > 6) continue;
    auto a = hfk(g), b = hfk(h);
    ++tried;
    doubled += a && b && b->tilde.total_rank() == 2 * a->tilde.total_rank();
  }
  double s = seconds_since(t0);
  std::ostringstream os;
  os << "d^2 = 0 on " << oracles.kh_complexes - oracles.kh_bad << "/" << oracles.kh_complexes
     << " Khovanov cubes and " << oracles.tilde_complexes - oracles.tilde_bad << "/"
     << oracles.tilde_complexes << " tilde complexes; exact deconvolution "
     << oracles.deconvolutions - oracles.deconvolution_failures << "/" << oracles.deconvolutions
     << "; stabilization doubles tilde rank " << doubled << "/" << tried;
  line(6, oracles.kh_bad == 0 && oracles.tilde_bad == 0 && oracles.deconvolution_failures == 0 &&
              doubled == tried && tried >= 20,
       os.str(), s);
}

void criterion7() {
  auto t0 = Clock::now();
  auto t1 = Clock::now();
  auto k = kh(census_link("trefoil"));
  double kh_s = seconds_since(t1);
  auto g6 = grid_of("figure_eight");
  t1 = Clock::now();
  auto r6 = hfk(g6);
  double n6_s = seconds_since(t1);
  auto g7 = grid_of("cinquefoil");
  t1 = Clock::now();
  auto r7 = hfk(g7);
  double n7_s = seconds_since(t1);
  std::ostringstream os;
  os << "Kh(trefoil) over Z " << kh_s << " s; tilde n=" << g6.n << " " << n6_s << " s; tilde n="
     << g7.n << " " << n7_s << " s";
  line(7, k.dims.total_rank() == 4 && g6.n == 6 && g7.n == 7 && r6 && r7 && kh_s < 1 &&
              n6_s < 30 && n7_s < 600,
       os.str(), seconds_since(t0));
}

}  // namespace
}  // namespace graphhom

int main() {
  using namespace graphhom;
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion7, criterion6};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("criterion run aborted: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("acceptance: %s (%d failing)\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
