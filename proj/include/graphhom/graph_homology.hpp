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

#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "grid_floer.hpp"
#include "invariants.hpp"
#include "kauffman.hpp"
#include "khovanov.hpp"

namespace graphhom {

struct GraphHomologyOptions {
  bool floer = true;
  bool khovanov = true;
  Coeffs coeffs = Coeffs::kZ;
  int max_grid = kDefaultGridCap;
  int max_crossings = kDefaultCubeCap;
  bool multiset = false;  // weight members by multiplicity
  int jobs = 1;
  std::uint64_t family_cap = 1000000;
};

struct MemberHomology {
  FamilyMember member;
  int components = 0;
  // floer
  std::optional<FloerResult> floer;
  std::optional<Poly> total;  // total homology Poincare polynomial in u
  Poly floer_euler{{"t"}};
  Poly floer_expected{{"t"}};  // (t^1/2 - t^-1/2)^(l-1) * Alexander
  Poly alexander{{"t"}};
  std::string floer_skip;
  // khovanov
  std::optional<KhovanovResult> khovanov;
  Poly kh_euler{{"t"}};
  Poly unnormalized_jones{{"t"}};
  std::string khovanov_skip;
};

struct GraphHomologyReport {
  LinkFamily family;
  GraphHomologyOptions options;
  std::vector<MemberHomology> members;
  BigradedDims floer{"M", "A"};
  BigradedDims khovanov{"i", "j"};
  Poly floer_euler{{"t"}};       // sum of member hat Euler characteristics
  Poly floer_expected{{"t"}};    // sum of factor * Alexander per member
  Poly alexander_sum{{"t"}};     // plain sum of member Alexander polynomials
  Poly kh_euler{{"t"}};
  Poly jones_sum{{"t"}};         // sum of member unnormalized Jones polynomials
  std::string floer_verdict = "n/a";
  std::string khovanov_verdict = "n/a";

  bool empty_family() const { return family.members.empty(); }
  nlohmann::json to_json() const;
};

namespace detail {

inline Poly link_factor(int components) {
  Poly f = make_t(0);
  for (int i = 1; i < components; ++i) f = f * t_half_difference();
  return f;
}

inline std::uint64_t weight(const GraphHomologyOptions& opt, const FamilyMember& m) {
  return opt.multiset ? m.multiplicity : 1;
}

inline MemberHomology member_homology(const FamilyMember& m, const GraphHomologyOptions& opt) {
  MemberHomology r;
  r.member = m;
  const Diagram d = fingerprint_orientation(m.diagram);
  r.member.diagram = d;
  r.components = component_count(d);
  if (opt.floer) {
    r.alexander = alexander(d);
    r.floer_expected = link_factor(r.components) * r.alexander;
    try {
      GridDiagram g = pd_to_grid(d);
      if (g.n > opt.max_grid) {
        r.floer_skip = "floer: skipped (grid too large: n = " + std::to_string(g.n) + ")";
      } else {
        FloerOptions fo{opt.max_grid, true};
        r.floer = hfk_hat(g, fo);
        r.total = total_floer_homology(g, fo);
        r.floer_euler = graphhom::floer_euler(r.floer->hat, r.components);
      }
    } catch (const ResourceError& e) {
      r.floer_skip = std::string("floer: skipped (") + e.what() + ")";
    }
  }
  if (opt.khovanov) {
    r.unnormalized_jones = graphhom::unnormalized_jones(d);
    if (static_cast<int>(d.crossings.size()) > opt.max_crossings) {
      r.khovanov_skip = "khovanov: skipped (" + std::to_string(d.crossings.size()) +
                        " crossings exceed cap " + std::to_string(opt.max_crossings) + ")";
    } else {
      try {
        r.khovanov = khovanov_homology(d, opt.coeffs, opt.max_crossings);
        r.kh_euler = khovanov_euler(r.khovanov->dims);
      } catch (const ResourceError& e) {
        r.khovanov_skip = std::string("khovanov: skipped (") + e.what() + ")";
      }
    }
  }
  return r;
}

inline BigradedDims scaled(const BigradedDims& d, std::uint64_t k) {
  BigradedDims out(d.names().first, d.names().second);
  for (std::uint64_t i = 0; i < k; ++i) out += d;
  return out;
}

inline Poly scaled(const Poly& p, std::uint64_t k) {
  return p * make_t(0, static_cast<long long>(k));
}

}  // namespace detail

/// Adds one member's contribution to the aggregates.
inline void accumulate(GraphHomologyReport& r, const MemberHomology& m) {
  std::uint64_t w = detail::weight(r.options, m.member);
  if (m.floer) r.floer += detail::scaled(m.floer->hat, w);
  if (m.khovanov) r.khovanov += detail::scaled(m.khovanov->dims, w);
  r.floer_euler += detail::scaled(m.floer_euler, w);
  r.floer_expected += detail::scaled(m.floer_expected, w);
  r.alexander_sum += detail::scaled(m.alexander, w);
  r.kh_euler += detail::scaled(m.kh_euler, w);
  r.jones_sum += detail::scaled(m.unnormalized_jones, w);
}

/// Euler verdicts: "pass", "fail", or "partial" when a member was skipped.
inline void euler_check(GraphHomologyReport& r) {
  auto verdict = [&](bool enabled, bool skipped, bool equal) -> std::string {
    if (!enabled) return "n/a";
    if (!equal) return "fail";
    return skipped ? "partial" : "pass";
  };
  bool fskip = false, kskip = false, fbad = false, kbad = false;
  for (const auto& m : r.members) {
    fskip |= !m.floer_skip.empty();
    kskip |= !m.khovanov_skip.empty();
    if (m.floer) fbad |= m.floer_euler != m.floer_expected || !m.floer->d_squared_zero;
    if (m.khovanov) kbad |= m.kh_euler != m.unnormalized_jones || !m.khovanov->d_squared_zero;
  }
  r.floer_verdict = verdict(r.options.floer, fskip, !fbad);
  r.khovanov_verdict = verdict(r.options.khovanov, kskip, !kbad);
}

/// Floer-Kauffman and Khovanov-Kauffman homology of a graph diagram: direct
/// sums over the distinct links of its family. A link diagram is its own
/// one-member family.
inline GraphHomologyReport graph_homology(const Diagram& g, const GraphHomologyOptions& opt = {}) {
  GraphHomologyReport r;
  r.options = opt;
  FamilyOptions fo;
  fo.cap = opt.family_cap;
  fo.jobs = opt.jobs;
  r.family = family(g, fo);
  const auto& mem = r.family.members;
  r.members.resize(mem.size());
  int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(mem.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(mem.size());
  auto work = [&] {
    for (std::size_t i; (i = next++) < mem.size();) {
      try {
        r.members[i] = detail::member_homology(mem[i], opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& m : r.members) accumulate(r, m);
  euler_check(r);
  return r;
}

inline GraphHomologyReport hfg(const Diagram& g, GraphHomologyOptions opt = {}) {
  opt.floer = true;
  opt.khovanov = false;
  return graph_homology(g, opt);
}

inline GraphHomologyReport kkh_graph(const Diagram& g, GraphHomologyOptions opt = {}) {
  opt.floer = false;
  opt.khovanov = true;
  return graph_homology(g, opt);
}

inline nlohmann::json GraphHomologyReport::to_json() const {
  nlohmann::json j;
  j["source"] = graphhom::to_json(family.source);
  j["family"] = {{"assignments", family.assignments},
                 {"empty_assignments", family.empty},
                 {"members", family.members.size()},
                 {"empty_family", empty_family()}};
  j["options"] = {{"floer", options.floer},
                  {"khovanov", options.khovanov},
                  {"coeffs", options.coeffs == Coeffs::kZ ? "z" : "f2"},
                  {"max_grid", options.max_grid},
                  {"max_crossings", options.max_crossings},
                  {"multiset", options.multiset}};
  j["members"] = nlohmann::json::array();
  for (const auto& m : members) {
    nlohmann::json mj;
    mj["fingerprint"] = m.member.fingerprint.to_json();
    mj["diagram"] = graphhom::to_json(m.member.diagram);
    mj["multiplicity"] = m.member.multiplicity;
    mj["components"] = m.components;
    if (options.floer) {
      nlohmann::json f;
      if (m.floer) {
        f["grid"] = graphhom::to_json(m.floer->grid);
        f["hat"] = m.floer->hat.to_json();
        f["hat_rank"] = m.floer->hat.total_rank();
        f["total_homology"] = m.total->to_string();
        f["euler"] = m.floer_euler.to_string();
      } else {
        f["skipped"] = m.floer_skip;
      }
      f["expected_euler"] = m.floer_expected.to_string();
      f["alexander"] = m.alexander.to_string();
      mj["floer"] = f;
    }
    if (options.khovanov) {
      nlohmann::json k;
      if (m.khovanov) {
        k["dims"] = m.khovanov->dims.to_json();
        k["rank"] = m.khovanov->dims.total_rank();
        k["euler"] = m.kh_euler.to_string();
      } else {
        k["skipped"] = m.khovanov_skip;
      }
      k["unnormalized_jones"] = m.unnormalized_jones.to_string();
      mj["khovanov"] = k;
    }
    j["members"].push_back(mj);
  }
  nlohmann::json agg;
  if (options.floer) {
    agg["floer"] = {{"dims", floer.to_json()},
                    {"rank", floer.total_rank()},
                    {"poincare", floer.poincare().to_string()},
                    {"euler", floer_euler.to_string()},
                    {"expected_euler", floer_expected.to_string()},
                    {"alexander_sum", alexander_sum.to_string()},
                    {"verdict", floer_verdict}};
  }
  if (options.khovanov) {
    agg["khovanov"] = {{"dims", khovanov.to_json()},
                       {"rank", khovanov.total_rank()},
                       {"poincare", khovanov.poincare("t", "q").to_string()},
                       {"euler", kh_euler.to_string()},
                       {"jones_sum", jones_sum.to_string()},
                       {"verdict", khovanov_verdict}};
  }
  j["aggregate"] = agg;
  return j;
}

}  // namespace graphhom
