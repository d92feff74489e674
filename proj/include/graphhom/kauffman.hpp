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

#include <algorithm>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "invariants.hpp"

namespace graphhom {

class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SlotPair = std::pair<int, int>;

/// Per vertex: the pair of slots joined into a strand, or nullopt when the
/// vertex has valence <= 1 and every end is freed.
using ReplacementChoice = std::vector<std::optional<SlotPair>>;

inline std::vector<SlotPair> vertex_choices(int valence) {
  std::vector<SlotPair> out;
  for (int i = 0; i < valence; ++i) {
    for (int j = i + 1; j < valence; ++j) out.emplace_back(i, j);
  }
  return out;
}

inline std::uint64_t assignment_count(const Diagram& g) {
  std::uint64_t n = 1;
  for (const auto& v : g.vertices) {
    std::uint64_t k = v.size() * (v.size() - (v.empty() ? 0 : 1)) / 2;
    n *= std::max<std::uint64_t>(k, 1);
  }
  return n;
}

/// Joins the chosen pair at each vertex, frees the other ends, and deletes
/// every strand that ends in a free end. A surviving strand crossing a
/// deleted one is reconnected straight through.
inline Diagram apply_replacement(const Diagram& g, const ReplacementChoice& choice) {
  if (choice.size() != g.vertices.size()) {
    throw FamilyError("replacement choice covers " + std::to_string(choice.size()) +
                      " vertices, diagram has " + std::to_string(g.vertices.size()));
  }
  detail::UnionFind uf;
  for (const auto& c : g.crossings) {
    uf.unite(c.arcs[0], c.arcs[2]);
    uf.unite(c.arcs[1], c.arcs[3]);
  }
  std::vector<int> free_ends;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& slots = g.vertices[v];
    int deg = static_cast<int>(slots.size());
    const auto& ch = choice[v];
    if (deg >= 2 && !ch) throw FamilyError("vertex " + std::to_string(v) + " needs a slot pair");
    if (ch && (ch->first == ch->second || ch->first < 0 || ch->second < 0 ||
               ch->first >= deg || ch->second >= deg)) {
      throw FamilyError("invalid slot pair at vertex " + std::to_string(v));
    }
    for (int s = 0; s < deg; ++s) {
      if (ch && (s == ch->first || s == ch->second)) continue;
      free_ends.push_back(slots[s]);
    }
    if (ch) uf.unite(slots[ch->first], slots[ch->second]);
  }
  std::set<int> open;
  for (int a : free_ends) open.insert(uf.find(a));

  Diagram out;
  out.loops = g.loops;
  std::map<int, int> uses;
  std::set<int> touched;
  detail::UnionFind join;
  for (const auto& c : g.crossings) {
    bool under_open = open.count(uf.find(c.arcs[0])) > 0;
    bool over_open = open.count(uf.find(c.arcs[1])) > 0;
    if (!under_open && !over_open) {
      out.crossings.push_back(c);
      continue;
    }
    for (int a : c.arcs) touched.insert(a);
    if (!under_open) join.unite(c.arcs[0], c.arcs[2]);
    if (!over_open) join.unite(c.arcs[1], c.arcs[3]);
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (int a : g.vertices[v]) touched.insert(a);
    if (choice[v] && !open.count(uf.find(g.vertices[v][choice[v]->first]))) {
      join.unite(g.vertices[v][choice[v]->first], g.vertices[v][choice[v]->second]);
    }
  }
  for (auto& c : out.crossings) {
    for (int& a : c.arcs) {
      a = join.find(a);
      ++uses[a];
    }
  }
  std::set<int> loops;
  for (int a : touched) {
    if (open.count(uf.find(a))) continue;
    int r = join.find(a);
    if (!uses.count(r)) loops.insert(r);
  }
  out.loops += static_cast<int>(loops.size());
  out = compact_arcs(out);
  return orient_link(out);
}

struct FamilyMember {
  Diagram diagram;  // representative: fewest crossings, then least canonical code
  Fingerprint fingerprint;
  std::uint64_t multiplicity = 0;
  int variants = 1;  // distinct reduced diagrams mapped to this fingerprint
};

struct LinkFamily {
  Diagram source;
  std::uint64_t assignments = 0;
  std::uint64_t empty = 0;  // assignments producing the empty link
  std::vector<FamilyMember> members;  // sorted by fingerprint

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["assignments"] = assignments;
    j["empty_assignments"] = empty;
    j["members"] = nlohmann::json::array();
    for (const auto& m : members) {
      j["members"].push_back({{"fingerprint", m.fingerprint.to_json()},
                              {"diagram", graphhom::to_json(m.diagram)},
                              {"multiplicity", m.multiplicity},
                              {"variants", m.variants}});
    }
    return j;
  }
};

struct FamilyOptions {
  std::uint64_t cap = 1000000;
  int jobs = 1;
};

namespace detail {

inline ReplacementChoice decode_assignment(const Diagram& g, std::uint64_t idx) {
  ReplacementChoice ch(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    auto opts = vertex_choices(static_cast<int>(g.vertices[v].size()));
    if (opts.empty()) continue;
    ch[v] = opts[idx % opts.size()];
    idx /= opts.size();
  }
  return ch;
}

struct Partial {
  std::uint64_t empty = 0;
  // canonical code of the reduced member -> (representative, count)
  std::map<std::vector<int>, std::pair<Diagram, std::uint64_t>> shapes;
};

inline std::vector<int> flat_key(const Diagram& d) {
  std::vector<int> k{d.loops};
  for (const auto& c : d.crossings) {
    k.insert(k.end(), c.arcs.begin(), c.arcs.end());
    k.push_back(c.over_13);
  }
  return k;
}

/// Total order used to pick representatives independent of visit order.
inline bool better_rep(const Diagram& a, const Diagram& b) {
  if (a.crossings.size() != b.crossings.size()) return a.crossings.size() < b.crossings.size();
  auto ca = canonical_code(a), cb = canonical_code(b);
  if (ca != cb) return ca < cb;
  return flat_key(a) < flat_key(b);
}

}  // namespace detail

/// Enumerates all replacement assignments and groups the nonempty results by
/// fingerprint. Output is independent of `jobs`.
inline LinkFamily family(const Diagram& g, const FamilyOptions& opt = {}) {
  auto rep = validate(g);
  if (!rep.ok()) throw FamilyError("invalid diagram: " + rep.violations.front());
  LinkFamily fam;
  fam.source = g;
  fam.assignments = assignment_count(g);
  if (fam.assignments > opt.cap) {
    throw FamilyError("family: " + std::to_string(fam.assignments) +
                      " assignments exceed cap " + std::to_string(opt.cap));
  }
  int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(fam.assignments)));
  std::vector<detail::Partial> parts(jobs);
  auto work = [&](int w) {
    for (std::uint64_t i = w; i < fam.assignments; i += jobs) {
      Diagram l = apply_replacement(g, detail::decode_assignment(g, i));
      if (l.crossings.empty() && l.loops == 0) {
        ++parts[w].empty;
        continue;
      }
      Diagram r = reduce(l);
      auto& slot = parts[w].shapes[canonical_code(r)];
      if (slot.second == 0 || detail::better_rep(r, slot.first)) slot.first = r;
      ++slot.second;
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  detail::Partial all;
  for (auto& p : parts) {
    all.empty += p.empty;
    for (auto& [k, v] : p.shapes) {
      auto& slot = all.shapes[k];
      if (slot.second == 0 || detail::better_rep(v.first, slot.first)) slot.first = v.first;
      slot.second += v.second;
    }
  }
  fam.empty = all.empty;
  std::map<Fingerprint, FamilyMember> by_fp;
  for (const auto& [code, rc] : all.shapes) {
    Fingerprint fp = fingerprint(rc.first);
    auto it = by_fp.find(fp);
    if (it == by_fp.end()) {
      by_fp.emplace(fp, FamilyMember{rc.first, fp, rc.second, 1});
      continue;
    }
    auto& m = it->second;
    m.multiplicity += rc.second;
    ++m.variants;
    if (detail::better_rep(rc.first, m.diagram)) {
      m.diagram = rc.first;
      m.fingerprint.reduced_crossings = fp.reduced_crossings;
    }
  }
  for (auto& [fp, m] : by_fp) fam.members.push_back(std::move(m));
  return fam;
}

/// Sorted fingerprints, one per member, or repeated by multiplicity.
inline std::vector<Fingerprint> member_fingerprints(const LinkFamily& f, bool multiset = false) {
  std::vector<Fingerprint> out;
  for (const auto& m : f.members) {
    std::uint64_t k = multiset ? m.multiplicity : 1;
    for (std::uint64_t i = 0; i < k; ++i) out.push_back(m.fingerprint);
  }
  return out;
}

}  // namespace graphhom
