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
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace graphhom {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 4-valent crossing. Slots are listed counterclockwise; slots 0 and 2
/// carry the under strand, slots 1 and 3 the over strand.
///
/// In an oriented diagram slot 0 is the incoming end of the under strand
/// and `over_13` records whether the over strand runs from slot 1 to slot 3.
struct Crossing {
  std::array<int, 4> arcs{};
  bool over_13 = false;

  /// +1 for a right-handed crossing; meaningful in oriented diagrams only.
  int sign() const { return over_13 ? -1 : 1; }

  /// Whether the arc at `slot` points into the crossing (oriented diagrams).
  bool incoming(int slot) const {
    switch (slot & 3) {
      case 0: return true;
      case 1: return over_13;
      case 2: return false;
      default: return !over_13;
    }
  }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Planar diagram of an embedded graph or of a link (no vertices).
///
/// Every arc id appears in exactly two slots. Crossing-free unknotted
/// circles are counted in `loops` because PD codes cannot express them.
struct Diagram {
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> vertices;  // counterclockwise slot order
  int loops = 0;
  bool oriented = false;

  bool is_link() const { return vertices.empty(); }
  int node_count() const {
    return static_cast<int>(crossings.size() + vertices.size());
  }
  int degree(int node) const {
    return node < static_cast<int>(crossings.size())
               ? 4
               : static_cast<int>(vertices[node - crossings.size()].size());
  }
  bool is_crossing(int node) const {
    return node < static_cast<int>(crossings.size());
  }
  int arc_at(int node, int slot) const {
    int d = degree(node);
    slot = ((slot % d) + d) % d;
    return is_crossing(node) ? crossings[node].arcs[slot]
                             : vertices[node - crossings.size()][slot];
  }
  int& arc_ref(int node, int slot) {
    return is_crossing(node) ? crossings[node].arcs[slot]
                             : vertices[node - crossings.size()][slot];
  }
  int max_arc() const {
    int m = -1;
    for (const auto& c : crossings) {
      for (int a : c.arcs) m = std::max(m, a);
    }
    for (const auto& v : vertices) {
      for (int a : v) m = std::max(m, a);
    }
    return m;
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

using GraphDiagram = Diagram;
using LinkDiagram = Diagram;

/// One end of an arc: a slot of a node (crossings first, then vertices).
struct Endpoint {
  int node = -1;
  int slot = -1;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

/// Endpoints of every arc id, in order of first occurrence
/// (crossing slots in order, then vertex slots).
inline std::vector<std::vector<Endpoint>> arc_endpoints(const Diagram& d) {
  std::vector<std::vector<Endpoint>> ends(static_cast<std::size_t>(d.max_arc() + 1));
  for (int n = 0; n < d.node_count(); ++n) {
    for (int s = 0; s < d.degree(n); ++s) {
      int a = d.arc_at(n, s);
      if (a >= 0) ends[a].push_back({n, s});
    }
  }
  return ends;
}

/// The other end of the arc leaving `e`. Requires a well-formed diagram.
inline Endpoint opposite_end(const std::vector<std::vector<Endpoint>>& ends,
                             const Diagram& d, Endpoint e) {
  const auto& v = ends[d.arc_at(e.node, e.slot)];
  return v[0] == e ? v[1] : v[0];
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Diagram as read from JSON, before any invariant is enforced.
struct RawDiagram {
  std::vector<std::vector<int>> crossings;
  std::vector<std::vector<int>> vertices;
  int loops = 0;
  std::map<int, int> orientations;
};

namespace detail {

inline void check_arc_multiplicity(const std::vector<std::vector<int>>& crossings,
                                   const std::vector<std::vector<int>>& vertices,
                                   ValidationReport& rep) {
  std::map<int, int> count;
  for (const auto& c : crossings) {
    for (int a : c) ++count[a];
  }
  for (const auto& v : vertices) {
    for (int a : v) ++count[a];
  }
  for (const auto& [a, k] : count) {
    if (a < 0) rep.violations.push_back("negative arc id " + std::to_string(a));
    if (k != 2) {
      rep.violations.push_back("arc multiplicity: arc " + std::to_string(a) +
                               " appears in " + std::to_string(k) +
                               " slots (expected 2)");
    }
  }
}

}  // namespace detail

/// Checks for dangling arcs, slot-count mismatches and inconsistent
/// orientation data. For vertex-free input the PD convention (slot 0 is
/// the incoming under strand) must agree along every strand.
inline ValidationReport validate(const RawDiagram& raw) {
  ValidationReport rep;
  for (std::size_t i = 0; i < raw.crossings.size(); ++i) {
    if (raw.crossings[i].size() != 4) {
      rep.violations.push_back("slot count: crossing " + std::to_string(i) +
                               " has " + std::to_string(raw.crossings[i].size()) +
                               " slots (expected 4)");
    }
  }
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) {
    if (raw.vertices[i].empty()) {
      rep.violations.push_back("slot count: vertex " + std::to_string(i) +
                               " has no slots");
    }
  }
  if (raw.loops < 0) rep.violations.push_back("negative loop count");
  detail::check_arc_multiplicity(raw.crossings, raw.vertices, rep);
  for (const auto& [a, o] : raw.orientations) {
    if (o != 1 && o != -1) {
      rep.violations.push_back("orientation of arc " + std::to_string(a) +
                               " must be +1 or -1");
    }
  }
  if (!rep.ok() || !raw.vertices.empty()) return rep;

  // Under strands are oriented by the PD convention; each arc must be
  // incoming at exactly one end.
  std::map<int, std::pair<int, int>> in_out;  // arc -> (#incoming, #outgoing)
  for (const auto& c : raw.crossings) {
    ++in_out[c[0]].first;
    ++in_out[c[2]].second;
  }
  for (const auto& [a, io] : in_out) {
    if (io.first > 1 || io.second > 1) {
      rep.violations.push_back("inconsistent orientation: arc " + std::to_string(a) +
                               " is " + (io.first > 1 ? "incoming" : "outgoing") +
                               " under-strand at both ends");
    }
  }
  return rep;
}

inline ValidationReport validate(const Diagram& d) {
  ValidationReport rep;
  std::vector<std::vector<int>> cs;
  for (const auto& c : d.crossings) cs.emplace_back(c.arcs.begin(), c.arcs.end());
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    if (d.vertices[i].empty()) {
      rep.violations.push_back("slot count: vertex " + std::to_string(i) +
                               " has no slots");
    }
  }
  if (d.loops < 0) rep.violations.push_back("negative loop count");
  detail::check_arc_multiplicity(cs, d.vertices, rep);
  if (!rep.ok() || !d.oriented) return rep;
  if (!d.is_link()) {
    rep.violations.push_back("oriented diagram with vertices");
    return rep;
  }
  auto ends = arc_endpoints(d);
  for (std::size_t a = 0; a < ends.size(); ++a) {
    if (ends[a].empty()) continue;
    bool in0 = d.crossings[ends[a][0].node].incoming(ends[a][0].slot);
    bool in1 = d.crossings[ends[a][1].node].incoming(ends[a][1].slot);
    if (in0 == in1) {
      rep.violations.push_back("inconsistent orientation: arc " + std::to_string(a));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Orientation

/// Builds an oriented crossing from counterclockwise arms. `under_parity`
/// is 0 if arms 0/2 form the under strand, 1 if arms 1/3 do; `under_in`
/// and `over_in` are the arm indices where those strands enter.
inline Crossing make_oriented_crossing(std::array<int, 4> ccw, int under_parity,
                                       int under_in, int over_in) {
  if ((under_in & 1) != under_parity || (over_in & 1) == under_parity) {
    throw DiagramError("make_oriented_crossing: arm parity mismatch");
  }
  Crossing c;
  for (int k = 0; k < 4; ++k) c.arcs[k] = ccw[(under_in + k) & 3];
  c.over_13 = ((over_in - under_in) & 3) == 1;
  return c;
}

/// Orients a vertex-free diagram whose crossings only carry the
/// under/over slot structure. Each strand is traversed starting from its
/// smallest arc id, from that arc's first endpoint toward its second;
/// components listed in `reverse` (by that traversal order) are flipped.
inline Diagram orient_link(const Diagram& d, const std::vector<bool>& reverse = {}) {
  if (!d.is_link()) throw DiagramError("orient_link: diagram has vertices");
  Diagram out = d;
  out.oriented = true;
  auto ends = arc_endpoints(d);
  // incoming[node][slot]
  std::vector<std::array<int, 4>> incoming(d.crossings.size(), {-1, -1, -1, -1});
  std::vector<char> seen(ends.size(), 0);
  int comp = 0;
  for (std::size_t a0 = 0; a0 < ends.size(); ++a0) {
    if (ends[a0].empty() || seen[a0]) continue;
    bool flip = comp < static_cast<int>(reverse.size()) && reverse[comp];
    ++comp;
    Endpoint head = flip ? ends[a0][0] : ends[a0][1];
    int arc = static_cast<int>(a0);
    while (!seen[arc]) {
      seen[arc] = 1;
      Endpoint tail = ends[arc][0] == head ? ends[arc][1] : ends[arc][0];
      incoming[head.node][head.slot] = 1;
      incoming[tail.node][tail.slot] = 0;
      Endpoint next_tail{head.node, (head.slot + 2) & 3};
      arc = d.arc_at(next_tail.node, next_tail.slot);
      head = ends[arc][0] == next_tail ? ends[arc][1] : ends[arc][0];
    }
  }
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& inc = incoming[i];
    int under_in = inc[0] == 1 ? 0 : 2;
    int over_in = inc[1] == 1 ? 1 : 3;
    out.crossings[i] = make_oriented_crossing(d.crossings[i].arcs, 0, under_in, over_in);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Components

struct ComponentLabels {
  std::vector<int> arc_component;  // -1 for unused ids
  int traced = 0;                  // closed curves through crossings
  int count = 0;                   // traced + loops
};

/// Labels every arc of a vertex-free diagram by its component.
inline ComponentLabels split_components(const Diagram& d) {
  if (!d.is_link()) throw DiagramError("split_components: diagram has vertices");
  auto rep = validate(d);
  if (!rep.ok()) throw DiagramError("split_components: " + rep.violations.front());
  auto ends = arc_endpoints(d);
  ComponentLabels out;
  out.arc_component.assign(ends.size(), -1);
  for (std::size_t a0 = 0; a0 < ends.size(); ++a0) {
    if (ends[a0].empty() || out.arc_component[a0] >= 0) continue;
    int label = out.traced++;
    Endpoint at = ends[a0][1];
    int arc = static_cast<int>(a0);
    while (out.arc_component[arc] < 0) {
      out.arc_component[arc] = label;
      Endpoint next{at.node, (at.slot + 2) & 3};
      arc = d.arc_at(next.node, next.slot);
      at = ends[arc][0] == next ? ends[arc][1] : ends[arc][0];
    }
  }
  out.count = out.traced + d.loops;
  return out;
}

inline int component_count(const Diagram& d) { return split_components(d).count; }

/// Sum of crossing signs.
inline int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& c : d.crossings) w += c.sign();
  return w;
}

// ---------------------------------------------------------------------------
// Elementary operations

/// Relabels arcs 0..m-1 in order of first occurrence.
inline Diagram compact_arcs(const Diagram& d) {
  Diagram out = d;
  std::map<int, int> relabel;
  auto fresh = [&](int a) {
    auto [it, ins] = relabel.try_emplace(a, static_cast<int>(relabel.size()));
    return it->second;
  };
  for (auto& c : out.crossings) {
    for (int& a : c.arcs) a = fresh(a);
  }
  for (auto& v : out.vertices) {
    for (int& a : v) a = fresh(a);
  }
  return out;
}

/// Swaps over and under at every crossing. Orientation is preserved.
inline Diagram mirror(const Diagram& d) {
  Diagram out = d;
  for (auto& c : out.crossings) {
    const auto a = c.arcs;
    if (!d.oriented) {
      c.arcs = {a[1], a[2], a[3], a[0]};
    } else if (c.over_13) {
      c.arcs = {a[1], a[2], a[3], a[0]};
      c.over_13 = false;
    } else {
      c.arcs = {a[3], a[0], a[1], a[2]};
      c.over_13 = true;
    }
  }
  return out;
}

/// Reverses the orientation of every component.
inline Diagram reverse(const Diagram& d) {
  Diagram out = d;
  for (auto& c : out.crossings) {
    const auto a = c.arcs;
    c.arcs = {a[2], a[3], a[0], a[1]};
  }
  return out;
}

/// Reverses the orientation of a single component (as labelled by
/// split_components).
inline Diagram reverse_component(const Diagram& d, int component) {
  if (!d.oriented) throw DiagramError("reverse_component: unoriented diagram");
  auto labels = split_components(d);
  Diagram out = d;
  for (auto& c : out.crossings) {
    bool under = labels.arc_component[c.arcs[0]] == component;
    bool over = labels.arc_component[c.arcs[1]] == component;
    if (under) {
      const auto a = c.arcs;
      c.arcs = {a[2], a[3], a[0], a[1]};
      c.over_13 = !c.over_13;
    }
    if (over) c.over_13 = !c.over_13;
  }
  return out;
}

/// Disjoint union; arcs of `b` are shifted past those of `a`.
inline Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  if (a.oriented != b.oriented && !a.crossings.empty() && !b.crossings.empty()) {
    throw DiagramError("disjoint_union: mixed oriented/unoriented operands");
  }
  Diagram out = a;
  out.oriented = a.oriented || b.oriented;
  int shift = a.max_arc() + 1;
  for (auto c : b.crossings) {
    for (int& x : c.arcs) x += shift;
    out.crossings.push_back(c);
  }
  for (auto v : b.vertices) {
    for (int& x : v) x += shift;
    out.vertices.push_back(v);
  }
  out.loops += b.loops;
  return out;
}

/// Oriented connected sum joining the component through arc `arc_a` of `a`
/// with the component through arc `arc_b` of `b`. Both diagrams must be
/// oriented links and the arcs must pass through crossings.
inline Diagram connected_sum(const Diagram& a, int arc_a, const Diagram& b, int arc_b) {
  if (!a.oriented || !b.oriented) throw DiagramError("connected_sum: unoriented operand");
  Diagram out = disjoint_union(a, b);
  arc_b += a.max_arc() + 1;
  auto ends = arc_endpoints(out);
  auto head_of = [&](int arc) -> Endpoint {
    if (arc < 0 || arc >= static_cast<int>(ends.size()) || ends[arc].size() != 2) {
      throw DiagramError("connected_sum: arc " + std::to_string(arc) +
                         " does not pass through crossings");
    }
    for (const auto& e : ends[arc]) {
      if (out.crossings[e.node].incoming(e.slot)) return e;
    }
    throw DiagramError("connected_sum: arc without head");
  };
  Endpoint ha = head_of(arc_a), hb = head_of(arc_b);
  // tail_a -> head_b keeps id arc_a; tail_b -> head_a keeps id arc_b.
  out.arc_ref(ha.node, ha.slot) = arc_b;
  out.arc_ref(hb.node, hb.slot) = arc_a;
  return compact_arcs(out);
}

// ---------------------------------------------------------------------------
// Faces

/// A face is the cyclic list of darts (node, slot) with the face on the
/// left of each dart.
using Face = std::vector<Endpoint>;

inline std::vector<Face> faces(const Diagram& d) {
  auto ends = arc_endpoints(d);
  std::map<Endpoint, bool> used;
  std::vector<Face> out;
  for (int n = 0; n < d.node_count(); ++n) {
    for (int s = 0; s < d.degree(n); ++s) {
      Endpoint start{n, s};
      if (used[start]) continue;
      Face f;
      Endpoint cur = start;
      while (!used[cur]) {
        used[cur] = true;
        f.push_back(cur);
        Endpoint far = opposite_end(ends, d, cur);
        int deg = d.degree(far.node);
        cur = {far.node, (far.slot + deg - 1) % deg};
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace detail {

inline std::vector<int> rooted_code(const Diagram& d,
                                    const std::vector<std::vector<Endpoint>>& ends,
                                    Endpoint root, std::vector<int>* visited_nodes) {
  std::vector<int> label(d.node_count(), -1), entry(d.node_count(), 0);
  std::vector<int> order;
  std::vector<int> code;
  label[root.node] = 0;
  entry[root.node] = root.slot;
  order.push_back(root.node);
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int n = order[qi];
    int deg = d.degree(n);
    int base = entry[n];
    code.push_back(d.is_crossing(n) ? -1 : -2 - deg);
    if (d.is_crossing(n)) {
      code.push_back(base & 1);
      if (d.oriented) code.push_back(d.crossings[n].incoming(base) ? 1 : 0);
      if (d.oriented) code.push_back(d.crossings[n].incoming(base + 1) ? 1 : 0);
    }
    for (int k = 0; k < deg; ++k) {
      Endpoint far = opposite_end(ends, d, {n, (base + k) % deg});
      if (label[far.node] < 0) {
        label[far.node] = static_cast<int>(order.size());
        entry[far.node] = far.slot;
        order.push_back(far.node);
      }
      int fdeg = d.degree(far.node);
      code.push_back(label[far.node]);
      code.push_back(((far.slot - entry[far.node]) % fdeg + fdeg) % fdeg);
    }
  }
  if (visited_nodes) *visited_nodes = order;
  return code;
}

}  // namespace detail

/// Canonical encoding invariant under arc and node relabelling. Two
/// diagrams are isomorphic (as embedded, over/under-decorated maps) iff
/// their canonical codes agree.
inline std::vector<int> canonical_code(const Diagram& d) {
  auto ends = arc_endpoints(d);
  std::vector<int> piece_of(d.node_count(), -1);
  std::vector<std::vector<int>> pieces;
  for (int n = 0; n < d.node_count(); ++n) {
    if (piece_of[n] >= 0) continue;
    std::vector<int> nodes;
    if (d.degree(n) == 0) {
      nodes = {n};
    } else {
      detail::rooted_code(d, ends, {n, 0}, &nodes);
    }
    std::vector<int> best;
    for (int m : nodes) {
      piece_of[m] = static_cast<int>(pieces.size());
      for (int s = 0; s < d.degree(m); ++s) {
        auto c = detail::rooted_code(d, ends, {m, s}, nullptr);
        if (best.empty() || c < best) best = std::move(c);
      }
    }
    if (nodes.size() == 1 && d.degree(n) == 0) best = {-2};
    pieces.push_back(std::move(best));
  }
  std::sort(pieces.begin(), pieces.end());
  std::vector<int> out{d.loops, d.oriented ? 1 : 0, static_cast<int>(pieces.size())};
  for (const auto& p : pieces) {
    out.push_back(static_cast<int>(p.size()));
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

inline bool isomorphic(const Diagram& a, const Diagram& b) {
  return canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------------------
// JSON interchange: {"crossings":[[a,b,c,d],...], "vertices":[[...],...],
// "loops":n, "orientations":{"arc":+-1}}

inline RawDiagram raw_from_json(const nlohmann::json& j) {
  RawDiagram raw;
  if (!j.is_object()) throw DiagramError("diagram JSON must be an object");
  if (j.contains("crossings")) raw.crossings = j.at("crossings").get<std::vector<std::vector<int>>>();
  if (j.contains("vertices")) raw.vertices = j.at("vertices").get<std::vector<std::vector<int>>>();
  if (j.contains("loops")) raw.loops = j.at("loops").get<int>();
  if (j.contains("orientations")) {
    for (const auto& [k, v] : j.at("orientations").items()) {
      raw.orientations[std::stoi(k)] = v.get<int>();
    }
  }
  return raw;
}

/// Builds a diagram from validated raw data. Vertex-free input is oriented:
/// under strands follow the PD convention, over strands follow the
/// `orientations` map (+1: from first occurrence to second occurrence) or,
/// failing that, propagation along the strand; strands that never pass
/// under default to running from slot 1 to slot 3 at their first crossing.
inline Diagram diagram_from_raw(const RawDiagram& raw) {
  auto rep = validate(raw);
  if (!rep.ok()) throw DiagramError(rep.violations.front());
  Diagram d;
  for (const auto& c : raw.crossings) d.crossings.push_back({{c[0], c[1], c[2], c[3]}, false});
  d.vertices = raw.vertices;
  d.loops = raw.loops;
  if (!d.is_link()) return d;

  auto ends = arc_endpoints(d);
  // direction[arc]: endpoint index (0/1 into ends[arc]) that is the head.
  std::vector<int> head(ends.size(), -1);
  auto set_head = [&](int arc, Endpoint e) {
    int idx = ends[arc][0] == e ? 0 : 1;
    if (head[arc] >= 0 && head[arc] != idx) {
      throw DiagramError("inconsistent orientation at arc " + std::to_string(arc));
    }
    head[arc] = idx;
  };
  auto set_tail = [&](int arc, Endpoint e) {
    int idx = ends[arc][0] == e ? 1 : 0;
    if (head[arc] >= 0 && head[arc] != idx) {
      throw DiagramError("inconsistent orientation at arc " + std::to_string(arc));
    }
    head[arc] = idx;
  };
  for (const auto& [a, o] : raw.orientations) {
    if (a >= 0 && a < static_cast<int>(ends.size()) && !ends[a].empty()) {
      head[a] = o > 0 ? 1 : 0;
    }
  }
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    int n = static_cast<int>(i);
    set_head(d.crossings[i].arcs[0], {n, 0});
    set_tail(d.crossings[i].arcs[2], {n, 2});
  }
  auto is_head = [&](int arc, Endpoint e) { return ends[arc][head[arc]] == e; };
  for (;;) {
    bool changed = false;
    int pending = -1;
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
      int n = static_cast<int>(i);
      int a1 = d.crossings[i].arcs[1], a3 = d.crossings[i].arcs[3];
      bool k1 = head[a1] >= 0, k3 = head[a3] >= 0;
      if (k1 && k3) continue;
      if (k1) {
        bool in1 = is_head(a1, {n, 1});
        in1 ? set_tail(a3, {n, 3}) : set_head(a3, {n, 3});
        changed = true;
      } else if (k3) {
        bool in3 = is_head(a3, {n, 3});
        in3 ? set_tail(a1, {n, 1}) : set_head(a1, {n, 1});
        changed = true;
      } else if (pending < 0) {
        pending = n;
      }
    }
    if (changed) continue;
    if (pending < 0) break;
    set_head(d.crossings[pending].arcs[1], {pending, 1});
  }
  d.oriented = true;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    int n = static_cast<int>(i);
    bool in1 = is_head(d.crossings[i].arcs[1], {n, 1});
    bool in3 = is_head(d.crossings[i].arcs[3], {n, 3});
    if (in1 == in3) {
      throw DiagramError("inconsistent orientation at crossing " + std::to_string(i));
    }
    d.crossings[i].over_13 = in1;
  }
  return d;
}

inline Diagram diagram_from_json(const nlohmann::json& j) {
  return diagram_from_raw(raw_from_json(j));
}

inline nlohmann::json to_json(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : d.crossings) j["crossings"].push_back(c.arcs);
  j["vertices"] = d.vertices;
  j["loops"] = d.loops;
  nlohmann::json o = nlohmann::json::object();
  if (d.oriented) {
    auto ends = arc_endpoints(d);
    for (std::size_t a = 0; a < ends.size(); ++a) {
      if (ends[a].empty()) continue;
      const auto& e0 = ends[a][0];
      bool first_is_tail = !d.crossings[e0.node].incoming(e0.slot);
      o[std::to_string(a)] = first_is_tail ? 1 : -1;
    }
  }
  j["orientations"] = o;
  return j;
}

}  // namespace graphhom
