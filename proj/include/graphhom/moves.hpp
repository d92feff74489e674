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
#include <random>
#include <set>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace graphhom {

/// Reidemeister moves R1-R3 and the topological-vertex moves: R4 slides a
/// strand across a vertex, R5 twists two adjacent edges at a vertex.
enum class MoveKind {
  kR1Add,
  kR1Remove,
  kR2Add,
  kR2Remove,
  kR3,
  kR4Slide,
  kR5Twist,
  kR5Untwist,
};

inline std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::kR1Add: return "R1+";
    case MoveKind::kR1Remove: return "R1-";
    case MoveKind::kR2Add: return "R2+";
    case MoveKind::kR2Remove: return "R2-";
    case MoveKind::kR3: return "R3";
    case MoveKind::kR4Slide: return "R4";
    case MoveKind::kR5Twist: return "R5+";
    case MoveKind::kR5Untwist: return "R5-";
  }
  return "?";
}

/// Where a move applies. Argument layout per kind:
///   R1+  {arc or -1 for a crossing-free loop, side (0 left, 1 right), first pass over (0/1)}
///   R1-  {crossing}
///   R2+  {node_e, slot_e, node_f, slot_f, e over (0/1)}; both darts on one face
///   R2-  {crossing, crossing}
///   R3   {crossing, crossing, crossing} bounding a triangular face
///   R4   {vertex node, first slot, count}
///   R5+  {vertex node, slot, edge at slot goes over (0/1)}
///   R5-  {crossing, vertex node}
struct MoveSite {
  MoveKind kind{};
  std::vector<int> args;
  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

class MoveError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

namespace detail {

/// Head endpoint of an arc: incoming slot in oriented diagrams, second
/// occurrence otherwise.
inline Endpoint arc_head(const Diagram& d, const std::vector<std::vector<Endpoint>>& ends,
                         int arc) {
  const auto& e = ends.at(arc);
  if (d.oriented) {
    for (const auto& x : e) {
      if (d.crossings[x.node].incoming(x.slot)) return x;
    }
    throw MoveError("arc without head");
  }
  return e[1];
}

class UnionFind {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) return x;
    int r = find(it->second);
    parent_[x] = r;
    return r;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::map<int, int> parent_;
};

/// Deletes the given crossings and identifies arcs in each merge group.
/// Identified arcs that no longer touch any slot become crossing-free loops,
/// except those listed in `discard` (kinks that vanish with their crossing).
inline Diagram remove_and_merge(const Diagram& d, const std::vector<int>& drop,
                                const std::vector<std::vector<int>>& groups,
                                const std::vector<int>& discard = {}) {
  UnionFind uf;
  for (const auto& g : groups) {
    for (std::size_t i = 1; i < g.size(); ++i) uf.unite(g[0], g[i]);
  }
  std::set<int> dropped(drop.begin(), drop.end());
  Diagram out;
  out.oriented = d.oriented;
  out.loops = d.loops;
  std::map<int, int> uses;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    if (dropped.count(static_cast<int>(i))) continue;
    Crossing c = d.crossings[i];
    for (int& a : c.arcs) {
      a = uf.find(a);
      ++uses[a];
    }
    out.crossings.push_back(c);
  }
  for (auto v : d.vertices) {
    for (int& a : v) {
      a = uf.find(a);
      ++uses[a];
    }
    out.vertices.push_back(v);
  }
  std::set<int> orphan;
  for (int i : dropped) {
    for (int a : d.crossings[i].arcs) {
      if (std::find(discard.begin(), discard.end(), a) != discard.end()) continue;
      int r = uf.find(a);
      if (!uses.count(r)) orphan.insert(r);
    }
  }
  for (const auto& [a, k] : uses) {
    if (k != 2) throw MoveError("rewiring left arc " + std::to_string(a) + " with " +
                                std::to_string(k) + " ends");
  }
  out.loops += static_cast<int>(orphan.size());
  return compact_arcs(out);
}

inline int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Site checks

/// Returns an empty string if `s` matches its local pattern in `d`,
/// otherwise a description of the failed check.
inline std::string check_site(const Diagram& d, const MoveSite& s);

namespace detail {

struct BigonMatch {
  int c1, c2;
  int s1, t2;  // x leaves c1 at s1, arrives at c2 at t2
  int s2, t1;  // y leaves c2 at s2, arrives at c1 at t1
};

inline std::optional<BigonMatch> find_bigon(const Diagram& d, int a, int b) {
  if (a == b || !d.is_crossing(a) || !d.is_crossing(b)) return std::nullopt;
  auto ends = arc_endpoints(d);
  for (int s1 = 0; s1 < 4; ++s1) {
    Endpoint far = opposite_end(ends, d, {a, s1});
    if (far.node != b) continue;
    int t2 = far.slot;
    int s2 = mod(t2 - 1, 4);
    Endpoint back = opposite_end(ends, d, {b, s2});
    if (back.node != a || back.slot != mod(s1 + 1, 4)) continue;
    if ((s1 & 1) != (t2 & 1)) continue;  // one strand must be over at both
    return BigonMatch{a, b, s1, t2, s2, back.slot};
  }
  return std::nullopt;
}

struct TriangleMatch {
  std::array<int, 3> c;   // crossings in face order
  std::array<int, 3> s;   // dart slot leaving c[k]
  std::array<int, 3> t;   // slot where that arc arrives at c[k+1]
};

inline std::optional<TriangleMatch> find_triangle(const Diagram& d, std::array<int, 3> want) {
  std::sort(want.begin(), want.end());
  if (want[0] == want[1] || want[1] == want[2]) return std::nullopt;
  for (int x : want) {
    if (x < 0 || !d.is_crossing(x)) return std::nullopt;
  }
  auto ends = arc_endpoints(d);
  for (const auto& f : faces(d)) {
    if (f.size() != 3) continue;
    std::array<int, 3> nodes{f[0].node, f[1].node, f[2].node};
    auto sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != want) continue;
    TriangleMatch m;
    bool stacked = false;
    for (int k = 0; k < 3; ++k) {
      m.c[k] = f[k].node;
      m.s[k] = f[k].slot;
      Endpoint far = opposite_end(ends, d, f[k]);
      if (far.node != f[(k + 1) % 3].node) return std::nullopt;
      m.t[k] = far.slot;
      if ((m.s[k] & 1) && (m.t[k] & 1)) stacked = true;
    }
    if (!stacked) continue;
    // outer arcs must differ from the triangle's sides
    std::set<int> sides;
    for (int k = 0; k < 3; ++k) sides.insert(d.arc_at(m.c[k], m.s[k]));
    bool clean = true;
    for (int k = 0; k < 3; ++k) {
      int o1 = d.arc_at(m.c[k], m.s[k] + 2);
      int o2 = d.arc_at(m.c[(k + 1) % 3], m.t[k] + 2);
      if (sides.count(o1) || sides.count(o2)) clean = false;
    }
    if (clean) return m;
  }
  return std::nullopt;
}

struct SlideMatch {
  int vertex;        // node index
  int first, count;  // slots first .. first+count-1 (mod degree)
  std::vector<int> cross, inner_slot;
  bool strand_over;
  int p, q;          // strand arcs entering from the clockwise side / leaving on the ccw side
};

inline std::optional<SlideMatch> find_slide(const Diagram& d, int node, int first, int count,
                                            std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why) *why = w;
    return std::nullopt;
  };
  if (node < 0 || node >= d.node_count() || d.is_crossing(node)) return fail("not a vertex");
  int deg = d.degree(node);
  if (count < 1 || count >= deg) return fail("slide count out of range");
  auto ends = arc_endpoints(d);
  SlideMatch m{node, mod(first, deg), count, {}, {}, false, -1, -1};
  std::set<int> involved;
  for (int j = 0; j < count; ++j) {
    Endpoint far = opposite_end(ends, d, {node, mod(first + j, deg)});
    if (!d.is_crossing(far.node)) return fail("edge does not reach a crossing");
    m.cross.push_back(far.node);
    m.inner_slot.push_back(far.slot);
    bool over = (far.slot & 1) == 0;  // edge under means strand over
    if (j == 0) m.strand_over = over;
    if (over != m.strand_over) return fail("strand changes level across the vertex");
  }
  std::set<int> cs(m.cross.begin(), m.cross.end());
  if (static_cast<int>(cs.size()) != count) return fail("repeated crossing");
  for (int j = 0; j + 1 < count; ++j) {
    int a = d.arc_at(m.cross[j], m.inner_slot[j] + 3);
    int b = d.arc_at(m.cross[j + 1], m.inner_slot[j + 1] + 1);
    if (a != b) return fail("crossings not consecutive along the strand");
    involved.insert(a);
  }
  for (int j = 0; j < count; ++j) {
    involved.insert(d.arc_at(node, first + j));
    involved.insert(d.arc_at(m.cross[j], m.inner_slot[j] + 2));
  }
  m.p = d.arc_at(m.cross.front(), m.inner_slot.front() + 1);
  m.q = d.arc_at(m.cross.back(), m.inner_slot.back() + 3);
  if (m.p == m.q) return fail("strand closes around the vertex");
  if (involved.count(m.p) || involved.count(m.q)) return fail("strand arcs overlap the edges");
  for (int arc : {m.p, m.q}) {
    for (const auto& e : ends[arc]) {
      if (e.node == node) return fail("strand touches the vertex");
    }
  }
  return m;
}

}  // namespace detail

inline std::string check_site(const Diagram& d, const MoveSite& s) {
  const auto& a = s.args;
  auto need = [&](std::size_t n) { return a.size() == n; };
  switch (s.kind) {
    case MoveKind::kR1Add: {
      if (!need(3)) return "R1+: expected 3 arguments";
      if (a[0] == -1) return d.loops > 0 ? "" : "R1+: no crossing-free loop";
      auto ends = arc_endpoints(d);
      if (a[0] < 0 || a[0] >= static_cast<int>(ends.size()) || ends[a[0]].size() != 2) {
        return "R1+: arc " + std::to_string(a[0]) + " not present";
      }
      return "";
    }
    case MoveKind::kR1Remove: {
      if (!need(1) || a[0] < 0 || a[0] >= static_cast<int>(d.crossings.size())) {
        return "R1-: crossing index out of range";
      }
      const auto& c = d.crossings[a[0]].arcs;
      for (int k = 0; k < 4; ++k) {
        if (c[k] == c[(k + 1) % 4]) return "";
      }
      return "R1-: crossing " + std::to_string(a[0]) + " has no kink (adjacent slots differ)";
    }
    case MoveKind::kR2Add: {
      if (!need(5)) return "R2+: expected 5 arguments";
      if (a[0] < 0 || a[0] >= d.node_count() || a[2] < 0 || a[2] >= d.node_count()) {
        return "R2+: node out of range";
      }
      if (d.arc_at(a[0], a[1]) == d.arc_at(a[2], a[3])) return "R2+: darts share an arc";
      for (const auto& f : faces(d)) {
        bool e = false, g = false;
        for (const auto& x : f) {
          e |= x == Endpoint{a[0], detail::mod(a[1], d.degree(a[0]))};
          g |= x == Endpoint{a[2], detail::mod(a[3], d.degree(a[2]))};
        }
        if (e && g) return "";
        if (e || g) return "R2+: darts are not on a common face";
      }
      return "R2+: dart not found";
    }
    case MoveKind::kR2Remove:
      if (!need(2)) return "R2-: expected 2 arguments";
      if (a[0] < 0 || a[1] < 0 || a[0] >= static_cast<int>(d.crossings.size()) ||
          a[1] >= static_cast<int>(d.crossings.size())) {
        return "R2-: crossing index out of range";
      }
      if (detail::find_bigon(d, a[0], a[1]) || detail::find_bigon(d, a[1], a[0])) return "";
      return "R2-: crossings do not bound a removable bigon";
    case MoveKind::kR3:
      if (!need(3)) return "R3: expected 3 arguments";
      if (detail::find_triangle(d, {a[0], a[1], a[2]})) return "";
      return "R3: crossings do not bound a stacked triangular face";
    case MoveKind::kR4Slide: {
      if (!need(3)) return "R4: expected 3 arguments";
      std::string why;
      if (detail::find_slide(d, a[0], a[1], a[2], &why)) return "";
      return "R4: " + why;
    }
    case MoveKind::kR5Twist:
      if (!need(3)) return "R5+: expected 3 arguments";
      if (a[0] < 0 || a[0] >= d.node_count() || d.is_crossing(a[0])) return "R5+: not a vertex";
      if (d.degree(a[0]) < 2) return "R5+: vertex valence below 2";
      return "";
    case MoveKind::kR5Untwist: {
      if (!need(2)) return "R5-: expected 2 arguments";
      if (a[0] < 0 || a[0] >= static_cast<int>(d.crossings.size())) return "R5-: bad crossing";
      if (a[1] < 0 || a[1] >= d.node_count() || d.is_crossing(a[1])) return "R5-: not a vertex";
      auto ends = arc_endpoints(d);
      int deg = d.degree(a[1]);
      for (int m = 0; m < 4; ++m) {
        Endpoint e1 = opposite_end(ends, d, {a[0], m});
        Endpoint e2 = opposite_end(ends, d, {a[0], m + 1 == 4 ? 0 : m + 1});
        if (e1.node == a[1] && e2.node == a[1] && e2.slot == detail::mod(e1.slot - 1, deg)) {
          return "";
        }
      }
      return "R5-: crossing is not a twist at the vertex";
    }
  }
  return "unknown move";
}

/// Rewrites `d` at site `s`. Throws MoveError naming the failed check when
/// the site does not match.
inline Diagram apply_move(const Diagram& d, const MoveSite& s) {
  if (auto why = check_site(d, s); !why.empty()) throw MoveError(why);
  const auto& a = s.args;
  auto ends = arc_endpoints(d);
  int fresh = d.max_arc() + 1;
  switch (s.kind) {
    case MoveKind::kR1Add: {
      Diagram out = d;
      int a1, a2;
      if (a[0] == -1) {
        --out.loops;
        a1 = a2 = fresh++;
      } else {
        a1 = a[0];
        a2 = fresh++;
        Endpoint head = detail::arc_head(d, ends, a[0]);
        out.arc_ref(head.node, head.slot) = a2;
      }
      int l = fresh++;
      bool left = a[1] == 0, first_over = a[2] != 0;
      // arms counterclockwise from the exit of the first pass: E, N, W, S
      std::array<int, 4> arms = left ? std::array<int, 4>{l, l, a1, a2}
                                     : std::array<int, 4>{l, a2, a1, l};
      int second_in = left ? 1 : 3;
      Crossing c = first_over ? make_oriented_crossing(arms, 1, second_in, 2)
                              : make_oriented_crossing(arms, 0, 2, second_in);
      out.crossings.push_back(c);
      return compact_arcs(out);
    }
    case MoveKind::kR1Remove: {
      const auto& c = d.crossings[a[0]].arcs;
      for (int k = 0; k < 4; ++k) {
        if (c[k] == c[(k + 1) % 4]) {
          return detail::remove_and_merge(d, {a[0]}, {{c[(k + 2) % 4], c[(k + 3) % 4]}}, {c[k]});
        }
      }
      break;
    }
    case MoveKind::kR2Add: {
      Diagram out = d;
      int deg_e = d.degree(a[0]), deg_f = d.degree(a[2]);
      Endpoint es{a[0], detail::mod(a[1], deg_e)}, fs{a[2], detail::mod(a[3], deg_f)};
      int e = d.arc_at(es.node, es.slot), f = d.arc_at(fs.node, fs.slot);
      Endpoint ee = opposite_end(ends, d, es), fe = opposite_end(ends, d, fs);
      bool e_fwd = detail::arc_head(d, ends, e) == ee;
      bool f_fwd = detail::arc_head(d, ends, f) == fe;
      int e2 = fresh++, em = fresh++, f2 = fresh++, fm = fresh++;
      out.arc_ref(ee.node, ee.slot) = e2;
      out.arc_ref(fe.node, fe.slot) = f2;
      bool e_over = a[4] != 0;
      int under_parity = e_over ? 0 : 1;
      // P: [E=fM, N=eM, W=f2, S=e1]; Q: [E=f1, N=eM, W=fM, S=e2]
      std::array<int, 4> p_arms{fm, em, f2, e}, q_arms{f, em, fm, e2};
      int p_e_in = e_fwd ? 3 : 1, q_e_in = e_fwd ? 1 : 3;
      int p_f_in = f_fwd ? 0 : 2, q_f_in = f_fwd ? 0 : 2;
      auto build = [&](std::array<int, 4> arms, int e_in, int f_in) {
        return e_over ? make_oriented_crossing(arms, under_parity, f_in, e_in)
                      : make_oriented_crossing(arms, under_parity, e_in, f_in);
      };
      out.crossings.push_back(build(p_arms, p_e_in, p_f_in));
      out.crossings.push_back(build(q_arms, q_e_in, q_f_in));
      return compact_arcs(out);
    }
    case MoveKind::kR2Remove: {
      auto m = detail::find_bigon(d, a[0], a[1]);
      if (!m) m = detail::find_bigon(d, a[1], a[0]);
      int x = d.arc_at(m->c1, m->s1), y = d.arc_at(m->c2, m->s2);
      int xo1 = d.arc_at(m->c1, m->s1 + 2), xo2 = d.arc_at(m->c2, m->t2 + 2);
      int yo2 = d.arc_at(m->c2, m->s2 + 2), yo1 = d.arc_at(m->c1, m->t1 + 2);
      return detail::remove_and_merge(d, {m->c1, m->c2}, {{xo1, x, xo2}, {yo1, y, yo2}});
    }
    case MoveKind::kR3: {
      auto m = *detail::find_triangle(d, {a[0], a[1], a[2]});
      Diagram out = d;
      for (int k = 0; k < 3; ++k) {
        int p = m.c[k], q = m.c[(k + 1) % 3];
        int x = d.arc_at(p, m.s[k]);
        int op = d.arc_at(p, m.s[k] + 2), oq = d.arc_at(q, m.t[k] + 2);
        out.arc_ref(p, (m.s[k] + 2) & 3) = x;
        out.arc_ref(p, m.s[k]) = oq;
        out.arc_ref(q, (m.t[k] + 2) & 3) = x;
        out.arc_ref(q, m.t[k]) = op;
      }
      return compact_arcs(out);
    }
    case MoveKind::kR4Slide: {
      auto m = *detail::find_slide(d, a[0], a[1], a[2], nullptr);
      int deg = d.degree(m.vertex);
      Diagram out = d;
      std::vector<int> drop = m.cross;
      std::sort(drop.begin(), drop.end(), std::greater<>());
      int vnode = m.vertex;
      auto& vslots = out.vertices[vnode - d.crossings.size()];
      for (int j = 0; j < m.count; ++j) {
        vslots[detail::mod(m.first + j, deg)] = d.arc_at(m.cross[j], m.inner_slot[j] + 2);
      }
      // new crossings on slots first-1, first-2, ..., first+count
      int prev = m.p;
      std::vector<Crossing> added;
      int others = deg - m.count;
      for (int step = 0; step < others; ++step) {
        int slot = detail::mod(m.first - 1 - step, deg);
        int z = d.arc_at(vnode, slot);
        int inner = fresh++;
        int next = step + 1 == others ? m.q : fresh++;
        vslots[slot] = inner;
        std::array<int, 4> arms{inner, next, z, prev};
        added.push_back(m.strand_over ? make_oriented_crossing(arms, 0, 0, 1)
                                      : make_oriented_crossing(arms, 1, 1, 0));
        prev = next;
      }
      // the edge arcs z keep their ids at the far end, but an edge that
      // returns to this vertex inside the rewired range has both its vertex
      // slots replaced; z then lives only between two new crossings.
      for (int idx : drop) out.crossings.erase(out.crossings.begin() + idx);
      for (const auto& c : added) out.crossings.push_back(c);
      return compact_arcs(out);
    }
    case MoveKind::kR5Twist: {
      Diagram out = d;
      int deg = d.degree(a[0]);
      int i = detail::mod(a[1], deg), j = detail::mod(a[1] + 1, deg);
      int ea = d.arc_at(a[0], i), eb = d.arc_at(a[0], j);
      int ap = fresh++, bp = fresh++;
      auto& v = out.vertices[a[0] - d.crossings.size()];
      v[i] = bp;
      v[j] = ap;
      std::array<int, 4> arms{ea, eb, ap, bp};
      out.crossings.push_back(a[2] ? make_oriented_crossing(arms, 1, 1, 0)
                                   : make_oriented_crossing(arms, 0, 0, 1));
      return compact_arcs(out);
    }
    case MoveKind::kR5Untwist: {
      int deg = d.degree(a[1]);
      for (int m = 0; m < 4; ++m) {
        Endpoint e1 = opposite_end(ends, d, {a[0], m});
        Endpoint e2 = opposite_end(ends, d, {a[0], (m + 1) & 3});
        if (!(e1.node == a[1] && e2.node == a[1] &&
              e2.slot == detail::mod(e1.slot - 1, deg))) {
          continue;
        }
        int outer_a = d.arc_at(a[0], m + 2), outer_b = d.arc_at(a[0], m + 3);
        Diagram out = d;
        auto& v = out.vertices[a[1] - d.crossings.size()];
        v[e2.slot] = outer_a;
        v[e1.slot] = outer_b;
        out.crossings.erase(out.crossings.begin() + a[0]);
        return compact_arcs(out);
      }
      break;
    }
  }
  throw MoveError("move could not be applied");
}

// ---------------------------------------------------------------------------
// Site enumeration and random sequences

/// All sites of moves that do not add crossings, plus R3 and R4.
inline std::vector<MoveSite> simplifying_sites(const Diagram& d) {
  std::vector<MoveSite> out;
  int nc = static_cast<int>(d.crossings.size());
  for (int c = 0; c < nc; ++c) {
    MoveSite s{MoveKind::kR1Remove, {c}};
    if (check_site(d, s).empty()) out.push_back(s);
  }
  for (int c1 = 0; c1 < nc; ++c1) {
    for (int c2 = c1 + 1; c2 < nc; ++c2) {
      MoveSite s{MoveKind::kR2Remove, {c1, c2}};
      if (check_site(d, s).empty()) out.push_back(s);
    }
  }
  for (int n = nc; n < d.node_count(); ++n) {
    for (int c = 0; c < nc; ++c) {
      MoveSite s{MoveKind::kR5Untwist, {c, n}};
      if (check_site(d, s).empty()) out.push_back(s);
    }
  }
  return out;
}

inline std::vector<MoveSite> r3_sites(const Diagram& d) {
  std::vector<MoveSite> out;
  for (const auto& f : faces(d)) {
    if (f.size() != 3) continue;
    std::array<int, 3> c{f[0].node, f[1].node, f[2].node};
    if (!d.is_crossing(c[0]) || !d.is_crossing(c[1]) || !d.is_crossing(c[2])) continue;
    if (detail::find_triangle(d, c)) {
      std::sort(c.begin(), c.end());
      MoveSite s{MoveKind::kR3, {c[0], c[1], c[2]}};
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
  return out;
}

inline std::vector<MoveSite> r4_sites(const Diagram& d) {
  std::vector<MoveSite> out;
  for (int n = static_cast<int>(d.crossings.size()); n < d.node_count(); ++n) {
    int deg = d.degree(n);
    for (int first = 0; first < deg; ++first) {
      for (int k = 1; k < deg; ++k) {
        if (detail::find_slide(d, n, first, k, nullptr)) {
          out.push_back({MoveKind::kR4Slide, {n, first, k}});
        }
      }
    }
  }
  return out;
}

/// Greedily applies R1-, R2- and R5- until none applies.
inline Diagram reduce(Diagram d) {
  for (;;) {
    auto sites = simplifying_sites(d);
    if (sites.empty()) return d;
    d = apply_move(d, sites.front());
  }
}

/// Draws one random applicable move. Crossing-adding moves are chosen with
/// lower probability once the diagram has grown past `soft_cap` crossings.
inline MoveSite random_site(const Diagram& d, std::mt19937_64& rng, int soft_cap = 12) {
  std::vector<MoveSite> pool;
  auto add = [&](const std::vector<MoveSite>& v) { pool.insert(pool.end(), v.begin(), v.end()); };
  add(simplifying_sites(d));
  add(r3_sites(d));
  add(r4_sites(d));
  std::uniform_int_distribution<int> coin(0, 99);
  bool grow = static_cast<int>(d.crossings.size()) < soft_cap || pool.empty() || coin(rng) < 15;
  if (grow || pool.empty()) {
    std::vector<MoveSite> ins;
    auto ends = arc_endpoints(d);
    for (std::size_t arc = 0; arc < ends.size(); ++arc) {
      if (ends[arc].size() != 2) continue;
      ins.push_back({MoveKind::kR1Add, {static_cast<int>(arc), static_cast<int>(coin(rng) & 1),
                                        static_cast<int>((coin(rng) >> 1) & 1)}});
    }
    if (d.loops > 0) ins.push_back({MoveKind::kR1Add, {-1, 0, 1}});
    for (const auto& f : faces(d)) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) {
          if (i == j) continue;
          if (d.arc_at(f[i].node, f[i].slot) == d.arc_at(f[j].node, f[j].slot)) continue;
          ins.push_back({MoveKind::kR2Add, {f[i].node, f[i].slot, f[j].node, f[j].slot,
                                            static_cast<int>(coin(rng) & 1)}});
        }
      }
    }
    for (int n = static_cast<int>(d.crossings.size()); n < d.node_count(); ++n) {
      if (d.degree(n) < 2) continue;
      for (int s = 0; s < d.degree(n); ++s) {
        ins.push_back({MoveKind::kR5Twist, {n, s, static_cast<int>(coin(rng) & 1)}});
      }
    }
    if (!ins.empty() && (pool.empty() || coin(rng) < 50)) {
      std::uniform_int_distribution<std::size_t> pick(0, ins.size() - 1);
      return ins[pick(rng)];
    }
  }
  if (pool.empty()) throw MoveError("no applicable move");
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

/// Applies `count` random moves; reproducible for a fixed seed.
inline Diagram random_moves(Diagram d, std::uint64_t seed, int count, int soft_cap = 12,
                            std::vector<MoveSite>* log = nullptr) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    if (d.crossings.empty() && d.vertices.empty() && d.loops == 0) break;
    MoveSite s = random_site(d, rng, soft_cap);
    d = apply_move(d, s);
    if (log) log->push_back(s);
  }
  return d;
}

}  // namespace graphhom
