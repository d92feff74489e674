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
#include <deque>
#include <list>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "moves.hpp"

namespace graphhom {

class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n x n grid: row r holds an X in column X[r] and an O in column O[r].
/// Rows grow northward and columns eastward. Vertical segments run from X
/// to O and pass over horizontal ones, which run from O to X.
struct GridDiagram {
  int n = 0;
  std::vector<int> X, O;

  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

  /// Row of the X / O in column c.
  std::vector<int> x_row() const {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[X[i]] = i;
    return r;
  }
  std::vector<int> o_row() const {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[O[i]] = i;
    return r;
  }
};

inline std::vector<std::string> grid_violations(const GridDiagram& g) {
  std::vector<std::string> v;
  if (g.n < 2) v.push_back("grid size below 2");
  if (static_cast<int>(g.X.size()) != g.n || static_cast<int>(g.O.size()) != g.n) {
    v.push_back("marking count differs from n");
    return v;
  }
  auto perm = [&](const std::vector<int>& p, const char* name) {
    std::vector<char> seen(g.n, 0);
    for (int c : p) {
      if (c < 0 || c >= g.n || seen[c]) {
        v.push_back(std::string(name) + " is not a permutation");
        return;
      }
      seen[c] = 1;
    }
  };
  perm(g.X, "X");
  perm(g.O, "O");
  for (int r = 0; r < g.n && v.empty(); ++r) {
    if (g.X[r] == g.O[r]) v.push_back("X and O share cell in row " + std::to_string(r));
  }
  return v;
}

inline void require_grid(const GridDiagram& g) {
  auto v = grid_violations(g);
  if (!v.empty()) throw GridError(v.front());
}

/// Component of each row, following O -> X along rows and X -> O along columns.
inline std::vector<int> grid_row_components(const GridDiagram& g, int* count = nullptr) {
  auto orow = g.o_row();
  std::vector<int> comp(g.n, -1);
  int k = 0;
  for (int r0 = 0; r0 < g.n; ++r0) {
    if (comp[r0] >= 0) continue;
    for (int r = r0; comp[r] < 0; r = orow[g.X[r]]) comp[r] = k;
    ++k;
  }
  if (count) *count = k;
  return comp;
}

inline int grid_component_count(const GridDiagram& g) {
  int k = 0;
  grid_row_components(g, &k);
  return k;
}

inline GridDiagram grid_from_json(const nlohmann::json& j) {
  GridDiagram g;
  g.n = j.at("n").get<int>();
  g.X = j.at("X").get<std::vector<int>>();
  g.O = j.at("O").get<std::vector<int>>();
  require_grid(g);
  return g;
}

inline nlohmann::json to_json(const GridDiagram& g) {
  return {{"n", g.n}, {"X", g.X}, {"O", g.O}};
}

/// Reads the planar diagram of a grid. Horizontal segments pass under.
inline Diagram grid_to_pd(const GridDiagram& g) {
  require_grid(g);
  const int n = g.n;
  auto xrow = g.x_row(), orow = g.o_row();
  // vertical segment in column c spans rows between xrow[c] and orow[c]
  auto v_lo = [&](int c) { return std::min(xrow[c], orow[c]); };
  auto v_hi = [&](int c) { return std::max(xrow[c], orow[c]); };
  auto h_lo = [&](int r) { return std::min(g.X[r], g.O[r]); };
  auto h_hi = [&](int r) { return std::max(g.X[r], g.O[r]); };
  // crossing id for (row, column) pairs
  std::map<std::pair<int, int>, int> cross;
  for (int r = 0; r < n; ++r) {
    for (int c = h_lo(r) + 1; c < h_hi(r); ++c) {
      if (v_lo(c) < r && r < v_hi(c)) {
        int id = static_cast<int>(cross.size());
        cross[{r, c}] = id;
      }
    }
  }
  Diagram d;
  d.oriented = true;
  d.crossings.assign(cross.size(), Crossing{});
  std::vector<char> row_done(n, 0);
  std::vector<int> under_dir(cross.size(), 0);
  std::vector<std::pair<int, int>> over_arcs(cross.size(), {-1, -1});  // in, out
  std::vector<int> over_dir(cross.size(), 0);
  {
    // passages along each component; arc k runs from passage k to k+1
    int a = 0;
    for (int r0 = 0; r0 < n; ++r0) {
      if (row_done[r0]) continue;
      std::vector<std::tuple<int, bool, int>> passes;
      for (int r = r0; !row_done[r]; r = orow[g.X[r]]) {
        row_done[r] = 1;
        int from = g.O[r], to = g.X[r], step = to > from ? 1 : -1;
        for (int c = from + step; c != to; c += step) {
          auto it = cross.find({r, c});
          if (it != cross.end()) passes.emplace_back(it->second, true, step);
        }
        int col = g.X[r];
        int rt = orow[col], rs = rt > r ? 1 : -1;
        for (int rr = r + rs; rr != rt; rr += rs) {
          auto it = cross.find({rr, col});
          if (it != cross.end()) passes.emplace_back(it->second, false, rs);
        }
      }
      int m = static_cast<int>(passes.size());
      if (m == 0) {
        ++d.loops;
        continue;
      }
      for (int k = 0; k < m; ++k) {
        auto [id, under, dir] = passes[k];
        int in_arc = a + (k + m - 1) % m, out_arc = a + k;
        if (under) {
          under_dir[id] = dir;
          // east-bound: in from W (slot 0), out E; ccw W,S,E,N
          d.crossings[id].arcs[0] = in_arc;
          d.crossings[id].arcs[2] = out_arc;
        } else {
          over_arcs[id] = {in_arc, out_arc};
          over_dir[id] = dir;
        }
      }
      a += m;
    }
  }
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    auto& c = d.crossings[i];
    auto [oin, oout] = over_arcs[i];
    // under east-bound: slot1 = S, slot3 = N; west-bound: slot1 = N, slot3 = S
    bool north = over_dir[i] > 0;
    bool slot3_is_north = under_dir[i] > 0;
    // over enters from S when going north
    bool enters_slot3 = north ? !slot3_is_north : slot3_is_north;
    c.arcs[3] = enters_slot3 ? oin : oout;
    c.arcs[1] = enters_slot3 ? oout : oin;
    c.over_13 = !enters_slot3;
  }
  return compact_arcs(d);
}

// ---------------------------------------------------------------------------
// Grid-level operations

/// Mirror image: reverse the column order.
inline GridDiagram grid_mirror(const GridDiagram& g) {
  GridDiagram m = g;
  for (int r = 0; r < g.n; ++r) {
    m.X[r] = g.n - 1 - g.X[r];
    m.O[r] = g.n - 1 - g.O[r];
  }
  return m;
}

/// Reverses every component: swap X and O.
inline GridDiagram grid_reverse(const GridDiagram& g) {
  GridDiagram m = g;
  std::swap(m.X, m.O);
  return m;
}

/// Block-diagonal union: a in the south-west, b in the north-east.
inline GridDiagram grid_disjoint_union(const GridDiagram& a, const GridDiagram& b) {
  GridDiagram u;
  u.n = a.n + b.n;
  u.X = a.X;
  u.O = a.O;
  for (int r = 0; r < b.n; ++r) {
    u.X.push_back(b.X[r] + a.n);
    u.O.push_back(b.O[r] + a.n);
  }
  return u;
}

/// Connected sum: block-diagonal union, then exchange the columns of the O
/// in a's top row and the O in b's bottom row. The band lies in the corner
/// between the blocks and is unknotted, and the two pieces are split, so the
/// result is a # b at the components through those rows.
inline GridDiagram grid_connected_sum(const GridDiagram& a, const GridDiagram& b) {
  GridDiagram u = grid_disjoint_union(a, b);
  int ra = a.n - 1, rb = a.n;
  std::swap(u.O[ra], u.O[rb]);
  require_grid(u);
  return u;
}

/// Cyclic shift of rows and columns (a torus translation).
inline GridDiagram grid_translate(const GridDiagram& g, int dc, int dr) {
  GridDiagram m;
  m.n = g.n;
  m.X.assign(g.n, 0);
  m.O.assign(g.n, 0);
  for (int r = 0; r < g.n; ++r) {
    int nr = ((r + dr) % g.n + g.n) % g.n;
    m.X[nr] = ((g.X[r] + dc) % g.n + g.n) % g.n;
    m.O[nr] = ((g.O[r] + dc) % g.n + g.n) % g.n;
  }
  return m;
}

inline GridDiagram unknot_grid() { return GridDiagram{2, {1, 0}, {0, 1}}; }

// ---------------------------------------------------------------------------
// Planar diagram to grid

namespace detail {

/// Connected pieces of a link diagram (nodes joined by arcs), loops excluded.
inline std::vector<Diagram> connected_pieces(const Diagram& d) {
  int c = static_cast<int>(d.crossings.size());
  std::vector<int> parent(c);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto ends = arc_endpoints(d);
  for (const auto& e : ends) {
    if (e.size() == 2) parent[find(e[0].node)] = find(e[1].node);
  }
  std::map<int, Diagram> by_root;
  for (int i = 0; i < c; ++i) {
    auto& p = by_root[find(i)];
    p.oriented = d.oriented;
    p.crossings.push_back(d.crossings[i]);
  }
  std::vector<Diagram> out;
  for (auto& [r, p] : by_root) out.push_back(compact_arcs(p));
  return out;
}

enum Port { kE = 0, kN = 1, kW = 2, kS = 3 };

/// Symbolic drawing point: x = 8 * rank(col) + dx.
struct DrawPoint {
  int col, dx, y;
};

/// Orthogonal drawing of a connected link diagram. Returns, per link
/// component, the closed polyline in integer coordinates.
class OrthogonalDrawing {
 public:
  explicit OrthogonalDrawing(const Diagram& d) : d_(d) {
    build_graph();
    st_number();
    route();
  }

  std::vector<std::vector<std::pair<int, int>>> components() const;

 private:
  struct Edge {
    int u, v;
    bool real;
  };

  const Diagram& d_;
  int nc_ = 0, na_ = 0, nf_ = 0;
  std::vector<std::vector<Endpoint>> ends_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rot_;  // ccw edge ids per vertex
  std::vector<int> num_, order_;
  int s_ = -1, first_edge_ = -1;
  // drawing
  std::list<int> cols_;
  std::vector<std::list<int>::iterator> col_it_;
  std::vector<int> edge_col_;
  std::vector<std::vector<DrawPoint>> out_pts_, in_pts_;
  std::vector<int> vcol_;
  std::vector<int> port_;  // port of each real edge at its crossing end
  std::vector<char> twist_;

  int dart(int node, int slot) const { return 4 * node + slot; }
  int other(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  void build_graph() {
    nc_ = static_cast<int>(d_.crossings.size());
    na_ = 2 * nc_;
    ends_ = arc_endpoints(d_);
    auto fs = faces(d_);
    nf_ = static_cast<int>(fs.size());
    std::vector<int> face_of(4 * nc_);
    for (int f = 0; f < nf_; ++f) {
      for (const auto& e : fs[f]) face_of[dart(e.node, e.slot)] = f;
    }
    int nv = nc_ + na_ + nf_;
    rot_.assign(nv, {});
    edges_.assign(12 * nc_, {});
    auto mid = [&](int D) { return nc_ + d_.crossings[D / 4].arcs[D % 4]; };
    auto face = [&](int D) { return nc_ + na_ + face_of[D]; };
    for (int D = 0; D < 4 * nc_; ++D) {
      edges_[3 * D] = {D / 4, mid(D), true};
      edges_[3 * D + 1] = {D / 4, face(D), false};
      edges_[3 * D + 2] = {mid(D), face(D), false};
    }
    for (int c = 0; c < nc_; ++c) {
      for (int s = 0; s < 4; ++s) {
        rot_[c].push_back(3 * dart(c, s));
        rot_[c].push_back(3 * dart(c, s) + 1);
      }
    }
    for (int a = 0; a < na_; ++a) {
      int e0 = dart(ends_[a][0].node, ends_[a][0].slot);
      int e1 = dart(ends_[a][1].node, ends_[a][1].slot);
      rot_[nc_ + a] = {3 * e1, 3 * e0 + 2, 3 * e0, 3 * e1 + 2};
    }
    for (int f = 0; f < nf_; ++f) {
      for (const auto& e : fs[f]) {
        int D = dart(e.node, e.slot);
        rot_[nc_ + na_ + f].push_back(3 * D + 1);
        rot_[nc_ + na_ + f].push_back(3 * D + 2);
      }
    }
  }

  void st_number() {
    int nv = static_cast<int>(rot_.size());
    s_ = nc_ + na_;  // first face
    first_edge_ = rot_[s_][0];
    int t = other(first_edge_, s_);
    std::vector<int> pre(nv, -1), parent(nv, -1), parent_edge(nv, -1), low(nv, -1);
    std::vector<int> preorder;
    // iterative DFS; the first tree edge is s -> t
    struct Frame {
      int v, next;
    };
    std::vector<Frame> stack;
    pre[s_] = 0;
    low[s_] = s_;
    preorder.push_back(s_);
    pre[t] = 1;
    low[t] = t;
    parent[t] = s_;
    parent_edge[t] = first_edge_;
    preorder.push_back(t);
    stack.push_back({s_, 0});
    stack.push_back({t, 0});
    int counter = 2;
    while (!stack.empty()) {
      auto& fr = stack.back();
      int v = fr.v;
      if (fr.next < static_cast<int>(rot_[v].size())) {
        int e = rot_[v][fr.next++];
        if (e == parent_edge[v]) continue;
        int w = other(e, v);
        if (pre[w] < 0) {
          pre[w] = counter++;
          low[w] = w;
          parent[w] = v;
          parent_edge[w] = e;
          preorder.push_back(w);
          stack.push_back({w, 0});
        } else if (pre[w] < pre[low[v]]) {
          low[v] = w;
        }
      } else {
        stack.pop_back();
        if (parent[v] >= 0 && pre[low[v]] < pre[low[parent[v]]]) {
          low[parent[v]] = low[v];
        }
      }
    }
    if (counter != nv) throw GridError("pd_to_grid: diagram graph is disconnected");
    std::list<int> L{s_, t};
    std::vector<std::list<int>::iterator> pos(nv);
    pos[s_] = L.begin();
    pos[t] = std::next(L.begin());
    std::vector<int> sign(nv, 0);
    sign[s_] = -1;
    for (int v : preorder) {
      if (v == s_ || v == t) continue;
      int p = parent[v];
      if (sign[low[v]] == -1) {
        pos[v] = L.insert(pos[p], v);
        sign[p] = 1;
      } else {
        pos[v] = L.insert(std::next(pos[p]), v);
        sign[p] = -1;
      }
    }
    num_.assign(nv, 0);
    order_.assign(L.begin(), L.end());
    for (int i = 0; i < nv; ++i) num_[order_[i]] = i;
    for (int v = 0; v < nv; ++v) {
      if (v == s_ || v == t) continue;
      bool lo = false, hi = false;
      for (int e : rot_[v]) (num_[other(e, v)] < num_[v] ? lo : hi) = true;
      if (!lo || !hi) throw GridError("pd_to_grid: st-numbering failed");
    }
  }

  bool incoming(int e, int v) const { return num_[other(e, v)] < num_[v]; }

  int new_col_before(int anchor) {
    int id = static_cast<int>(col_it_.size());
    col_it_.push_back(cols_.insert(col_it_[anchor], id));
    return id;
  }
  int new_col_after(int anchor) {
    int id = static_cast<int>(col_it_.size());
    col_it_.push_back(cols_.insert(std::next(col_it_[anchor]), id));
    return id;
  }
  int new_col_back() {
    int id = static_cast<int>(col_it_.size());
    col_it_.push_back(cols_.insert(cols_.end(), id));
    return id;
  }

  /// Ports for real edges in ccw order starting at the leftmost incoming one
  /// (or the rightmost outgoing one when nothing real comes in).
  std::vector<int> port_sequence(int v, int p, int q, const std::vector<int>& real_in) const {
    if (v < nc_) {
      if (p == 4) return {kW, kS, kE, kN};
      if (p == 3) return {kW, kS, kE, kN};
      if (p == 1) return {kS, kE, kN, kW};
      if (p == 0) return {kE, kN, kW, kS};
      // p == 2: prefer the layout that keeps the over strand vertical
      int slot0 = (real_in[0] / 3) % 4;
      bool first_over = slot0 % 2 == 1;
      // variant {S,E}: first incoming is vertical
      return first_over ? std::vector<int>{kS, kE, kN, kW} : std::vector<int>{kW, kS, kE, kN};
    }
    if (p == 2) return {kS, kE};
    if (p == 1) return {kS, kN};
    if (p == 0 && q == 2) return {kN, kW};
    return {};
  }

  void route() {
    int nv = static_cast<int>(rot_.size());
    edge_col_.assign(edges_.size(), -1);
    out_pts_.assign(edges_.size(), {});
    in_pts_.assign(edges_.size(), {});
    vcol_.assign(nv, -1);
    port_.assign(edges_.size(), -1);
    twist_.assign(nc_, 0);
    std::vector<int> open;
    for (int v : order_) {
      const auto& rot = rot_[v];
      int k = static_cast<int>(rot.size());
      int y = 8 * num_[v];
      std::vector<int> in, out;
      if (v == s_) {
        out.push_back(rot[0]);
        for (int i = k - 1; i >= 1; --i) out.push_back(rot[i]);
        for (int e : out) edge_col_[e] = new_col_back();
        open = out;
        vcol_[v] = edge_col_[out[0]];
        continue;
      }
      int i1 = -1;
      bool all_in = true;
      for (int i = 0; i < k; ++i) {
        if (!incoming(rot[i], v)) all_in = false;
        if (incoming(rot[i], v) && !incoming(rot[(i + k - 1) % k], v)) i1 = i;
      }
      if (all_in) {
        // sink: the run is the whole open list
        for (int i = 0; i < k; ++i) {
          if (rot[i] == open.front()) i1 = i;
        }
      }
      if (i1 < 0) throw GridError("pd_to_grid: vertex without incoming edge");
      for (int i = 0; i < k && incoming(rot[(i1 + i) % k], v); ++i) {
        in.push_back(rot[(i1 + i) % k]);
      }
      for (int i = 1; i < k && !incoming(rot[(i1 - i + k) % k], v); ++i) {
        out.push_back(rot[(i1 - i + k) % k]);
      }
      auto it = std::find(open.begin(), open.end(), in.front());
      if (it == open.end() || open.end() - it < static_cast<std::ptrdiff_t>(in.size()) ||
          !std::equal(in.begin(), in.end(), it)) {
        throw GridError("pd_to_grid: incoming edges are not consecutive");
      }
      std::vector<int> real_in, real_out;
      for (int e : in) {
        if (edges_[e].real) real_in.push_back(e);
      }
      for (int e : out) {
        if (edges_[e].real) real_out.push_back(e);
      }
      int p = static_cast<int>(real_in.size()), q = static_cast<int>(real_out.size());
      auto ports = port_sequence(v, p, q, real_in);
      std::map<int, int> port;
      for (int i = 0; i < p; ++i) port[real_in[i]] = ports[i];
      for (int i = 0; i < q; ++i) port[real_out[q - 1 - i]] = ports[p + i];
      // vertex column
      int xv = -1;
      for (int e : real_in) {
        if (port[e] == kS) xv = edge_col_[e];
      }
      if (xv < 0) xv = new_col_after(edge_col_[in.front()]);
      vcol_[v] = xv;
      DrawPoint center{xv, 0, y};
      for (int e : real_in) {
        int c = edge_col_[e];
        switch (port[e]) {
          case kS: in_pts_[e] = {center}; break;
          case kW:
          case kE: in_pts_[e] = {{c, 0, y}, center}; break;
          default: in_pts_[e] = {{c, 0, y + 4}, {xv, 0, y + 4}, center}; break;
        }
      }
      // outgoing columns: left of xv up to the north (or first east) edge
      int split = static_cast<int>(out.size());
      for (int i = 0; i < static_cast<int>(out.size()); ++i) {
        if (edges_[out[i]].real && (port[out[i]] == kN || port[out[i]] == kE)) {
          split = i;
          break;
        }
      }
      for (int i = 0; i < split; ++i) edge_col_[out[i]] = new_col_before(xv);
      int anchor = xv;
      for (int i = split; i < static_cast<int>(out.size()); ++i) {
        if (edges_[out[i]].real && port[out[i]] == kN) {
          edge_col_[out[i]] = xv;
        } else {
          edge_col_[out[i]] = anchor = new_col_after(anchor);
        }
      }
      for (int e : real_out) {
        int c = edge_col_[e];
        switch (port[e]) {
          case kN: out_pts_[e] = {center}; break;
          case kW:
          case kE: out_pts_[e] = {center, {c, 0, y}}; break;
          default: out_pts_[e] = {center, {xv, 0, y - 4}, {c, 0, y - 4}}; break;
        }
      }
      if (v < nc_) {
        for (auto [e, pt] : port) port_[e] = pt;
        int over_edge = 3 * dart(v, 1);
        twist_[v] = port[over_edge] == kW || port[over_edge] == kE;
      }
      std::vector<int> next(open.begin(), it);
      next.insert(next.end(), out.begin(), out.end());
      next.insert(next.end(), it + in.size(), open.end());
      open = std::move(next);
    }
    if (!open.empty()) throw GridError("pd_to_grid: edges left open");
  }

  /// Route of the real edge of dart D, from the crossing outwards.
  std::vector<DrawPoint> dart_path(int D) const {
    int e = 3 * D;
    std::vector<DrawPoint> pts = out_pts_[e];
    pts.insert(pts.end(), in_pts_[e].begin(), in_pts_[e].end());
    if (edges_[e].u != D / 4 || num_[edges_[e].u] > num_[edges_[e].v]) {
      std::reverse(pts.begin(), pts.end());
    }
    return pts;
  }

 public:
  /// Gadget arm for a port, from the outer end to the centre.
  static std::vector<std::pair<int, int>> arm(int port) {
    std::vector<std::pair<int, int>> a{{-3, 0}, {-3, 2}, {0, 2}, {0, 1}};
    int turns = (kW - port + 4) % 4;  // clockwise quarter turns from W
    for (auto& [x, y] : a) {
      for (int i = 0; i < turns; ++i) {
        int nx = y, ny = -x;
        x = nx;
        y = ny;
      }
    }
    return a;
  }

  std::vector<std::vector<DrawPoint>> strands() const;
};

inline std::vector<std::vector<DrawPoint>> OrthogonalDrawing::strands() const {
  // link components as point sequences, each arc tail crossing -> head crossing
  std::vector<std::vector<DrawPoint>> comps;
  std::vector<char> used(na_, 0);
  for (int a0 = 0; a0 < na_; ++a0) {
    if (used[a0]) continue;
    std::vector<DrawPoint> pts;
    int a = a0;
    while (!used[a]) {
      used[a] = 1;
      Endpoint tail = ends_[a][0], head = ends_[a][1];
      if (d_.crossings[tail.node].incoming(tail.slot)) std::swap(tail, head);
      auto p1 = dart_path(dart(tail.node, tail.slot));
      auto p2 = dart_path(dart(head.node, head.slot));
      std::reverse(p2.begin(), p2.end());
      if (twist_[tail.node]) {
        // leave the centre through the gadget arm, inner end first
        auto arm_out = arm(port_[3 * dart(tail.node, tail.slot)]);
        DrawPoint ctr = p1.front();
        for (auto itp = arm_out.rbegin(); itp != arm_out.rend(); ++itp) {
          pts.push_back({ctr.col, itp->first, ctr.y + itp->second});
        }
        pts.insert(pts.end(), p1.begin() + 1, p1.end());
      } else {
        pts.insert(pts.end(), p1.begin(), p1.end());
      }
      pts.insert(pts.end(), p2.begin(), p2.end());
      int h = head.node;
      if (twist_[h]) {
        DrawPoint ctr = p2.back();
        pts.pop_back();
        for (auto [dx, dy] : arm(port_[3 * dart(head.node, head.slot)])) {
          pts.push_back({ctr.col, dx, ctr.y + dy});
        }
        pts.push_back(ctr);
      }
      a = d_.crossings[h].arcs[(head.slot + 2) % 4];
    }
    comps.push_back(std::move(pts));
  }
  return comps;
}

inline std::vector<std::vector<std::pair<int, int>>> OrthogonalDrawing::components() const {
  std::vector<int> rank(col_it_.size());
  int r = 0;
  for (int c : cols_) rank[c] = r++;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& s : strands()) {
    std::vector<std::pair<int, int>> pts;
    for (const auto& p : s) pts.emplace_back(8 * rank[p.col] + p.dx, p.y);
    out.push_back(std::move(pts));
  }
  return out;
}

/// Grid from closed rectilinear polylines in general position except at
/// vertical-over-horizontal crossings.
inline GridDiagram grid_from_polylines(std::vector<std::vector<std::pair<int, int>>> comps) {
  struct Seg {
    bool vertical;
    int coord, id;
  };
  std::vector<Seg> vsegs, hsegs;
  // corners: (h segment, v segment, is_x)
  std::vector<std::tuple<int, int, bool>> corners;
  int id = 0;
  for (auto& pts : comps) {
    // drop repeats and collinear interior points, cyclically
    bool changed = true;
    while (changed && pts.size() > 2) {
      changed = false;
      for (std::size_t i = 0; i < pts.size() && pts.size() > 2; ++i) {
        auto a = pts[(i + pts.size() - 1) % pts.size()], b = pts[i], c = pts[(i + 1) % pts.size()];
        bool repeat = a == b;
        bool collinear = (a.first == b.first && b.first == c.first) ||
                         (a.second == b.second && b.second == c.second);
        if (repeat || collinear) {
          pts.erase(pts.begin() + i);
          changed = true;
          break;
        }
      }
    }
    int m = static_cast<int>(pts.size());
    if (m < 4 || m % 2) throw GridError("pd_to_grid: degenerate polyline");
    std::vector<int> seg_id(m), seg_vertical(m);
    for (int i = 0; i < m; ++i) {
      auto a = pts[i], b = pts[(i + 1) % m];
      bool vert = a.first == b.first;
      if (!vert && a.second != b.second) throw GridError("pd_to_grid: diagonal segment");
      seg_id[i] = id++;
      seg_vertical[i] = vert;
      (vert ? vsegs : hsegs).push_back({vert, vert ? a.first : a.second, seg_id[i]});
    }
    for (int i = 0; i < m; ++i) {
      int prev = (i + m - 1) % m;
      // corner at pts[i]: arrive along prev, leave along i
      if (seg_vertical[prev] == seg_vertical[i]) throw GridError("pd_to_grid: not alternating");
      bool is_x = !seg_vertical[prev];
      int h = is_x ? seg_id[prev] : seg_id[i];
      int v = is_x ? seg_id[i] : seg_id[prev];
      corners.emplace_back(h, v, is_x);
    }
  }
  auto by_coord = [](const Seg& a, const Seg& b) {
    return std::tie(a.coord, a.id) < std::tie(b.coord, b.id);
  };
  std::sort(vsegs.begin(), vsegs.end(), by_coord);
  std::sort(hsegs.begin(), hsegs.end(), by_coord);
  std::map<int, int> col, row;
  for (std::size_t i = 0; i < vsegs.size(); ++i) col[vsegs[i].id] = static_cast<int>(i);
  for (std::size_t i = 0; i < hsegs.size(); ++i) row[hsegs[i].id] = static_cast<int>(i);
  GridDiagram g;
  g.n = static_cast<int>(vsegs.size());
  g.X.assign(g.n, -1);
  g.O.assign(g.n, -1);
  for (auto [h, v, is_x] : corners) (is_x ? g.X : g.O)[row.at(h)] = col.at(v);
  require_grid(g);
  return g;
}

}  // namespace detail

/// Grid diagram of an oriented link diagram. Split pieces and loops become
/// diagonal blocks. The output is large; see simplify_grid.
inline GridDiagram pd_to_grid_raw(const Diagram& input) {
  if (!input.is_link()) throw GridError("pd_to_grid: diagram has vertices");
  Diagram d = input.oriented ? compact_arcs(input) : orient_link(input);
  std::vector<GridDiagram> blocks;
  for (const auto& piece : detail::connected_pieces(d)) {
    detail::OrthogonalDrawing draw(piece);
    blocks.push_back(detail::grid_from_polylines(draw.components()));
  }
  for (int i = 0; i < d.loops; ++i) blocks.push_back(unknot_grid());
  if (blocks.empty()) throw GridError("pd_to_grid: empty diagram");
  GridDiagram g = blocks[0];
  for (std::size_t i = 1; i < blocks.size(); ++i) g = grid_disjoint_union(g, blocks[i]);
  return g;
}

// ---------------------------------------------------------------------------
// Simplification

/// Destabilization at marking (cm, rm): the other marking of its row sits
/// in a neighbouring column and the other marking of its column in a
/// neighbouring row (cyclically). Deletes row rm and column cm and merges
/// the two neighbours into the free corner.
inline std::optional<GridDiagram> grid_destabilize(const GridDiagram& g, int rm, bool at_x) {
  const int n = g.n;
  if (n <= 2) return std::nullopt;
  int cm = at_x ? g.X[rm] : g.O[rm];
  int ch = at_x ? g.O[rm] : g.X[rm];
  auto other_col = at_x ? g.o_row() : g.x_row();
  int rv = other_col[cm];
  auto adj = [n](int a, int b) { return (a - b + n) % n == 1 || (b - a + n) % n == 1; };
  if (!adj(ch, cm) || !adj(rv, rm)) return std::nullopt;
  // the marking of type at_x in row rv must not occupy (ch, rv)
  if ((at_x ? g.X[rv] : g.O[rv]) == ch) return std::nullopt;
  GridDiagram h = g;
  // row rv receives the merged marking at column ch
  (at_x ? h.O : h.X)[rv] = ch;
  GridDiagram out;
  out.n = n - 1;
  for (int r = 0; r < n; ++r) {
    if (r == rm) continue;
    auto shift = [cm](int c) { return c > cm ? c - 1 : c; };
    out.X.push_back(shift(h.X[r]));
    out.O.push_back(shift(h.O[r]));
  }
  if (!grid_violations(out).empty()) return std::nullopt;
  return out;
}

inline std::optional<GridDiagram> grid_any_destabilization(const GridDiagram& g) {
  for (int r = 0; r < g.n; ++r) {
    for (bool at_x : {false, true}) {
      if (auto h = grid_destabilize(g, r, at_x)) return h;
    }
  }
  return std::nullopt;
}

namespace detail {

inline bool interleaved(int a1, int b1, int a2, int b2) {
  if (a1 > b1) std::swap(a1, b1);
  if (a2 > b2) std::swap(a2, b2);
  bool in1 = a1 < a2 && a2 < b1, in2 = a1 < b2 && b2 < b1;
  return in1 != in2;
}

}  // namespace detail

/// Exchange columns c and c+1 (cyclically) when their segments do not interleave.
inline std::optional<GridDiagram> grid_commute_columns(const GridDiagram& g, int c) {
  int c2 = (c + 1) % g.n;
  auto xr = g.x_row(), orow = g.o_row();
  if (detail::interleaved(xr[c], orow[c], xr[c2], orow[c2])) return std::nullopt;
  GridDiagram h = g;
  for (int r = 0; r < g.n; ++r) {
    for (int* m : {&h.X[r], &h.O[r]}) {
      if (*m == c) {
        *m = c2;
      } else if (*m == c2) {
        *m = c;
      }
    }
  }
  return h;
}

/// Exchange rows r and r+1 (cyclically) when their segments do not interleave.
inline std::optional<GridDiagram> grid_commute_rows(const GridDiagram& g, int r) {
  int r2 = (r + 1) % g.n;
  if (detail::interleaved(g.X[r], g.O[r], g.X[r2], g.O[r2])) return std::nullopt;
  GridDiagram h = g;
  std::swap(h.X[r], h.X[r2]);
  std::swap(h.O[r], h.O[r2]);
  return h;
}

inline std::vector<GridDiagram> grid_commutation_neighbours(const GridDiagram& g) {
  std::vector<GridDiagram> out;
  for (int i = 0; i < g.n; ++i) {
    if (auto h = grid_commute_columns(g, i)) out.push_back(std::move(*h));
    if (auto h = grid_commute_rows(g, i)) out.push_back(std::move(*h));
  }
  return out;
}

/// Stabilization at the marking of row `row` (an X when at_x): a new
/// column and row are inserted beside it (after it when dc / dr is 1) and
/// the marking becomes an L of three markings. Inverse of grid_destabilize.
inline GridDiagram grid_stabilize(const GridDiagram& g, int row, bool at_x, int dc, int dr) {
  require_grid(g);
  int ch = at_x ? g.X[row] : g.O[row];
  int cm = ch + dc, rm = row + dr;
  auto col = [cm](int c) { return c >= cm ? c + 1 : c; };
  GridDiagram h;
  h.n = g.n + 1;
  h.X.assign(h.n, -1);
  h.O.assign(h.n, -1);
  for (int r = 0; r < g.n; ++r) {
    int nr = r >= rm ? r + 1 : r;
    h.X[nr] = col(g.X[r]);
    h.O[nr] = col(g.O[r]);
  }
  int nch = col(ch), nrv = row >= rm ? row + 1 : row;
  // old marking moves to the new column; the new row holds the other two
  (at_x ? h.X : h.O)[nrv] = cm;
  (at_x ? h.X : h.O)[rm] = nch;
  (at_x ? h.O : h.X)[rm] = cm;
  require_grid(h);
  return h;
}

/// Random commutations, stabilizations and destabilizations, keeping n <= max_n.
inline GridDiagram grid_random_moves(GridDiagram g, std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  // a grid may admit no move at all within max_n; stop after many misses
  long misses = 0;
  for (int done = 0; done < count && misses < 1000L * (count + 1);) {
    int kind = static_cast<int>(rng() % 4);
    int i = static_cast<int>(rng() % g.n);
    std::optional<GridDiagram> h;
    if (kind == 0) {
      h = grid_commute_columns(g, i);
    } else if (kind == 1) {
      h = grid_commute_rows(g, i);
    } else if (kind == 2 && g.n < max_n) {
      h = grid_stabilize(g, i, rng() % 2, static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
    } else if (kind == 3) {
      h = grid_destabilize(g, i, rng() % 2);
    }
    if (h) {
      g = std::move(*h);
      ++done;
    } else {
      ++misses;
    }
  }
  return g;
}

struct SimplifyOptions {
  int search_depth = 6;       // commutation steps explored between destabilizations
  int max_states = 200000;    // per search
  int fallback_above = 8;     // pd_to_grid retries the unreduced diagram past this size
};

/// Destabilize greedily; when stuck, search commutation sequences up to
/// the depth bound for a grid that destabilizes. Never increases n.
inline GridDiagram simplify_grid(GridDiagram g, const SimplifyOptions& opt = {}) {
  require_grid(g);
  for (;;) {
    if (auto h = grid_any_destabilization(g)) {
      g = std::move(*h);
      continue;
    }
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen{{g.X, g.O}};
    std::vector<GridDiagram> frontier{g};
    std::optional<GridDiagram> found;
    for (int depth = 0; depth < opt.search_depth && !found; ++depth) {
      std::vector<GridDiagram> next;
      for (const auto& f : frontier) {
        for (auto& h : grid_commutation_neighbours(f)) {
          if (!seen.insert({h.X, h.O}).second) continue;
          if (auto d = grid_any_destabilization(h)) {
            found = std::move(d);
            break;
          }
          if (static_cast<int>(seen.size()) < opt.max_states) next.push_back(std::move(h));
        }
        if (found) break;
      }
      frontier = std::move(next);
    }
    if (!found) return g;
    g = std::move(*found);
  }
}

/// Grid of a link diagram, simplified. The diagram is reduced by R1- and
/// R2- first; the unreduced diagram is tried too if that grid stays large.
inline GridDiagram pd_to_grid(const Diagram& d, const SimplifyOptions& opt = {}) {
  if (!d.is_link()) throw GridError("pd_to_grid: diagram has vertices");
  Diagram r = reduce(d.oriented ? d : orient_link(d));
  GridDiagram g = simplify_grid(pd_to_grid_raw(r), opt);
  if (g.n > opt.fallback_above && r.crossings.size() < d.crossings.size()) {
    GridDiagram h = simplify_grid(pd_to_grid_raw(d), opt);
    if (h.n < g.n) return h;
  }
  return g;
}

}  // namespace graphhom
