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

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "diagram.hpp"
#include "moves.hpp"
#include "polynomial.hpp"

namespace graphhom {

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultBracketCap = 24;

namespace detail {

inline void require_link(const Diagram& d, const char* what) {
  if (!d.is_link()) throw InvariantError(std::string(what) + ": diagram has vertices");
  if (d.crossings.empty() && d.loops == 0) throw InvariantError(std::string(what) + ": empty link");
}

inline Poly delta_a() { return -Poly::monomial({"A"}, {4}) - Poly::monomial({"A"}, {-4}); }

}  // namespace detail

/// Kauffman bracket in A (doubled exponents), normalized so the crossing-free
/// unknot has bracket 1. The A-smoothing at [a,b,c,d] joins a-b and c-d.
inline Poly kauffman_bracket(const Diagram& d, int cap = kDefaultBracketCap) {
  detail::require_link(d, "kauffman_bracket");
  const int c = static_cast<int>(d.crossings.size());
  if (c > cap) {
    throw InvariantError("kauffman_bracket: " + std::to_string(c) + " crossings exceeds cap " +
                         std::to_string(cap));
  }
  const int arcs = d.max_arc() + 1;
  // count states by (a - b, circles)
  std::map<std::pair<int, int>, Integer> tally;
  std::vector<int> parent(arcs);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << c); ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int circles = arcs;
    for (int i = 0; i < c; ++i) {
      const auto& x = d.crossings[i].arcs;
      bool a_smooth = ((s >> i) & 1) == 0;
      int p1 = a_smooth ? 1 : 3;
      for (auto [u, v] : {std::pair{x[0], x[p1]}, std::pair{x[2], x[(p1 + 2) & 3]}}) {
        int ru = find(u), rv = find(v);
        if (ru != rv) {
          parent[ru] = rv;
          --circles;
        }
      }
    }
    int a_minus_b = c - 2 * __builtin_popcountll(s);
    tally[{a_minus_b, circles + d.loops}] += 1;
  }
  Poly out = Poly::constant({"A"}, 0);
  Poly delta = detail::delta_a();
  for (const auto& [key, count] : tally) {
    out += Poly::monomial({"A"}, {2 * key.first}, count) *
           delta.pow(static_cast<unsigned>(key.second - 1));
  }
  return out;
}

/// Jones polynomial: (-A^3)^{-w} <D> at A = t^{-1/4}.
inline Poly jones(const Diagram& d, int cap = kDefaultBracketCap) {
  if (!d.oriented) throw InvariantError("jones: diagram is not oriented");
  int w = writhe(d);
  Poly f = Poly::monomial({"A"}, {-6 * w}, (w % 2 == 0) ? 1 : -1);
  Poly p = f * kauffman_bracket(d, cap);
  return p.rescaled(0, -1, 4, {"t"});
}

/// Unnormalized Jones: (q + q^{-1}) V with q = -t^{1/2}, written in t.
inline Poly unnormalized_jones(const Diagram& d, int cap = kDefaultBracketCap) {
  return -(make_t(1) + make_t(-1)) * jones(d, cap);
}

/// Crossing change at crossing i; the arc ids are kept.
inline Diagram switch_crossing(const Diagram& d, int i) {
  Diagram out = d;
  auto& c = out.crossings.at(i);
  auto a = c.arcs;
  if (c.over_13) {
    c.arcs = {a[1], a[2], a[3], a[0]};
    c.over_13 = false;
  } else {
    c.arcs = {a[3], a[0], a[1], a[2]};
    c.over_13 = true;
  }
  return out;
}

/// Oriented smoothing at crossing i.
inline Diagram smooth_crossing(const Diagram& d, int i) {
  const auto& c = d.crossings.at(i);
  int over_in = c.over_13 ? 1 : 3, over_out = c.over_13 ? 3 : 1;
  return detail::remove_and_merge(
      d, {i}, {{c.arcs[0], c.arcs[over_out]}, {c.arcs[over_in], c.arcs[2]}});
}

namespace detail {

/// First crossing met from below when traversing components in order from
/// their base points, or -1 if the diagram is descending.
inline int first_undercrossing(const Diagram& d) {
  auto ends = arc_endpoints(d);
  std::vector<char> used(ends.size(), 0), seen(d.crossings.size(), 0);
  for (std::size_t a0 = 0; a0 < ends.size(); ++a0) {
    if (ends[a0].empty() || used[a0]) continue;
    int arc = static_cast<int>(a0);
    while (!used[arc]) {
      used[arc] = 1;
      Endpoint h = arc_head(d, ends, arc);
      const auto& c = d.crossings[h.node];
      bool under = (h.slot & 1) == 0;
      if (!seen[h.node]) {
        if (under) return h.node;
        seen[h.node] = 1;
      }
      arc = c.arcs[(h.slot + 2) & 3];
    }
  }
  return -1;
}

class ConwayMemo {
 public:
  static ConwayMemo& instance() {
    static ConwayMemo m;
    return m;
  }
  bool get(const std::vector<int>& key, Poly* out) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end()) return false;
    *out = it->second;
    return true;
  }
  void put(const std::vector<int>& key, const Poly& p) {
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, p);
  }

 private:
  std::mutex mu_;
  std::map<std::vector<int>, Poly> cache_;
};

inline Poly conway_rec(const Diagram& d0, int depth, int max_depth) {
  if (depth > max_depth) {
    throw InvariantError("conway: recursion depth exceeded on " + to_json(d0).dump());
  }
  Diagram d = reduce(d0);
  auto key = canonical_code(d);
  Poly cached;
  if (ConwayMemo::instance().get(key, &cached)) return cached;
  Poly z = Poly::monomial({"z"}, {2});
  Poly acc = Poly::constant({"z"}, 0);
  Diagram cur = d;
  for (int i = first_undercrossing(cur); i >= 0; i = first_undercrossing(cur)) {
    Poly sub = z * conway_rec(smooth_crossing(cur, i), depth + 1, max_depth);
    if (cur.crossings[i].sign() > 0) {
      acc += sub;
    } else {
      acc -= sub;
    }
    cur = switch_crossing(cur, i);
  }
  if (component_count(cur) == 1) acc += Poly::constant({"z"}, 1);
  ConwayMemo::instance().put(key, acc);
  return acc;
}

}  // namespace detail

/// Conway polynomial in z (doubled exponents) by skein recursion toward a
/// descending diagram.
inline Poly conway(const Diagram& d, int max_depth = 64) {
  if (!d.oriented) throw InvariantError("conway: diagram is not oriented");
  detail::require_link(d, "conway");
  return detail::conway_rec(d, 0, max_depth);
}

/// Alexander polynomial in t from the Conway polynomial (not normalized).
inline Poly alexander(const Diagram& d) { return conway_to_alexander(conway(d)); }

/// |Delta(-1)| evaluated with t^{1/2} = i.
inline Integer determinant_from_alexander(const Poly& delta) {
  Integer re = 0, im = 0;
  for (const auto& [e, c] : delta.terms()) {
    switch (((e[0] % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      case 3: im -= c; break;
    }
  }
  if (re != 0 && im != 0) throw InvariantError("determinant: non-real value");
  Integer v = re != 0 ? re : im;
  return v < 0 ? Integer(-v) : v;
}

/// Determinant from the Fox colouring matrix, independent of the skein code.
inline Integer fox_determinant(const Diagram& d) {
  detail::require_link(d, "fox_determinant");
  if (d.crossings.empty()) return d.loops == 1 ? 1 : 0;
  if (d.loops > 0) return 0;
  detail::UnionFind uf;
  for (const auto& c : d.crossings) uf.unite(c.arcs[1], c.arcs[3]);
  std::map<int, int> col;
  for (const auto& c : d.crossings) {
    for (int a : c.arcs) col.emplace(uf.find(a), 0);
  }
  int k = 0;
  for (auto& [r, idx] : col) idx = k++;
  const int n = static_cast<int>(d.crossings.size());
  if (k != n) {
    // a strand that never passes under: the diagram is split off as an
    // unknotted over-only component
    return 0;
  }
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) {
    const auto& a = d.crossings[i].arcs;
    m[i][col[uf.find(a[1])]] += 2;
    m[i][col[uf.find(a[0])]] -= 1;
    m[i][col[uf.find(a[2])]] -= 1;
  }
  // drop the last row and column; Bareiss elimination on the rest
  int s = n - 1;
  if (s == 0) return 1;
  Integer prev = 1;
  Integer sign = 1;
  for (int p = 0; p < s; ++p) {
    if (m[p][p] == 0) {
      int r = p + 1;
      while (r < s && m[r][p] == 0) ++r;
      if (r == s) return 0;
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (int i = p + 1; i < s; ++i) {
      for (int j = p + 1; j < s; ++j) {
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
      }
    }
    prev = m[p][p];
  }
  Integer det = sign * m[s - 1][s - 1];
  return det < 0 ? Integer(-det) : det;
}

// ---------------------------------------------------------------------------
// Fingerprint

/// Link invariant tuple used to compare links. The crossing count after
/// greedy reduction is informational and excluded from comparisons.
struct Fingerprint {
  int components = 0;
  Poly jones;
  Poly alexander;  // normalized; zero for split-type links
  int reduced_crossings = 0;

  auto key() const { return std::tie(components, jones, alexander); }
  friend bool operator==(const Fingerprint& a, const Fingerprint& b) { return a.key() == b.key(); }
  friend bool operator<(const Fingerprint& a, const Fingerprint& b) { return a.key() < b.key(); }

  nlohmann::json to_json() const {
    return {{"components", components},
            {"jones", jones.to_string()},
            {"alexander", alexander.to_string()},
            {"reduced_crossings", reduced_crossings}};
  }
};

/// Unoriented-link fingerprint: the lexicographically least (Jones,
/// Alexander) pair over the relative orientations of the components.
inline Fingerprint fingerprint(const Diagram& d) {
  detail::require_link(d, "fingerprint");
  Diagram r = reduce(d.oriented ? d : orient_link(d));
  Fingerprint best;
  best.components = component_count(r);
  best.reduced_crossings = static_cast<int>(r.crossings.size());
  int traced = split_components(r).traced;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << std::max(traced - 1, 0)); ++mask) {
    Diagram o = r;
    for (int k = 0; k + 1 < traced; ++k) {
      if ((mask >> k) & 1) o = reverse_component(o, k + 1);
    }
    Poly j = jones(o);
    Poly a = alexander(o);
    Poly an = a.is_zero() ? Poly({"t"}) : normalize_alexander(a);
    if (!have || std::tie(j, an) < std::tie(best.jones, best.alexander)) {
      best.jones = j;
      best.alexander = an;
      have = true;
    }
  }
  return best;
}

/// The orientation of d whose (Jones, Alexander) pair is least, as used by
/// fingerprint(); ties keep the earliest reversal mask. Homology of a member
/// of an unoriented family is computed in this orientation.
inline Diagram fingerprint_orientation(const Diagram& d) {
  detail::require_link(d, "fingerprint_orientation");
  Diagram base = d.oriented ? d : orient_link(d);
  int traced = split_components(base).traced;
  Diagram best_d = base;
  Poly best_j, best_a;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << std::max(traced - 1, 0)); ++mask) {
    Diagram o = base;
    for (int k = 0; k + 1 < traced; ++k) {
      if ((mask >> k) & 1) o = reverse_component(o, k + 1);
    }
    Diagram r = reduce(o);
    Poly j = jones(r);
    Poly a = alexander(r);
    Poly an = a.is_zero() ? Poly({"t"}) : normalize_alexander(a);
    if (!have || std::tie(j, an) < std::tie(best_j, best_a)) {
      best_j = j;
      best_a = an;
      best_d = o;
      have = true;
    }
  }
  return best_d;
}

}  // namespace graphhom
