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
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "bigraded.hpp"
#include "diagram.hpp"
#include "guard.hpp"
#include "invariants.hpp"
#include "linalg.hpp"

namespace graphhom {

inline constexpr int kDefaultCubeCap = 14;

enum class Coeffs { kZ, kF2 };

/// Circle data of every resolution. Bit i of a state set means crossing i
/// takes its 1-smoothing (joining slots 0-3 and 1-2); 0 joins 0-1 and 2-3.
struct ResolutionCube {
  int crossings = 0;
  int n_plus = 0, n_minus = 0;
  int loops = 0;                          // crossing-free circles, in every state
  std::vector<int> circles;               // per state: circle count incl. loops
  std::vector<std::vector<int>> arc_circle;  // per state: circle of each arc
};

inline ResolutionCube build_cube(const Diagram& d, int cap = kDefaultCubeCap) {
  if (!d.oriented) throw InvariantError("build_cube: diagram is not oriented");
  if (!d.is_link()) throw InvariantError("build_cube: diagram has vertices");
  const int c = static_cast<int>(d.crossings.size());
  if (c > cap) {
    throw InvariantError("build_cube: " + std::to_string(c) + " crossings exceeds cap " +
                         std::to_string(cap));
  }
  if (d.max_arc() + 1 != 2 * c) throw InvariantError("build_cube: arc ids are not compact");
  ResolutionCube cube;
  cube.crossings = c;
  cube.loops = d.loops;
  for (const auto& x : d.crossings) (x.sign() > 0 ? cube.n_plus : cube.n_minus)++;
  const int arcs = d.max_arc() + 1;
  const std::uint64_t states = std::uint64_t{1} << c;
  check_memory(states * (arcs + 8) * sizeof(int), "build_cube");
  cube.circles.resize(states);
  cube.arc_circle.resize(states);
  std::vector<int> parent(arcs);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t s = 0; s < states; ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < c; ++i) {
      const auto& x = d.crossings[i].arcs;
      int p = ((s >> i) & 1) ? 3 : 1;
      parent[find(x[0])] = find(x[p]);
      parent[find(x[2])] = find(x[(p + 2) & 3]);
    }
    std::vector<int> label(arcs, -1), of(arcs, -1);
    int k = 0;
    for (int a = 0; a < arcs; ++a) {
      int r = find(a);
      if (label[r] < 0) label[r] = k++;
      of[a] = label[r];
    }
    cube.circles[s] = k + d.loops;
    cube.arc_circle[s] = std::move(of);
  }
  return cube;
}

struct KhovanovResult {
  BigradedDims dims{"i", "j"};
  std::uint64_t generators = 0;
  bool d_squared_zero = true;
};

namespace detail {

struct KhGen {
  std::uint64_t state;
  std::uint64_t mask;  // bit k set: circle k carries v+
};

}  // namespace detail

/// Unreduced Khovanov homology. Gradings are stored doubled: unknot has rank
/// one at (0,-2) and (0,2).
inline KhovanovResult khovanov_homology(const Diagram& input, Coeffs coeffs,
                                        int cap = kDefaultCubeCap, bool check_d2 = true) {
  const Diagram d = compact_arcs(input);
  ResolutionCube cube = build_cube(d, cap);
  const int c = cube.crossings;
  const std::uint64_t states = std::uint64_t{1} << c;
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < states; ++s) total += std::uint64_t{1} << cube.circles[s];
  check_memory(total * 64, "khovanov_homology");
  KhovanovResult res;
  res.generators = total;

  // index generators by (r, j)
  std::map<std::pair<int, int>, std::vector<detail::KhGen>> blocks;
  auto qdeg = [&](std::uint64_t s, std::uint64_t mask, int k) {
    int plus = __builtin_popcountll(mask);
    return (plus - (k - plus)) + __builtin_popcountll(s) + cube.n_plus - 2 * cube.n_minus;
  };
  for (std::uint64_t s = 0; s < states; ++s) {
    int k = cube.circles[s];
    int r = __builtin_popcountll(s);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
      blocks[{r, qdeg(s, m, k)}].push_back({s, m});
    }
  }
  std::map<std::pair<int, int>, std::map<std::pair<std::uint64_t, std::uint64_t>, int>> index;
  for (const auto& [key, gens] : blocks) {
    auto& idx = index[key];
    for (std::size_t g = 0; g < gens.size(); ++g) idx[{gens[g].state, gens[g].mask}] = static_cast<int>(g);
  }

  // circle count for loops: loops take the labels after the traced circles
  auto traced = [&](std::uint64_t s) { return cube.circles[s] - cube.loops; };

  // differential from block (r, j) to (r + 1, j)
  auto differential = [&](int r, int j) {
    const auto& src = blocks.at({r, j});
    auto tgt_it = blocks.find({r + 1, j});
    int rows = tgt_it == blocks.end() ? 0 : static_cast<int>(tgt_it->second.size());
    SparseZ m(rows, static_cast<int>(src.size()));
    if (rows == 0) return m;
    const auto& tidx = index.at({r + 1, j});
    for (std::size_t g = 0; g < src.size(); ++g) {
      std::uint64_t s = src[g].state, mask = src[g].mask;
      for (int i = 0; i < c; ++i) {
        if ((s >> i) & 1) continue;
        std::uint64_t t = s | (std::uint64_t{1} << i);
        int sign = (__builtin_popcountll(s & ((std::uint64_t{1} << i) - 1)) & 1) ? -1 : 1;
        const auto& x = d.crossings[i].arcs;
        const auto& cs = cube.arc_circle[s];
        const auto& ct = cube.arc_circle[t];
        int ks = traced(s), kt = traced(t);
        // map each circle of s to a circle of t by a representative arc
        std::vector<int> s_to_t(ks + cube.loops);
        for (std::size_t a = 0; a < cs.size(); ++a) s_to_t[cs[a]] = ct[a];
        for (int l = 0; l < cube.loops; ++l) s_to_t[ks + l] = kt + l;
        auto bit = [](std::uint64_t v, int b) { return (v >> b) & 1; };
        std::uint64_t base = 0;  // t-mask from untouched circles
        int ca = cs[x[0]], cc = cs[x[2]];
        for (int q = 0; q < ks + cube.loops; ++q) {
          if (q == ca || q == cc) continue;
          if (bit(mask, q)) base |= std::uint64_t{1} << s_to_t[q];
        }
        auto emit = [&](std::uint64_t tm) {
          m.add(tidx.at({t, tm}), static_cast<int>(g), sign);
        };
        if (ca != cc) {
          // merge
          int into = s_to_t[ca];
          bool pa = bit(mask, ca), pc = bit(mask, cc);
          if (pa && pc) {
            emit(base | (std::uint64_t{1} << into));
          } else if (pa || pc) {
            emit(base);
          }
        } else {
          // split: circles of t holding x[0] and x[1] (different after split)
          int t1 = ct[x[0]], t2 = ct[x[1]];
          if (t1 == t2) t2 = ct[x[3]];
          if (bit(mask, ca)) {
            emit(base | (std::uint64_t{1} << t1));
            emit(base | (std::uint64_t{1} << t2));
          } else {
            emit(base);
          }
        }
      }
    }
    return m;
  };

  std::map<std::pair<int, int>, SparseZ> diffs;
  for (const auto& [key, gens] : blocks) diffs[key] = differential(key.first, key.second);
  if (check_d2) {
    for (const auto& [key, m] : diffs) {
      auto next = diffs.find({key.first + 1, key.second});
      if (next == diffs.end() || m.rows == 0) continue;
      if (!z_composes_to_zero(m, next->second)) res.d_squared_zero = false;
    }
  }
  std::map<std::pair<int, int>, std::vector<Integer>> inv;
  std::map<std::pair<int, int>, int> rank;
  for (const auto& [key, m] : diffs) {
    if (coeffs == Coeffs::kF2) {
      SparseF2 f(m.rows, m.cols);
      for (int col = 0; col < m.cols; ++col) {
        for (const auto& [row, v] : m.columns[col]) {
          if (v % 2 != 0) f.toggle(row, col);
        }
      }
      f.finalize();
      rank[key] = f2_rank(f);
    } else {
      inv[key] = smith_invariants(m);
      rank[key] = static_cast<int>(inv[key].size());
    }
  }
  for (const auto& [key, gens] : blocks) {
    auto [r, j] = key;
    long long dim = static_cast<long long>(gens.size());
    long long out_rank = rank.count(key) ? rank[key] : 0;
    auto prev = rank.find({r - 1, j});
    long long in_rank = prev == rank.end() ? 0 : prev->second;
    int i2 = 2 * (r - cube.n_minus), j2 = 2 * j;
    res.dims.add_rank(i2, j2, dim - out_rank - in_rank);
    if (coeffs == Coeffs::kZ && prev != rank.end()) {
      for (const auto& f : inv[{r - 1, j}]) res.dims.add_torsion(i2, j2, f);
    }
  }
  return res;
}

/// Sum over (i, j) of (-1)^i q^j rank with q = -t^{1/2}; a polynomial in t.
inline Poly khovanov_euler(const BigradedDims& kh) {
  Poly p({"t"});
  for (const auto& [k, e] : kh.entries()) {
    int i = k.first / 2, j = k.second / 2;
    bool neg = ((i + j) % 2) != 0;
    p.add_term({j}, neg ? -e.rank : e.rank);
  }
  return p;
}

}  // namespace graphhom
