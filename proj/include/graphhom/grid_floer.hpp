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
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bigraded.hpp"
#include "grid.hpp"
#include "guard.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace graphhom {

inline constexpr int kDefaultGridCap = 8;

class FloerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gradings of a grid state x (x[i] = row of the point in column i).
/// Maslov is reported shifted by (l-1)/2; both values are doubled.
struct GridGradings {
  int m2 = 0;
  int a2 = 0;
};

namespace detail {

/// #{(p, q) : p in P, q in Q, p < q in both coordinates}, on doubled lattices.
inline int count_below(const std::vector<std::pair<int, int>>& P,
                       const std::vector<std::pair<int, int>>& Q) {
  int k = 0;
  for (auto [px, py] : P) {
    for (auto [qx, qy] : Q) k += px < qx && py < qy;
  }
  return k;
}

struct GridPoints {
  std::vector<std::pair<int, int>> X, O;
  int ixx = 0, ioo = 0;
  int components = 0;

  explicit GridPoints(const GridDiagram& g) {
    for (int r = 0; r < g.n; ++r) {
      X.emplace_back(2 * g.X[r] + 1, 2 * r + 1);
      O.emplace_back(2 * g.O[r] + 1, 2 * r + 1);
    }
    ixx = count_below(X, X);
    ioo = count_below(O, O);
    components = grid_component_count(g);
  }
};

inline GridGradings gradings(const GridDiagram& g, const GridPoints& pts,
                             const std::vector<int>& x) {
  std::vector<std::pair<int, int>> P;
  for (int i = 0; i < g.n; ++i) P.emplace_back(2 * i, 2 * x[i]);
  int ixx = count_below(P, P);
  int ixo = count_below(P, pts.O), iox = count_below(pts.O, P);
  int ixX = count_below(P, pts.X), iXx = count_below(pts.X, P);
  int m = ixx - ixo - iox + pts.ioo + 1;
  int a2 = (ixX + iXx) - (ixo + iox) - pts.ixx + pts.ioo - (g.n - pts.components);
  return {2 * m + (pts.components - 1), a2};
}

/// Lehmer rank of a permutation of 0..n-1.
inline int perm_rank(const std::vector<int>& p) {
  int n = static_cast<int>(p.size()), r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    r = r * (n - i) + smaller;
  }
  return r;
}

/// Homology of a grid complex over F2. Rectangles may not contain markings
/// for which `blocked` holds; the grading key must drop the first entry by
/// 2 and keep the second along every rectangle.
struct GridComplexResult {
  BigradedDims dims;
  long long generators = 0;
  bool d_squared_zero = true;
};

inline GridComplexResult grid_complex_homology(const GridDiagram& g, bool block_x, int cap,
                                               bool check_d2, bool keep_alexander) {
  require_grid(g);
  const int n = g.n;
  if (n > cap) {
    throw ResourceError("grid size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }
  long long count = 1;
  for (int i = 2; i <= n; ++i) count *= i;
  check_memory(static_cast<std::uint64_t>(count) * (n * (n - 1) * 8 + 64), "grid complex");
  GridPoints pts(g);
  std::vector<int> x(n);
  std::iota(x.begin(), x.end(), 0);
  std::vector<std::pair<int, int>> key(count);
  std::vector<std::vector<int>> states(count);
  do {
    int r = perm_rank(x);
    auto gr = gradings(g, pts, x);
    key[r] = {gr.m2, keep_alexander ? gr.a2 : 0};
    states[r] = x;
  } while (std::next_permutation(x.begin(), x.end()));
  // blocks by grading key
  std::map<std::pair<int, int>, std::vector<int>> blocks;
  std::vector<int> local(count);
  for (int r = 0; r < count; ++r) {
    auto& b = blocks[key[r]];
    local[r] = static_cast<int>(b.size());
    b.push_back(r);
  }
  std::map<std::pair<int, int>, SparseF2> diff;  // source key -> matrix
  for (const auto& [k, b] : blocks) {
    auto it = blocks.find({k.first - 2, k.second});
    int rows = it == blocks.end() ? 0 : static_cast<int>(it->second.size());
    diff.emplace(k, SparseF2(rows, static_cast<int>(b.size())));
  }
  auto mod = [n](int a) { return ((a % n) + n) % n; };
  auto empty_rect = [&](const std::vector<int>& s, int cs, int w, int rs, int h) {
    for (int k = 1; k < w; ++k) {
      int rel = mod(s[mod(cs + k)] - rs);
      if (rel >= 1 && rel < h) return false;
    }
    for (int k = 0; k < h; ++k) {
      int r = mod(rs + k);
      if (mod(g.O[r] - cs) < w) return false;
      if (block_x && mod(g.X[r] - cs) < w) return false;
    }
    return true;
  };
  for (int r = 0; r < count; ++r) {
    const auto& s = states[r];
    auto& m = diff.at(key[r]);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        int hits = 0;
        if (empty_rect(s, i, j - i, s[i], mod(s[j] - s[i]))) ++hits;
        if (empty_rect(s, j, n - (j - i), s[j], mod(s[i] - s[j]))) ++hits;
        if (hits % 2 == 0) continue;
        auto y = s;
        std::swap(y[i], y[j]);
        int yr = perm_rank(y);
        if (key[yr].first != key[r].first - 2 || key[yr].second != key[r].second) {
          throw FloerError("grid complex: rectangle breaks the grading");
        }
        m.toggle(local[yr], local[r]);
      }
    }
  }
  GridComplexResult res;
  res.generators = count;
  res.dims = BigradedDims("M", "A");
  std::map<std::pair<int, int>, int> rank;
  for (auto& [k, m] : diff) {
    m.finalize();
    rank[k] = f2_rank(m);
  }
  if (check_d2) {
    for (const auto& [k, m] : diff) {
      auto next = diff.find({k.first - 2, k.second});
      if (next != diff.end() && !f2_composes_to_zero(m, next->second)) {
        res.d_squared_zero = false;
      }
    }
  }
  for (const auto& [k, b] : blocks) {
    auto up = rank.find({k.first + 2, k.second});
    long long h = static_cast<long long>(b.size()) - rank[k] -
                  (up == rank.end() ? 0 : up->second);
    if (h) res.dims.add_rank(k.first, k.second, h);
  }
  return res;
}

}  // namespace detail

inline GridGradings grid_gradings(const GridDiagram& g, const std::vector<int>& x) {
  return detail::gradings(g, detail::GridPoints(g), x);
}

/// Divides a rank table by (1 + u^dm t^da)^power (doubled steps, both
/// negative). Throws when the quotient is not a nonnegative table.
inline BigradedDims deconvolve(const BigradedDims& p, int dm, int da, int power) {
  std::map<BigradedDims::Key, long long> cur;
  for (const auto& [k, e] : p.entries()) cur[k] = e.rank;
  for (int step = 0; step < power; ++step) {
    std::map<BigradedDims::Key, long long> q;
    std::set<BigradedDims::Key, std::greater<>> work;
    for (const auto& [k, v] : cur) work.insert(k);
    while (!work.empty()) {
      auto k = *work.begin();
      work.erase(work.begin());
      long long pv = cur.count(k) ? cur.at(k) : 0;
      auto prev = q.find({k.first - dm, k.second - da});
      long long v = pv - (prev == q.end() ? 0 : prev->second);
      if (v < 0) throw FloerError("deconvolution left a negative rank");
      if (v > 0) {
        q[k] = v;
        work.insert({k.first + dm, k.second + da});
      }
    }
    cur = std::move(q);
  }
  BigradedDims out(p.names().first, p.names().second);
  for (const auto& [k, v] : cur) out.add_rank(k.first, k.second, v);
  // exactness: multiply back
  BigradedDims back = out;
  for (int step = 0; step < power; ++step) {
    BigradedDims b2(p.names().first, p.names().second);
    for (const auto& [k, e] : back.entries()) {
      b2.add_rank(k.first, k.second, e.rank);
      b2.add_rank(k.first + dm, k.second + da, e.rank);
    }
    back = b2;
  }
  if (!(back == p.ranks_only())) throw FloerError("deconvolution is not exact");
  return out;
}

struct FloerOptions {
  int cap = kDefaultGridCap;
  bool check_d2 = true;
};

struct FloerResult {
  GridDiagram grid;
  int components = 0;
  long long generators = 0;
  bool d_squared_zero = true;
  BigradedDims tilde{"M", "A"};
  BigradedDims hat{"M", "A"};
};

/// Tilde grid homology and the hat knot Floer homology it determines.
inline FloerResult hfk_hat(const GridDiagram& g, const FloerOptions& opt = {}) {
  FloerResult r;
  r.grid = g;
  r.components = grid_component_count(g);
  auto c = detail::grid_complex_homology(g, true, opt.cap, opt.check_d2, true);
  r.generators = c.generators;
  r.d_squared_zero = c.d_squared_zero;
  r.tilde = c.dims;
  r.hat = deconvolve(c.dims, -2, -2, g.n - r.components);
  return r;
}

/// Homology with only O markings blocked, reduced to one copy per basepoint
/// pair beyond the first: the total Floer homology, graded by Maslov.
inline Poly total_floer_homology(const GridDiagram& g, const FloerOptions& opt = {}) {
  auto c = detail::grid_complex_homology(g, false, opt.cap, opt.check_d2, false);
  if (!c.d_squared_zero) throw FloerError("total complex: d^2 != 0");
  auto q = deconvolve(c.dims, -2, 0, g.n - grid_component_count(g));
  return q.poincare_first("u");
}

/// sum (-1)^M rank t^A over hat entries, with M unshifted.
inline Poly floer_euler(const BigradedDims& hat, int components) {
  Poly p({"t"});
  for (const auto& [k, e] : hat.entries()) {
    int m = (k.first - (components - 1)) / 2;
    p.add_term({k.second}, (m % 2 != 0) ? -e.rank : e.rank);
  }
  return p;
}

}  // namespace graphhom
