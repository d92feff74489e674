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
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace graphhom {

/// Sparse matrix over F2 stored by columns: column s lists the row indices
/// of its nonzero entries (the boundary of basis element s), sorted.
struct SparseF2 {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> columns;

  SparseF2() = default;
  SparseF2(int r, int c) : rows(r), cols(c), columns(c) {}

  /// Toggles entry (r, c); call finalize() before use.
  void toggle(int r, int c) { columns[c].push_back(r); }

  void finalize() {
    for (auto& col : columns) {
      std::sort(col.begin(), col.end());
      std::vector<int> out;
      for (std::size_t i = 0; i < col.size();) {
        std::size_t j = i;
        while (j < col.size() && col[j] == col[i]) ++j;
        if ((j - i) & 1) out.push_back(col[i]);
        i = j;
      }
      col.swap(out);
    }
  }
};

namespace detail {

inline void xor_into(std::vector<int>& acc, const std::vector<int>& v, std::vector<int>& tmp) {
  tmp.clear();
  std::set_symmetric_difference(acc.begin(), acc.end(), v.begin(), v.end(),
                                std::back_inserter(tmp));
  acc.swap(tmp);
}

}  // namespace detail

/// Rank over F2 by column reduction keyed on the largest row index
/// (low-pivot reduction); sparse columns stay sparse in practice.
inline int f2_rank(const SparseF2& m) {
  std::vector<int> owner(m.rows, -1);
  std::vector<std::vector<int>> reduced;
  reduced.reserve(m.cols);
  std::vector<int> tmp;
  int rank = 0;
  for (const auto& c : m.columns) {
    std::vector<int> col = c;
    while (!col.empty()) {
      int low = col.back();
      if (owner[low] < 0) break;
      detail::xor_into(col, reduced[owner[low]], tmp);
    }
    if (col.empty()) continue;
    owner[col.back()] = static_cast<int>(reduced.size());
    reduced.push_back(std::move(col));
    ++rank;
  }
  return rank;
}

/// True when b * a = 0, with a: X -> Y and b: Y -> Z.
inline bool f2_composes_to_zero(const SparseF2& a, const SparseF2& b) {
  if (a.rows != b.cols) throw std::invalid_argument("f2_composes_to_zero: shape mismatch");
  std::vector<char> acc(b.rows, 0);
  std::vector<int> touched;
  for (const auto& col : a.columns) {
    touched.clear();
    for (int y : col) {
      for (int z : b.columns[y]) {
        acc[z] ^= 1;
        touched.push_back(z);
      }
    }
    bool bad = false;
    for (int z : touched) {
      bad |= acc[z] != 0;
      acc[z] = 0;
    }
    if (bad) return false;
  }
  return true;
}

/// Sparse integer matrix stored by columns.
struct SparseZ {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, Integer>> columns;

  SparseZ() = default;
  SparseZ(int r, int c) : rows(r), cols(c), columns(c) {}

  void add(int r, int c, const Integer& v) {
    auto& e = columns[c][r];
    e += v;
    if (e == 0) columns[c].erase(r);
  }
};

inline bool z_composes_to_zero(const SparseZ& a, const SparseZ& b) {
  if (a.rows != b.cols) throw std::invalid_argument("z_composes_to_zero: shape mismatch");
  for (const auto& col : a.columns) {
    std::map<int, Integer> acc;
    for (const auto& [y, v] : col) {
      for (const auto& [z, w] : b.columns[y]) acc[z] += v * w;
    }
    for (const auto& [z, v] : acc) {
      if (v != 0) return false;
    }
  }
  return true;
}

namespace detail {

/// Invariant factors of a dense integer matrix by repeated row/column
/// reduction around the smallest nonzero entry.
inline std::vector<Integer> dense_smith(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> out;
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  int t = 0;
  while (t < m && t < n) {
    // smallest nonzero entry in the trailing block
    int pr = -1, pc = -1;
    for (int i = t; i < m; ++i) {
      for (int j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        if (pr < 0 || abs(a[i][j]) < abs(a[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: pivot must divide the whole trailing block
      for (int i = t + 1; i < m && clean; ++i) {
        for (int j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (int k = t; k < n; ++k) a[t][k] += a[i][k];
            clean = false;
            break;
          }
        }
      }
    }
    out.push_back(abs(a[t][t]));
    ++t;
  }
  return out;
}

}  // namespace detail

/// Nonzero invariant factors of `m`. Unit pivots are eliminated sparsely
/// first; the remainder goes through dense Smith normal form.
inline std::vector<Integer> smith_invariants(const SparseZ& m) {
  // row-major working copy
  std::vector<std::map<int, Integer>> rows(m.rows);
  std::vector<std::set<int>> col_rows(m.cols);
  for (int c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.columns[c]) {
      rows[r][c] = v;
      col_rows[c].insert(r);
    }
  }
  std::vector<char> row_dead(m.rows, 0), col_dead(m.cols, 0);
  int units = 0;
  // lazy min-heap of (row length, row); stale entries are skipped on pop
  using Entry = std::pair<std::size_t, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (int r = 0; r < m.rows; ++r) {
    if (!rows[r].empty()) heap.emplace(rows[r].size(), r);
  }
  for (;;) {
    int br = -1, bc = -1;
    while (!heap.empty() && br < 0) {
      auto [len, r] = heap.top();
      heap.pop();
      if (row_dead[r] || rows[r].size() != len || len == 0) continue;
      std::size_t best = SIZE_MAX;
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        if (col_rows[c].size() < best) {
          best = col_rows[c].size();
          bc = c;
        }
      }
      // a row without units re-enters the heap once it changes
      if (bc >= 0) br = r;
    }
    if (br < 0) break;
    const Integer p = rows[br][bc];
    std::vector<int> targets(col_rows[bc].begin(), col_rows[bc].end());
    for (int r : targets) {
      if (r == br) continue;
      Integer f = rows[r][bc] * p;  // p = +-1 so p^{-1} = p
      for (const auto& [c, v] : rows[br]) {
        auto& e = rows[r][c];
        e -= f * v;
        if (e == 0) {
          rows[r].erase(c);
          col_rows[c].erase(r);
        } else {
          col_rows[c].insert(r);
        }
      }
      if (!rows[r].empty()) heap.emplace(rows[r].size(), r);
    }
    // drop pivot row and column; column ops clear the row without side effects
    for (const auto& [c, v] : rows[br]) col_rows[c].erase(br);
    rows[br].clear();
    row_dead[br] = 1;
    col_dead[bc] = 1;
    ++units;
  }
  std::vector<int> live_rows, live_cols;
  std::map<int, int> col_index;
  for (int r = 0; r < m.rows; ++r) {
    if (!row_dead[r] && !rows[r].empty()) live_rows.push_back(r);
  }
  for (int c = 0; c < m.cols; ++c) {
    if (!col_dead[c] && !col_rows[c].empty()) {
      col_index[c] = static_cast<int>(live_cols.size());
      live_cols.push_back(c);
    }
  }
  std::vector<Integer> out(units, Integer(1));
  if (!live_rows.empty() && !live_cols.empty()) {
    std::vector<std::vector<Integer>> dense(live_rows.size(),
                                            std::vector<Integer>(live_cols.size(), 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      for (const auto& [c, v] : rows[live_rows[i]]) dense[i][col_index.at(c)] = v;
    }
    auto rest = detail::dense_smith(std::move(dense));
    out.insert(out.end(), rest.begin(), rest.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphhom
