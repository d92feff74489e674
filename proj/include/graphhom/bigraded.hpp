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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace graphhom {

/// Finitely supported table of ranks over two gradings, both stored doubled.
/// Torsion orders (each >= 2) are only populated for integer coefficients.
class BigradedDims {
 public:
  using Key = std::pair<int, int>;  // (first, second) doubled
  struct Entry {
    long long rank = 0;
    std::vector<Integer> torsion;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  BigradedDims() = default;
  BigradedDims(std::string first, std::string second)
      : names_{std::move(first), std::move(second)} {}

  const std::map<Key, Entry>& entries() const { return entries_; }
  const std::pair<std::string, std::string>& names() const { return names_; }
  bool empty() const { return entries_.empty(); }

  void add_rank(int a, int b, long long r) {
    if (r == 0) return;
    auto& e = entries_[{a, b}];
    e.rank += r;
    prune({a, b});
  }

  void add_torsion(int a, int b, const Integer& order) {
    if (order < 2) return;
    auto& e = entries_[{a, b}];
    e.torsion.push_back(order);
    std::sort(e.torsion.begin(), e.torsion.end());
  }

  long long rank(int a, int b) const {
    auto it = entries_.find({a, b});
    return it == entries_.end() ? 0 : it->second.rank;
  }

  long long total_rank() const {
    long long s = 0;
    for (const auto& [k, e] : entries_) s += e.rank;
    return s;
  }

  std::size_t torsion_count() const {
    std::size_t s = 0;
    for (const auto& [k, e] : entries_) s += e.torsion.size();
    return s;
  }

  /// Direct sum.
  BigradedDims& operator+=(const BigradedDims& o) {
    if (names_.first.empty()) names_ = o.names_;
    for (const auto& [k, e] : o.entries_) {
      auto& m = entries_[k];
      m.rank += e.rank;
      m.torsion.insert(m.torsion.end(), e.torsion.begin(), e.torsion.end());
      std::sort(m.torsion.begin(), m.torsion.end());
      prune(k);
    }
    return *this;
  }
  friend BigradedDims operator+(BigradedDims a, const BigradedDims& b) { return a += b; }

  /// Rank-level tensor product (gradings add); torsion is not propagated.
  friend BigradedDims tensor(const BigradedDims& a, const BigradedDims& b) {
    BigradedDims r(a.names_.first, a.names_.second);
    for (const auto& [ka, ea] : a.entries_) {
      for (const auto& [kb, eb] : b.entries_) {
        r.add_rank(ka.first + kb.first, ka.second + kb.second, ea.rank * eb.rank);
      }
    }
    return r;
  }

  /// Shifts both doubled gradings.
  BigradedDims shifted(int da, int db) const {
    BigradedDims r(names_.first, names_.second);
    for (const auto& [k, e] : entries_) r.entries_[{k.first + da, k.second + db}] = e;
    return r;
  }

  /// Negates both gradings (dual reindexing).
  BigradedDims negated() const {
    BigradedDims r(names_.first, names_.second);
    for (const auto& [k, e] : entries_) r.entries_[{-k.first, -k.second}] = e;
    return r;
  }

  /// Ranks only, for comparisons that ignore torsion.
  BigradedDims ranks_only() const {
    BigradedDims r(names_.first, names_.second);
    for (const auto& [k, e] : entries_) r.add_rank(k.first, k.second, e.rank);
    return r;
  }

  /// Poincare polynomial with u marking the first grading and t the second.
  Poly2 poincare(const std::string& u = "u", const std::string& t = "t") const {
    Poly2 p({u, t});
    for (const auto& [k, e] : entries_) p.add_term({k.first, k.second}, e.rank);
    return p;
  }

  /// Poincare polynomial in the first grading only.
  Poly poincare_first(const std::string& u = "u") const {
    Poly p({u});
    for (const auto& [k, e] : entries_) p.add_term({k.first}, e.rank);
    return p;
  }

  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [k, e] : entries_) {
      nlohmann::json row{{names_.first + "2", k.first}, {names_.second + "2", k.second},
                         {"rank", e.rank}};
      if (!e.torsion.empty()) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& o : e.torsion) t.push_back(integer_to_json(o));
        row["torsion"] = t;
      }
      rows.push_back(row);
    }
    return rows;
  }

  friend bool operator==(const BigradedDims& a, const BigradedDims& b) {
    return a.entries_ == b.entries_;
  }

 private:
  void prune(const Key& k) {
    auto it = entries_.find(k);
    if (it != entries_.end() && it->second.rank == 0 && it->second.torsion.empty()) {
      entries_.erase(it);
    }
  }

  std::pair<std::string, std::string> names_{"i", "j"};
  std::map<Key, Entry> entries_;
};

}  // namespace graphhom
