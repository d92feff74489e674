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
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace graphhom {

using Integer = boost::multiprecision::cpp_int;

class PolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact Laurent polynomial in N variables with integer coefficients.
///
/// Exponents are stored doubled so that half-integer powers such as t^{1/2}
/// are representable: the monomial t^{3/2} has stored exponent 3. Zero
/// coefficients are never stored.
template <std::size_t N>
class Laurent {
 public:
  using Exponent = std::array<int, N>;
  using Names = std::array<std::string, N>;
  using Terms = std::map<Exponent, Integer>;

  Laurent() = default;
  explicit Laurent(Names names) : names_(std::move(names)) {}

  static Laurent constant(Names names, const Integer& c) {
    Laurent p(std::move(names));
    p.add_term(Exponent{}, c);
    return p;
  }

  /// Monomial c * x^{e/2}; `doubled` holds the doubled exponents.
  static Laurent monomial(Names names, Exponent doubled, const Integer& c = 1) {
    Laurent p(std::move(names));
    p.add_term(doubled, c);
    return p;
  }

  const Names& names() const { return names_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Exponent& doubled) const {
    auto it = terms_.find(doubled);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Exponent& doubled, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(doubled, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    adopt_names(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    adopt_names(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }
  Laurent& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Laurent operator*(Laurent a, const Integer& k) { return a *= k; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r(a.names_);
    r.adopt_names(b);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  /// Total order on coefficient maps; used for deterministic sorting.
  friend bool operator<(const Laurent& a, const Laurent& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(),
                                        b.terms_.begin(), b.terms_.end());
  }

  Laurent pow(unsigned k) const {
    Laurent r = constant(names_, 1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// Multiplies every stored exponent of variable `var` by num/den.
  /// Throws if some exponent is not divisible.
  Laurent rescaled(std::size_t var, int num, int den, Names names) const {
    Laurent r(std::move(names));
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      long long v = static_cast<long long>(e[var]) * num;
      if (v % den != 0) {
        throw PolynomialError("exponent " + std::to_string(e[var]) +
                              " not divisible under rescaling");
      }
      f[var] = static_cast<int>(v / den);
      r.add_term(f, c);
    }
    return r;
  }

  /// Shifts the doubled exponents by `by`.
  Laurent shifted(const Exponent& by) const {
    Laurent r(names_);
    for (const auto& [e, c] : terms_) {
      Exponent f;
      for (std::size_t i = 0; i < N; ++i) f[i] = e[i] + by[i];
      r.terms_.emplace(f, c);
    }
    return r;
  }

  /// Doubled exponent bounds of variable `var`; requires a nonzero polynomial.
  std::pair<int, int> degree_range(std::size_t var) const {
    if (is_zero()) throw PolynomialError("degree of the zero polynomial");
    int lo = terms_.begin()->first[var], hi = lo;
    for (const auto& [e, c] : terms_) {
      lo = std::min(lo, e[var]);
      hi = std::max(hi, e[var]);
    }
    return {lo, hi};
  }

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void adopt_names(const Laurent& o) {
    if (names_ == o.names_) return;
    if (names_ == Names{}) {
      names_ = o.names_;
      return;
    }
    if (o.names_ == Names{}) return;
    throw PolynomialError("variable tag mismatch: " + join_names(names_) +
                          " vs " + join_names(o.names_));
  }

  static std::string join_names(const Names& n) {
    std::string s;
    for (const auto& v : n) s += (s.empty() ? "" : ",") + v;
    return "(" + s + ")";
  }

  Names names_{};
  Terms terms_;
};

using Poly = Laurent<1>;
using Poly2 = Laurent<2>;

namespace detail {

inline std::string power_string(const std::string& var, int doubled) {
  if (doubled == 0) return "";
  if (doubled % 2 != 0) return var + "^(" + std::to_string(doubled) + "/2)";
  int k = doubled / 2;
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace detail

template <std::size_t N>
std::string Laurent<N>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < N; ++i) {
      std::string p = detail::power_string(names_[i], e[i]);
      if (p.empty()) continue;
      mono += (mono.empty() ? "" : "*") + p;
    }
    Integer mag = c < 0 ? Integer(-c) : c;
    std::string term;
    if (mono.empty()) {
      term = mag.str();
    } else if (mag == 1) {
      term = mono;
    } else {
      term = mag.str() + "*" + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

inline nlohmann::json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() &&
      c <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(c);
  }
  return c.str();
}

template <std::size_t N>
nlohmann::json Laurent<N>::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : terms_) {
    std::string key;
    for (std::size_t i = 0; i < N; ++i) {
      key += (i ? "," : "") + std::to_string(e[i]);
    }
    j[key] = integer_to_json(c);
  }
  return j;
}

inline Poly make_t(int doubled, const Integer& c = 1, const std::string& var = "t") {
  return Poly::monomial({var}, {doubled}, c);
}

/// t^{1/2} - t^{-1/2}.
inline Poly t_half_difference(const std::string& var = "t") {
  return make_t(1, 1, var) - make_t(-1, 1, var);
}

/// How half-integer powers of u are treated when substituting u = -1.
enum class HalfGrading {
  kReject,   // odd doubled u-exponents are an error
  kShiftUp,  // multiply by u^{1/2} first, then substitute
};

/// Substitutes u = -1 into P(u, t) (variable 0 is u); result is a polynomial in t.
inline Poly euler_substitute(const Poly2& p, HalfGrading mode = HalfGrading::kReject) {
  Poly r({p.names()[1].empty() ? std::string("t") : p.names()[1]});
  bool any_odd = false, any_even = false;
  for (const auto& [e, c] : p.terms()) (e[0] % 2 != 0 ? any_odd : any_even) = true;
  if (any_odd && mode == HalfGrading::kReject) {
    throw PolynomialError("half-integer u-exponent without a declared convention");
  }
  if (any_odd && any_even) {
    throw PolynomialError("mixed integer and half-integer u-exponents");
  }
  for (const auto& [e, c] : p.terms()) {
    int m = e[0] % 2 != 0 ? e[0] + 1 : e[0];
    int k = m / 2;
    r.add_term({e[1]}, (k % 2 == 0) ? c : Integer(-c));
  }
  return r;
}

/// Multiplies by +-t^{k/2} so the support is centred on 0 and the
/// leading coefficient is positive. Idempotent.
inline Poly normalize_alexander(const Poly& p) {
  if (p.is_zero()) throw PolynomialError("cannot normalize the zero polynomial");
  auto [lo, hi] = p.degree_range(0);
  int s = lo + hi;
  // floor division so odd spans still land deterministically
  int shift = -(s >= 0 ? s / 2 : -((-s + 1) / 2));
  Poly r = p.shifted({shift});
  if (r.terms().rbegin()->second < 0) r = -r;
  return r;
}

/// Evaluates a polynomial in z (non-negative integer powers) at z = value.
inline Poly substitute_z(const Poly& conway, const Poly& value) {
  Poly r = Poly::constant(value.names(), 0);
  if (conway.is_zero()) return r;
  auto [lo, hi] = conway.degree_range(0);
  if (lo < 0 || lo % 2 != 0 || hi % 2 != 0) {
    throw PolynomialError("substitute_z expects integer non-negative powers");
  }
  for (int k = hi / 2; k >= 0; --k) {
    r = r * value + Poly::constant(value.names(), conway.coefficient({2 * k}));
  }
  return r;
}

/// Alexander polynomial from the Conway polynomial via z = t^{1/2} - t^{-1/2}.
inline Poly conway_to_alexander(const Poly& conway) {
  return substitute_z(conway, t_half_difference("t"));
}

}  // namespace graphhom
