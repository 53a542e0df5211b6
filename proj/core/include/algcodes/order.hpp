/*
 * Copyright 2026 The algcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <string>
#include <vector>

namespace algcodes {

/// Exponent pair (i, j) of the monomial x^i y^j; also a grid cell index.
struct Monomial {
  int i = 0;
  int j = 0;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
  friend constexpr Monomial operator+(Monomial a, Monomial b) { return {a.i + b.i, a.j + b.j}; }
  friend constexpr Monomial operator-(Monomial a, Monomial b) { return {a.i - b.i, a.j - b.j}; }
};

/// Componentwise a <= b, i.e. x^a divides x^b.
constexpr bool divides(Monomial a, Monomial b) { return a.i <= b.i && a.j <= b.j; }

/// Total orders on exponent pairs. All three kinds compare by a weight first
/// and break ties by the smaller y-exponent.
///
///  - WeightedCurve(a, b): weight a*i + b*j, the pole order on a C_a^b curve.
///  - Hyperbolic: weight (i+1)(j+1). Not compatible with multiplication, so
///    Groebner-basis leading terms are taken in groebner_order() instead.
///  - Graded: weight i + j.
class MonomialOrder {
 public:
  enum class Kind { WeightedCurve, Hyperbolic, Graded };

  static MonomialOrder weighted(int a, int b);
  static MonomialOrder hyperbolic() { return MonomialOrder(Kind::Hyperbolic, 1, 1); }
  static MonomialOrder graded() { return MonomialOrder(Kind::Graded, 1, 1); }

  Kind kind() const noexcept { return kind_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }

  long long weight(Monomial m) const noexcept;
  bool less(Monomial x, Monomial y) const noexcept;
  bool is_monomial_order() const noexcept { return kind_ != Kind::Hyperbolic; }
  /// The order used for leading terms and for the BMS processing sequence.
  MonomialOrder groebner_order() const noexcept { return is_monomial_order() ? *this : graded(); }

  void sort(std::vector<Monomial>& cells) const;

  /// Visits N^2 in increasing order until visit returns false.
  /// Only valid for monomial orders.
  template <class Visit>
  void enumerate(Visit&& visit) const {
    for (long long w = 0;; ++w)
      for (long long j = 0; j * b_ <= w; ++j)
        if ((w - j * b_) % a_ == 0)
          if (!visit(Monomial{static_cast<int>((w - j * b_) / a_), static_cast<int>(j)})) return;
  }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, int a, int b) : kind_(k), a_(a), b_(b) {}

  Kind kind_;
  int a_;
  int b_;
};

}  // namespace algcodes
