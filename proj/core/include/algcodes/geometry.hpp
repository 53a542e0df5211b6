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
#include <vector>

#include "algcodes/galois.hpp"
#include "algcodes/order.hpp"
#include "algcodes/poly.hpp"

namespace algcodes {

/// Plane curve of C_a^b type given by its affine defining polynomial.
class CurveSpec {
 public:
  /// Throws InvalidArgument unless gcd(a, b) == 1, a < b and the polynomial
  /// contains both y^a and x^b.
  CurveSpec(int a, int b, Poly2 defining_poly);

  /// y^r + y - x^(r+1) over GF(r^2); requires q to be a perfect square.
  static CurveSpec hermitian(const Field& f);

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int genus() const noexcept { return (a_ - 1) * (b_ - 1) / 2; }
  const Poly2& defining_poly() const noexcept { return poly_; }

 private:
  int a_;
  int b_;
  Poly2 poly_;
};

struct Point {
  Elt x;
  Elt y;

  bool has_zero_coordinate() const noexcept { return x.is_zero() || y.is_zero(); }
  /// Grid cell (log x, log y); only meaningful when both coordinates are nonzero.
  Monomial cell() const noexcept { return {x.log, y.log}; }

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// Affine zeros of poly, ordered by (log x, log y). With include_zero false
/// only points with xy != 0 are returned.
std::vector<Point> enumerate_points(const Field& f, const Poly2& poly, bool include_zero);
std::vector<Point> enumerate_points(const CurveSpec& c, const Field& f, bool include_zero);

/// Ordered set of exponent pairs: a defining set or a staircase.
class SupportSet {
 public:
  SupportSet() = default;
  SupportSet(std::vector<Monomial> cells, const MonomialOrder& order);

  const std::vector<Monomial>& cells() const noexcept { return cells_; }
  int size() const noexcept { return static_cast<int>(cells_.size()); }
  bool contains(Monomial m) const;
  bool is_downward_closed() const;
  /// Equality as sets, ignoring order.
  bool same_cells(const SupportSet& other) const;

 private:
  std::vector<Monomial> cells_;
  std::vector<Monomial> sorted_;  // lexicographic, for lookup
};

/// Defining set of C(m). WeightedCurve: i < q-1, j < a, a*i + b*j <= m.
/// Hyperbolic: i, j < q-1, (i+1)(j+1) < m.
SupportSet phi_m(const MonomialOrder& order, int m, const Field& f, int a);

struct CodeParams {
  int n = 0;
  int k = 0;
};

/// n = #points, k = n - #phi_m. Throws MTooSmall when m <= 2g - 2.
CodeParams curve_code_params(const CurveSpec& c, const Field& f, int m);
CodeParams hcrs_code_params(const Field& f, int m);
/// Reed-Solomon of length q-1 with r check symbols; throws BadRedundancy.
CodeParams rs_code_params(const Field& f, int r);

}  // namespace algcodes
