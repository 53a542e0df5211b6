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

#include "algcodes/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "algcodes/error.hpp"

namespace algcodes {

CurveSpec::CurveSpec(int a, int b, Poly2 defining_poly) : a_(a), b_(b), poly_(std::move(defining_poly)) {
  if (a <= 0 || b <= 0 || a >= b || std::gcd(a, b) != 1)
    throw Error(ErrorCode::InvalidArgument, "curve parameters need 0 < a < b with gcd(a, b) = 1");
  if (poly_.coeff({0, a}).is_zero() || poly_.coeff({b, 0}).is_zero())
    throw Error(ErrorCode::InvalidArgument, "defining polynomial lacks the y^a or x^b term");
  const auto order = MonomialOrder::weighted(a, b);
  for (const auto& [m, c] : poly_.terms())
    if (order.weight(m) > static_cast<long long>(a) * b)
      throw Error(ErrorCode::InvalidArgument, "defining polynomial has a term above weight ab");
}

CurveSpec CurveSpec::hermitian(const Field& f) {
  int r = 1;
  while (r * r < f.q()) ++r;
  if (r * r != f.q()) throw Error(ErrorCode::InvalidArgument, "Hermitian curve needs a square field size");
  Poly2 p;
  p.set({0, r}, Elt::one());
  p.set({0, 1}, Elt::one());
  p.set({r + 1, 0}, f.neg(Elt::one()));
  return CurveSpec(r, r + 1, std::move(p));
}

std::vector<Point> enumerate_points(const Field& f, const Poly2& poly, bool include_zero) {
  std::vector<Point> pts;
  for (int lx = -1; lx < f.order(); ++lx)
    for (int ly = -1; ly < f.order(); ++ly) {
      const Point p{Elt{lx}, Elt{ly}};
      if (!include_zero && p.has_zero_coordinate()) continue;
      if (poly.evaluate(f, p.x, p.y).is_zero()) pts.push_back(p);
    }
  return pts;
}

std::vector<Point> enumerate_points(const CurveSpec& c, const Field& f, bool include_zero) {
  return enumerate_points(f, c.defining_poly(), include_zero);
}

SupportSet::SupportSet(std::vector<Monomial> cells, const MonomialOrder& order)
    : cells_(std::move(cells)) {
  order.sort(cells_);
  sorted_ = cells_;
  std::sort(sorted_.begin(), sorted_.end());
}

bool SupportSet::contains(Monomial m) const { return std::binary_search(sorted_.begin(), sorted_.end(), m); }

bool SupportSet::is_downward_closed() const {
  for (Monomial m : cells_) {
    if (m.i > 0 && !contains({m.i - 1, m.j})) return false;
    if (m.j > 0 && !contains({m.i, m.j - 1})) return false;
  }
  return true;
}

bool SupportSet::same_cells(const SupportSet& other) const { return sorted_ == other.sorted_; }

SupportSet phi_m(const MonomialOrder& order, int m, const Field& f, int a) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "m must be non-negative");
  std::vector<Monomial> cells;
  const int n = f.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Monomial c{i, j};
      if (order.kind() == MonomialOrder::Kind::Hyperbolic) {
        if (order.weight(c) < m) cells.push_back(c);
      } else if (j < a && order.weight(c) <= m) {
        cells.push_back(c);
      }
    }
  return SupportSet(std::move(cells), order);
}

CodeParams curve_code_params(const CurveSpec& c, const Field& f, int m) {
  const int g = c.genus();
  if (m <= 2 * g - 2)
    throw Error(ErrorCode::MTooSmall, "m=" + std::to_string(m) + " must exceed 2g-2=" + std::to_string(2 * g - 2));
  const int n = static_cast<int>(enumerate_points(c, f, false).size());
  const int r = phi_m(MonomialOrder::weighted(c.a(), c.b()), m, f, c.a()).size();
  if (r >= n) throw Error(ErrorCode::InvalidArgument, "defining set leaves no information symbols");
  return {n, n - r};
}

CodeParams hcrs_code_params(const Field& f, int m) {
  const int n = f.order() * f.order();
  const int r = phi_m(MonomialOrder::hyperbolic(), m, f, 0).size();
  if (m < 2 || r >= n) throw Error(ErrorCode::InvalidArgument, "hyperbolic code needs 2 <= m with a nonempty message space");
  return {n, n - r};
}

CodeParams rs_code_params(const Field& f, int r) {
  if (r < 1 || r >= f.order())
    throw Error(ErrorCode::BadRedundancy, "redundancy must satisfy 1 <= r < q-1, got " + std::to_string(r));
  return {f.order(), f.order() - r};
}

}  // namespace algcodes
