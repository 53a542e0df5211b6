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

#include "algcodes/poly.hpp"

#include <algorithm>

#include "algcodes/error.hpp"

namespace algcodes {

MonomialOrder MonomialOrder::weighted(int a, int b) {
  if (a <= 0 || b <= 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
  return MonomialOrder(Kind::WeightedCurve, a, b);
}

long long MonomialOrder::weight(Monomial m) const noexcept {
  switch (kind_) {
    case Kind::Hyperbolic: return static_cast<long long>(m.i + 1) * (m.j + 1);
    case Kind::Graded: return static_cast<long long>(m.i) + m.j;
    case Kind::WeightedCurve: break;
  }
  return static_cast<long long>(a_) * m.i + static_cast<long long>(b_) * m.j;
}

bool MonomialOrder::less(Monomial x, Monomial y) const noexcept {
  const auto wx = weight(x), wy = weight(y);
  if (wx != wy) return wx < wy;
  return x.j < y.j;
}

void MonomialOrder::sort(std::vector<Monomial>& cells) const {
  std::sort(cells.begin(), cells.end(), [this](Monomial x, Monomial y) { return less(x, y); });
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Hyperbolic: return "hyperbolic";
    case Kind::Graded: return "graded";
    case Kind::WeightedCurve: break;
  }
  return "weighted(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

Poly2 Poly2::monomial(Monomial m, Elt c) {
  Poly2 p;
  p.set(m, c);
  return p;
}

void Poly2::set(Monomial m, Elt c) {
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

Elt Poly2::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Elt::zero() : it->second;
}

Monomial Poly2::lead(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  Monomial best = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (order.less(best, m)) best = m;
  return best;
}

Elt Poly2::evaluate(const Field& f, Elt x, Elt y) const {
  Elt acc = Elt::zero();
  for (const auto& [m, c] : terms_) acc = f.add(acc, f.mul(c, f.mul(f.pow(x, m.i), f.pow(y, m.j))));
  return acc;
}

void Poly2::add_scaled(const Field& f, const Poly2& other, Elt c, Monomial shift) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : other.terms_) {
    const Monomial t = m + shift;
    set(t, f.add(coeff(t), f.mul(c, v)));
  }
}

Poly2 Poly2::scaled(const Field& f, Elt c) const {
  Poly2 out;
  out.add_scaled(f, *this, c);
  return out;
}

}  // namespace algcodes
