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

#include <map>

#include "algcodes/galois.hpp"
#include "algcodes/order.hpp"

namespace algcodes {

/// Sparse bivariate polynomial; zero coefficients are never stored.
class Poly2 {
 public:
  using Terms = std::map<Monomial, Elt>;

  Poly2() = default;

  static Poly2 monomial(Monomial m, Elt c = Elt::one());

  void set(Monomial m, Elt c);
  Elt coeff(Monomial m) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  size_t size() const noexcept { return terms_.size(); }

  Monomial lead(const MonomialOrder& order) const;

  /// Value at (x, y) with the convention 0^0 = 1.
  Elt evaluate(const Field& f, Elt x, Elt y) const;

  /// this += c * x^shift * other
  void add_scaled(const Field& f, const Poly2& other, Elt c, Monomial shift = {});

  Poly2 scaled(const Field& f, Elt c) const;

  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  Terms terms_;
};

}  // namespace algcodes
