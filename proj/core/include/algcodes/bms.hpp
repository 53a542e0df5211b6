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

#include <iosfwd>
#include <string>
#include <vector>

#include "algcodes/geometry.hpp"
#include "algcodes/poly.hpp"
#include "algcodes/transform.hpp"

namespace algcodes {

/// Minimal Groebner basis together with its staircase. Every element is
/// monic at its leading term.
struct GroebnerBasis {
  std::vector<Poly2> elements;
  SupportSet delta;
  /// The order leading terms refer to (always a monomial order).
  MonomialOrder order = MonomialOrder::graded();

  std::vector<Monomial> leads() const;
};

/// A grid with a mask of known cells.
class PartialArray {
 public:
  PartialArray() = default;
  explicit PartialArray(int side) : values_(side), known_(static_cast<size_t>(side) * side, false) {}
  /// Fully known array.
  explicit PartialArray(Array2D full);
  /// Values of source on the cells of support, unknown elsewhere.
  static PartialArray restrict_to(const Array2D& source, const SupportSet& support);

  int side() const noexcept { return values_.side(); }
  bool known(Monomial c) const { return known_[index(c)]; }
  Elt value(Monomial c) const { return values_(c.i, c.j); }
  void set(Monomial c, Elt v);
  bool is_full() const;
  const Array2D& values() const noexcept { return values_; }

 private:
  size_t index(Monomial c) const { return static_cast<size_t>(c.i) * values_.side() + c.j; }

  Array2D values_;
  std::vector<bool> known_;
};

/// Sakata's two-dimensional Berlekamp-Massey algorithm.
///
/// Cells are processed in order.groebner_order(). A fully known array is
/// treated as periodic with period q-1 in both indices and processing runs
/// until each element has been checked on a full period beyond its leading
/// term, so the result is the reduced Groebner basis of the ideal of all
/// recurrences of the array. Otherwise the longest initial segment of known
/// cells inside the grid is processed and the basis describes that prefix.
GroebnerBasis bms(const Field& f, const PartialArray& known, const MonomialOrder& order);

/// Groebner basis of the ideal of polynomials vanishing on points, computed
/// by bms over dft2 of the points' indicator array. Throws ZeroCoordinatePoint.
GroebnerBasis vanishing_ideal_basis(const std::vector<Point>& points, const MonomialOrder& order, const Field& f);

enum class FillSchedule {
  RowMajor,    ///< repeated row-major sweeps
  OrderSweep,  ///< repeated sweeps in the basis order
};

/// Fills every unknown cell by the linear recurrences of the basis elements,
/// reducing shifted indices mod q-1. Throws IncompleteCover when a cell is
/// unreachable and InconsistentKnownValues when the result violates a
/// recurrence somewhere in the grid.
Array2D extend(const Field& f, const PartialArray& partial, const GroebnerBasis& basis,
               FillSchedule schedule = FillSchedule::RowMajor);

/// Text form: "basis <count> <order-name>" then per element "poly <terms>"
/// followed by one "i j log" line per term.
void write_basis(std::ostream& out, const GroebnerBasis& basis);
GroebnerBasis read_basis(std::istream& in, const MonomialOrder& order);

/// Staircase of a set of leading monomials: cells not divisible by any
/// lead, restricted to [0, bound)^2.
SupportSet staircase_of(const std::vector<Monomial>& leads, const MonomialOrder& order, int bound);

}  // namespace algcodes
