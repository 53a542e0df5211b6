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
#include <cstdint>
#include <vector>

namespace algcodes {

/// A field element in logarithm notation: log == -1 is zero, log == k is
/// alpha^k. This is the representation used everywhere, including files.
struct Elt {
  int log = -1;

  static constexpr Elt zero() { return Elt{-1}; }
  static constexpr Elt one() { return Elt{0}; }

  constexpr bool is_zero() const { return log < 0; }
  friend constexpr auto operator<=>(const Elt&, const Elt&) = default;
};

/// GF(p^m) built from a primitive polynomial. Immutable after construction.
///
/// Elements are also addressable by their "vector code": the base-p integer
/// whose digits are the coefficients of the element as a polynomial in alpha
/// (lowest degree first). Addition uses a precomputed Zech logarithm table.
class Field {
 public:
  /// primitive_poly holds coefficients c_0..c_m (lowest degree first) and
  /// must be monic of degree m over GF(p).
  Field(int p, int m, std::vector<int> primitive_poly);

  /// GF(9) with x^2 + x + 2, so that alpha^3 + alpha + 1 = 0.
  static Field gf9();

  int p() const noexcept { return p_; }
  int m() const noexcept { return m_; }
  int q() const noexcept { return q_; }
  /// Order of the multiplicative group, q - 1.
  int order() const noexcept { return q_ - 1; }
  const std::vector<int>& primitive_poly() const noexcept { return poly_; }

  Elt alpha(long long k) const noexcept { return Elt{reduce(k)}; }

  Elt add(Elt a, Elt b) const noexcept {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int d = b.log - a.log;
    const int z = zech_[d < 0 ? d + q_ - 1 : d];
    return z < 0 ? Elt::zero() : Elt{wrap(a.log + z)};
  }
  Elt neg(Elt a) const noexcept { return a.is_zero() ? a : Elt{wrap(a.log + minus_one_log_)}; }
  Elt sub(Elt a, Elt b) const noexcept { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const noexcept {
    return a.is_zero() || b.is_zero() ? Elt::zero() : Elt{wrap(a.log + b.log)};
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const;
  /// Negative exponents invert; pow(0, 0) == 1, pow(0, e < 0) throws.
  Elt pow(Elt a, long long e) const;

  /// Embedding of the prime-field integer c (taken mod p).
  Elt from_int(int c) const noexcept;
  /// Vector code of an element (0 for zero).
  int to_code(Elt a) const noexcept { return a.is_zero() ? 0 : exp_[a.log]; }
  Elt from_code(int code) const noexcept { return Elt{log_[code]}; }

  bool valid(Elt a) const noexcept { return a.log >= -1 && a.log < q_ - 1; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.poly_ == b.poly_;
  }

 private:
  // For 0 <= k < 2(q-1).
  int wrap(int k) const noexcept { return k >= q_ - 1 ? k - (q_ - 1) : k; }
  int reduce(long long k) const noexcept {
    const long long n = q_ - 1;
    return static_cast<int>(((k % n) + n) % n);
  }

  int p_;
  int m_;
  int q_;
  std::vector<int> poly_;
  std::vector<int> exp_;   // log -> vector code
  std::vector<int> log_;   // vector code -> log, log_[0] = -1
  std::vector<int> zech_;  // zech_[k] = log(1 + alpha^k)
  int minus_one_log_ = 0;
};

}  // namespace algcodes
