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

#include "algcodes/galois.hpp"

#include <string>

#include "algcodes/error.hpp"

namespace algcodes {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> to_digits(int code, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int code = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
  return code;
}

}  // namespace

Field::Field(int p, int m, std::vector<int> primitive_poly)
    : p_(p), m_(m), q_(1), poly_(std::move(primitive_poly)) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  for (int i = 0; i < m; ++i) {
    if (q_ > (1 << 20) / p) throw Error(ErrorCode::InvalidArgument, "field too large for table arithmetic");
    q_ *= p;
  }
  if (static_cast<int>(poly_.size()) != m + 1)
    throw Error(ErrorCode::InvalidArgument, "primitive polynomial must have m + 1 coefficients");
  for (int& c : poly_) c = ((c % p) + p) % p;
  if (poly_[m] != 1) throw Error(ErrorCode::InvalidArgument, "primitive polynomial must be monic");

  const int n = q_ - 1;
  exp_.assign(n, 0);
  log_.assign(q_, -1);

  // Repeated multiplication by x modulo the polynomial.
  std::vector<int> cur(m, 0);
  cur[0] = 1;
  for (int i = 0; i < n; ++i) {
    const int code = from_digits(cur, p);
    if (log_[code] != -1 || code == 0)
      throw Error(ErrorCode::NonPrimitivePolynomial,
                  "alpha has order " + std::to_string(i) + " < " + std::to_string(n));
    exp_[i] = code;
    log_[code] = i;
    // cur <- x * cur mod poly
    const int top = cur[m - 1];
    for (int k = m - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    for (int k = 0; k < m; ++k) cur[k] = ((cur[k] - top * poly_[k]) % p + p) % p;
  }
  if (from_digits(cur, p) != 1)
    throw Error(ErrorCode::NonPrimitivePolynomial, "alpha^(q-1) != 1");

  zech_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    auto d = to_digits(exp_[k], p, m);
    d[0] = (d[0] + 1) % p;
    zech_[k] = log_[from_digits(d, p)];
  }
  minus_one_log_ = (p == 2) ? 0 : n / 2;
}

Field Field::gf9() { return Field(3, 2, {2, 1, 1}); }

Elt Field::inv(Elt a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Elt{reduce(-static_cast<long long>(a.log))};
}

Elt Field::div(Elt a, Elt b) const {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (a.is_zero()) return a;
  return Elt{reduce(static_cast<long long>(a.log) - b.log)};
}

Elt Field::pow(Elt a, long long e) const {
  if (a.is_zero()) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? Elt::one() : Elt::zero();
  }
  const long long n = q_ - 1;
  return Elt{reduce((static_cast<long long>(a.log) * (e % n)) % n)};
}

Elt Field::from_int(int c) const noexcept {
  c = ((c % p_) + p_) % p_;
  return Elt{log_[c]};
}

}  // namespace algcodes
