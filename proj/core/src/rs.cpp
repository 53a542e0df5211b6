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

#include "algcodes/rs.hpp"

#include <algorithm>
#include <string>

#include "algcodes/error.hpp"
#include "algcodes/transform.hpp"

namespace algcodes {
namespace {

void check_info(const Field& f, int r, const UniPoly& info) {
  if (r < 1 || r >= f.order()) throw Error(ErrorCode::BadRedundancy, "redundancy must satisfy 1 <= r < q-1");
  if (static_cast<int>(info.size()) != f.order())
    throw Error(ErrorCode::DimensionMismatch, "information polynomial must have q-1 coefficients");
  for (int i = 0; i < r; ++i)
    if (!info[i].is_zero()) throw Error(ErrorCode::InvalidArgument, "information must be zero below degree r");
}

std::vector<Elt> minus(const Field& f, const UniPoly& a, const UniPoly& b) {
  std::vector<Elt> out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
  return out;
}

}  // namespace

Elt evaluate(const Field& f, const UniPoly& p, Elt x) {
  Elt acc = Elt::zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

UniPoly rs_gen_poly(const Field& f, int r) {
  if (r < 1 || r >= f.order())
    throw Error(ErrorCode::BadRedundancy, "redundancy must satisfy 1 <= r < q-1, got " + std::to_string(r));
  UniPoly g{Elt::one()};
  for (int i = 0; i < r; ++i) {
    const Elt root = f.neg(f.alpha(i));
    UniPoly next(g.size() + 1);
    for (size_t k = 0; k < g.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], g[k]);
      next[k] = f.add(next[k], f.mul(root, g[k]));
    }
    g = std::move(next);
  }
  return g;
}

UniPoly rs_remainder(const Field& f, int r, const UniPoly& info) {
  check_info(f, r, info);
  const UniPoly g = rs_gen_poly(f, r);
  UniPoly rem = info;
  for (int top = static_cast<int>(rem.size()) - 1; top >= r; --top) {
    const Elt c = rem[top];
    if (c.is_zero()) continue;
    for (int i = 0; i <= r; ++i) rem[top - r + i] = f.sub(rem[top - r + i], f.mul(c, g[i]));
  }
  rem.resize(static_cast<size_t>(r));
  return rem;
}

std::vector<Elt> rs_encode_euclid(const Field& f, int r, const UniPoly& info) {
  return minus(f, info, rs_remainder(f, r, info));
}

std::vector<Elt> rs_encode_idft(const Field& f, int r, const UniPoly& info) {
  check_info(f, r, info);
  const Array1D c = idft1(f, Array1D(info));
  std::vector<Elt> out;
  for (int h = 0; h < c.size(); ++h) out.push_back(f.neg(c[h]));
  return out;
}

std::vector<Elt> rs_d_sequence(const Field& f, int r, const UniPoly& info) {
  check_info(f, r, info);
  const UniPoly g = rs_gen_poly(f, r);
  const int n = f.order();
  std::vector<Elt> d(static_cast<size_t>(n));
  for (int h = 0; h < r; ++h) d[h] = evaluate(f, info, f.alpha(h));
  for (int h = r; h < n; ++h) {
    Elt acc = Elt::zero();
    for (int i = 0; i < r; ++i) acc = f.add(acc, f.mul(g[i], d[i + h - r]));
    d[h] = f.neg(acc);
  }
  return d;
}

std::vector<Elt> rs_encode_dh(const Field& f, int r, const UniPoly& info) {
  const Array1D rem = idft1(f, Array1D(rs_d_sequence(f, r, info)));
  UniPoly rpoly(rem.values().begin(), rem.values().end());
  return minus(f, info, rpoly);
}

UniPoly berlekamp_massey(const Field& f, const std::vector<Elt>& s) {
  UniPoly c{Elt::one()}, b{Elt::one()};
  int len = 0, shift = 1;
  Elt last = Elt::one();
  for (size_t n = 0; n < s.size(); ++n) {
    Elt d = s[n];
    for (int i = 1; i <= len; ++i) d = f.add(d, f.mul(c[i], s[n - i]));
    if (d.is_zero()) {
      ++shift;
      continue;
    }
    const UniPoly prev = c;
    const Elt factor = f.div(d, last);
    if (c.size() < b.size() + shift) c.resize(b.size() + shift);
    for (size_t i = 0; i < b.size(); ++i) c[i + shift] = f.sub(c[i + shift], f.mul(factor, b[i]));
    if (2 * len <= static_cast<int>(n)) {
      len = static_cast<int>(n) + 1 - len;
      b = prev;
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(static_cast<size_t>(len) + 1);
  return c;
}

std::vector<Elt> rs_decode(const Field& f, int r, const std::vector<Elt>& received) {
  const int n = f.order();
  if (r < 1 || r >= n) throw Error(ErrorCode::BadRedundancy, "redundancy must satisfy 1 <= r < q-1");
  if (static_cast<int>(received.size()) != n) throw Error(ErrorCode::DimensionMismatch, "received word must have q-1 symbols");
  std::vector<Elt> s(static_cast<size_t>(n));
  for (int i = 0; i < r; ++i) s[i] = evaluate(f, received, f.alpha(i));
  if (std::all_of(s.begin(), s.begin() + r, [](Elt e) { return e.is_zero(); })) return received;

  const UniPoly lambda = berlekamp_massey(f, std::vector<Elt>(s.begin(), s.begin() + r));
  const int len = static_cast<int>(lambda.size()) - 1;
  if (2 * len > r) throw Error(ErrorCode::DecodingFailure, "too many errors for r=" + std::to_string(r));
  auto next = [&](int j) {
    Elt acc = Elt::zero();
    for (int k = 1; k <= len; ++k) acc = f.add(acc, f.mul(lambda[k], s[((j - k) % n + n) % n]));
    return f.neg(acc);
  };
  for (int j = r; j < n; ++j) s[j] = next(j);
  // The extension has to close up cyclically.
  for (int j = n; j < n + len; ++j)
    if (next(j) != s[j - n]) throw Error(ErrorCode::DecodingFailure, "syndrome extension is not periodic");

  const Array1D e = idft1(f, Array1D(s));
  std::vector<Elt> out = received;
  int weight = 0;
  for (int h = 0; h < n; ++h)
    if (!e[h].is_zero()) {
      out[h] = f.sub(out[h], e[h]);
      ++weight;
    }
  if (weight != len) throw Error(ErrorCode::DecodingFailure, "error count disagrees with the locator degree");
  return out;
}

}  // namespace algcodes
