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

#include "algcodes/transform.hpp"

#include <string>

#include "algcodes/error.hpp"

namespace algcodes {
namespace {

void require_side(const Field& f, int side, const char* what) {
  if (side != f.order())
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(side) + ", expected " + std::to_string(f.order()));
}

// out[k] = sum_h in[h] * (alpha^{sign*k})^h, Horner in the evaluation point.
void evaluate_all(const Field& f, std::span<const Elt> in, std::span<Elt> out, int sign, size_t in_stride,
                  size_t out_stride) {
  const int n = f.order();
  for (int k = 0; k < n; ++k) {
    const Elt point = f.alpha(static_cast<long long>(sign) * k);
    Elt acc = Elt::zero();
    for (int h = n - 1; h >= 0; --h) acc = f.add(f.mul(acc, point), in[static_cast<size_t>(h) * in_stride]);
    out[static_cast<size_t>(k) * out_stride] = acc;
  }
}

Array2D transform2(const Field& f, const Array2D& a, int sign) {
  require_side(f, a.side(), "array");
  const int n = a.side();
  std::vector<Elt> in(a.values().begin(), a.values().end());
  std::vector<Elt> tmp(in.size());
  // Rows then columns.
  for (int r = 0; r < n; ++r)
    evaluate_all(f, std::span<const Elt>(in).subspan(static_cast<size_t>(r) * n), std::span<Elt>(tmp).subspan(static_cast<size_t>(r) * n),
                 sign, 1, 1);
  Array2D out(n);
  std::vector<Elt> col(n);
  for (int c = 0; c < n; ++c) {
    evaluate_all(f, std::span<const Elt>(tmp).subspan(static_cast<size_t>(c)), col, sign, static_cast<size_t>(n), 1);
    for (int i = 0; i < n; ++i) out(i, c) = col[i];
  }
  return out;
}

}  // namespace

bool Array2D::is_zero() const noexcept {
  for (Elt e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Array1D dft1(const Field& f, const Array1D& a) {
  require_side(f, a.size(), "vector");
  std::vector<Elt> tmp(static_cast<size_t>(a.size()));
  evaluate_all(f, a.values(), tmp, +1, 1, 1);
  return Array1D(std::move(tmp));
}

Array1D idft1(const Field& f, const Array1D& a) {
  require_side(f, a.size(), "vector");
  std::vector<Elt> tmp(static_cast<size_t>(a.size()));
  evaluate_all(f, a.values(), tmp, -1, 1, 1);
  for (Elt& e : tmp) e = f.neg(e);
  return Array1D(std::move(tmp));
}

Array2D dft2(const Field& f, const Array2D& a) { return transform2(f, a, +1); }
Array2D idft2(const Field& f, const Array2D& a) { return transform2(f, a, -1); }

Array2D add(const Field& f, const Array2D& a, const Array2D& b) {
  if (a.side() != b.side()) throw Error(ErrorCode::DimensionMismatch, "array sides differ");
  Array2D out(a.side());
  for (int i = 0; i < a.side(); ++i)
    for (int j = 0; j < a.side(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
  return out;
}

Array2D sub(const Field& f, const Array2D& a, const Array2D& b) {
  if (a.side() != b.side()) throw Error(ErrorCode::DimensionMismatch, "array sides differ");
  Array2D out(a.side());
  for (int i = 0; i < a.side(); ++i)
    for (int j = 0; j < a.side(); ++j) out(i, j) = f.sub(a(i, j), b(i, j));
  return out;
}

Array2D scale(const Field& f, const Array2D& a, Elt s) {
  Array2D out(a.side());
  for (int i = 0; i < a.side(); ++i)
    for (int j = 0; j < a.side(); ++j) out(i, j) = f.mul(a(i, j), s);
  return out;
}

Array1D add(const Field& f, const Array1D& a, const Array1D& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  Array1D out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Array1D sub(const Field& f, const Array1D& a, const Array1D& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  Array1D out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Array1D scale(const Field& f, const Array1D& a, Elt s) {
  Array1D out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], s);
  return out;
}

}  // namespace algcodes
