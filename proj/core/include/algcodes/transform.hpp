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

#include <span>
#include <vector>

#include "algcodes/galois.hpp"

namespace algcodes {

/// Length-(q-1) vector of field elements.
class Array1D {
 public:
  Array1D() = default;
  explicit Array1D(int size) : data_(static_cast<size_t>(size), Elt::zero()) {}
  explicit Array1D(std::vector<Elt> data) : data_(std::move(data)) {}

  int size() const noexcept { return static_cast<int>(data_.size()); }
  Elt& operator[](int i) { return data_[static_cast<size_t>(i)]; }
  Elt operator[](int i) const { return data_[static_cast<size_t>(i)]; }
  std::span<const Elt> values() const noexcept { return data_; }

  friend bool operator==(const Array1D&, const Array1D&) = default;

 private:
  std::vector<Elt> data_;
};

/// (q-1) x (q-1) grid indexed by exponent pairs; the first index is the
/// x-exponent (row), the second the y-exponent (column).
class Array2D {
 public:
  Array2D() = default;
  explicit Array2D(int side) : side_(side), data_(static_cast<size_t>(side) * side, Elt::zero()) {}

  int side() const noexcept { return side_; }
  Elt& operator()(int i, int j) { return data_[static_cast<size_t>(i) * side_ + j]; }
  Elt operator()(int i, int j) const { return data_[static_cast<size_t>(i) * side_ + j]; }
  /// Cyclic access: indices are reduced mod side().
  Elt wrapped(long long i, long long j) const {
    return (*this)(static_cast<int>(((i % side_) + side_) % side_),
                   static_cast<int>(((j % side_) + side_) % side_));
  }
  std::span<const Elt> values() const noexcept { return data_; }
  bool is_zero() const noexcept;

  friend bool operator==(const Array2D&, const Array2D&) = default;

 private:
  int side_ = 0;
  std::vector<Elt> data_;
};

/// out[i] = sum_h a[h] alpha^{ih}.
Array1D dft1(const Field& f, const Array1D& a);
/// out[h] = -sum_i a[i] alpha^{-ih}. The leading minus sign is the
/// normalisation (q-1)^{-1} = -1, so dft1(idft1(a)) == a.
Array1D idft1(const Field& f, const Array1D& a);

/// out[i][j] = sum_{r,s} a[r][s] alpha^{ri+sj}: evaluates the array, read as
/// a polynomial in x and y, at every point (alpha^i, alpha^j).
Array2D dft2(const Field& f, const Array2D& a);
/// out[r][s] = sum_{i,j} a[i][j] alpha^{-ri-sj}. Unnormalised; the inversion
/// constant (q-1)^2 is 1 in characteristic p.
Array2D idft2(const Field& f, const Array2D& a);

Array2D add(const Field& f, const Array2D& a, const Array2D& b);
Array2D sub(const Field& f, const Array2D& a, const Array2D& b);
Array2D scale(const Field& f, const Array2D& a, Elt s);
Array1D add(const Field& f, const Array1D& a, const Array1D& b);
Array1D sub(const Field& f, const Array1D& a, const Array1D& b);
Array1D scale(const Field& f, const Array1D& a, Elt s);

}  // namespace algcodes
