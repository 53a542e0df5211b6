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

#include <vector>

#include "algcodes/galois.hpp"

namespace algcodes {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Elt& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  Elt operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  Matrix columns(const std::vector<int>& which) const;
  Matrix transpose() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elt> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
std::vector<Elt> multiply(const Field& f, const Matrix& a, const std::vector<Elt>& x);
int rank(const Field& f, Matrix a);
/// Throws RankDeficient when a is singular.
Matrix inverse(const Field& f, const Matrix& a);
/// Solves a x = b for square invertible a; throws RankDeficient otherwise.
std::vector<Elt> solve(const Field& f, const Matrix& a, const std::vector<Elt>& b);

}  // namespace algcodes
