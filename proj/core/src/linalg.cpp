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

#include "algcodes/linalg.hpp"

#include <utility>

#include "algcodes/error.hpp"

namespace algcodes {
namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(const Field& f, Matrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    for (int k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(row, k));
    const Elt inv = f.inv(a(row, col));
    for (int k = 0; k < a.cols(); ++k) a(row, k) = f.mul(a(row, k), inv);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Elt factor = a(r, col);
      for (int k = 0; k < a.cols(); ++k) a(r, k) = f.sub(a(r, k), f.mul(factor, a(row, k)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::columns(const std::vector<int>& which) const {
  Matrix out(rows_, static_cast<int>(which.size()));
  for (int r = 0; r < rows_; ++r)
    for (size_t c = 0; c < which.size(); ++c) out(r, static_cast<int>(c)) = (*this)(r, which[c]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      Elt acc = Elt::zero();
      for (int k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(r, k), b(k, c)));
      out(r, c) = acc;
    }
  return out;
}

std::vector<Elt> multiply(const Field& f, const Matrix& a, const std::vector<Elt>& x) {
  if (a.cols() != static_cast<int>(x.size())) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<Elt> out(static_cast<size_t>(a.rows()));
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) out[r] = f.add(out[r], f.mul(a(r, k), x[k]));
  return out;
}

int rank(const Field& f, Matrix a) { return static_cast<int>(rref(f, a).size()); }

Matrix inverse(const Field& f, const Matrix& a) {
  const int n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = Elt::one();
  }
  const auto pivots = rref(f, aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw Error(ErrorCode::RankDeficient, "matrix is singular");
  Matrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

std::vector<Elt> solve(const Field& f, const Matrix& a, const std::vector<Elt>& b) {
  return multiply(f, inverse(f, a), b);
}

}  // namespace algcodes
