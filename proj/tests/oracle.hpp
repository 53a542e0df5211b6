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

// Reference arithmetic for tests. Elements are coefficient vectors over
// Z/p reduced by the primitive polynomial; nothing here uses the library's
// log or Zech tables.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "algcodes/algcodes.hpp"

namespace oracle {

using algcodes::Elt;

class Gf {
 public:
  Gf(int p, std::vector<int> poly) : p_(p), m_(static_cast<int>(poly.size()) - 1), poly_(std::move(poly)) {
    std::vector<int> v(static_cast<size_t>(m_), 0);
    v[0] = 1;
    int q = 1;
    for (int i = 0; i < m_; ++i) q *= p_;
    for (int k = 0; k < q - 1; ++k) {
      pow_.push_back(v);
      log_[v] = k;
      v = times_x(v);
    }
    zero_ = std::vector<int>(static_cast<size_t>(m_), 0);
  }

  std::vector<int> vec(Elt a) const { return a.is_zero() ? zero_ : pow_[a.log]; }
  Elt elt(const std::vector<int>& v) const {
    if (v == zero_) return Elt::zero();
    return Elt{log_.at(v)};
  }
  Elt add(Elt a, Elt b) const {
    auto va = vec(a), vb = vec(b);
    for (int i = 0; i < m_; ++i) va[i] = (va[i] + vb[i]) % p_;
    return elt(va);
  }
  Elt neg(Elt a) const {
    auto v = vec(a);
    for (int& c : v) c = (p_ - c) % p_;
    return elt(v);
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  // Schoolbook product then reduction, independent of exponent tables.
  Elt mul(Elt a, Elt b) const {
    auto va = vec(a), vb = vec(b);
    std::vector<int> prod(static_cast<size_t>(2 * m_), 0);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p_;
    for (int d = 2 * m_ - 1; d >= m_; --d) {
      const int c = prod[d];
      if (!c) continue;
      for (int i = 0; i <= m_; ++i) prod[d - m_ + i] = ((prod[d - m_ + i] - c * poly_[i]) % p_ + p_) % p_;
    }
    prod.resize(static_cast<size_t>(m_));
    return elt(prod);
  }
  Elt pow(Elt a, int e) const {
    Elt r = Elt::one();
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  int size() const { return static_cast<int>(pow_.size()) + 1; }

 private:
  std::vector<int> times_x(const std::vector<int>& v) const {
    std::vector<int> out(static_cast<size_t>(m_), 0);
    for (int i = m_ - 1; i >= 1; --i) out[i] = v[i - 1];
    const int top = v[m_ - 1];
    for (int i = 0; i < m_; ++i) out[i] = ((out[i] - top * poly_[i]) % p_ + p_) % p_;
    return out;
  }

  int p_, m_;
  std::vector<int> poly_;
  std::vector<std::vector<int>> pow_;
  std::map<std::vector<int>, int> log_;
  std::vector<int> zero_;
};

inline const Gf& gf9() {
  static const Gf g(3, {2, 1, 1});
  return g;
}

/// Direct-sum 2-D transform: out[i][j] = sum_{r,s} a[r][s] alpha^(ri+sj).
inline algcodes::Array2D dft2(const Gf& g, const algcodes::Array2D& a, int sign = 1) {
  const int n = a.side();
  algcodes::Array2D out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt acc = Elt::zero();
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const int e = ((sign * (r * i + s * j)) % n + n) % n;
          acc = g.add(acc, g.mul(a(r, s), Elt{e}));
        }
      out(i, j) = acc;
    }
  return out;
}

/// Value of a word's syndrome at (i, j) by substitution into every point.
inline Elt substitute(const Gf& g, const std::vector<algcodes::Point>& pts, const std::vector<Elt>& word, int i, int j) {
  Elt acc = Elt::zero();
  for (size_t h = 0; h < word.size(); ++h) acc = g.add(acc, g.mul(word[h], g.mul(g.pow(pts[h].x, i), g.pow(pts[h].y, j))));
  return acc;
}

/// Rank by elimination in reference arithmetic.
inline int rank(const Gf& g, std::vector<std::vector<Elt>> a) {
  int r = 0;
  const int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (int k = 0; k < rows; ++k) {
      if (k == r || a[k][c].is_zero()) continue;
      // a[k] -= (a[k][c] / a[r][c]) a[r]; division via search.
      Elt factor = Elt::zero();
      for (int t = 0; t < g.size() - 1; ++t)
        if (g.mul(Elt{t}, a[r][c]) == a[k][c]) factor = Elt{t};
      for (int x = 0; x < cols; ++x) a[k][x] = g.sub(a[k][x], g.mul(factor, a[r][x]));
    }
    ++r;
  }
  return r;
}

inline std::vector<Elt> random_word(std::mt19937& rng, size_t n, int q = 9) {
  std::vector<Elt> v(n);
  for (Elt& e : v) e = Elt{static_cast<int>(rng() % static_cast<unsigned>(q)) - 1};
  return v;
}

inline Elt random_nonzero(std::mt19937& rng, int q = 9) { return Elt{static_cast<int>(rng() % static_cast<unsigned>(q - 1))}; }

}  // namespace oracle
