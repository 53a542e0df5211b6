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

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace algcodes;

namespace {

Array2D random_array(std::mt19937& rng, int side) {
  Array2D a(side);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) a(i, j) = Elt{static_cast<int>(rng() % 9) - 1};
  return a;
}

}  // namespace

TEST(Transform, Dft2MatchesDirectSummation) {
  const Field f = Field::gf9();
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Array2D a = random_array(rng, 8);
    EXPECT_EQ(dft2(f, a), oracle::dft2(oracle::gf9(), a));
  }
}

TEST(Transform, Idft2InvertsDft2) {
  const Field f = Field::gf9();
  std::mt19937 rng(12);
  for (int t = 0; t < 200; ++t) {
    const Array2D a = random_array(rng, 8);
    EXPECT_EQ(idft2(f, dft2(f, a)), a);
    EXPECT_EQ(dft2(f, idft2(f, a)), a);
  }
}

TEST(Transform, Idft2IsNegatedExponentSum) {
  // (q-1)^2 = 1 in characteristic 3, so the inverse carries no scale.
  const Field f = Field::gf9();
  std::mt19937 rng(13);
  const Array2D a = random_array(rng, 8);
  EXPECT_EQ(idft2(f, a), oracle::dft2(oracle::gf9(), a, -1));
}

TEST(Transform, OneDimensionalPair) {
  const Field f = Field::gf9();
  std::mt19937 rng(14);
  for (int t = 0; t < 100; ++t) {
    Array1D a(8);
    for (int h = 0; h < 8; ++h) a[h] = Elt{static_cast<int>(rng() % 9) - 1};
    const Array1D d = dft1(f, a);
    for (int i = 0; i < 8; ++i) {
      Elt acc = Elt::zero();
      for (int h = 0; h < 8; ++h) acc = f.add(acc, f.mul(a[h], f.alpha(static_cast<long long>(i) * h)));
      ASSERT_EQ(d[i], acc);
    }
    EXPECT_EQ(dft1(f, idft1(f, a)), a);
    EXPECT_EQ(idft1(f, dft1(f, a)), a);
  }
}

TEST(Transform, SingleCellTransformsToCharacter) {
  const Field f = Field::gf9();
  Array2D a(8);
  a(2, 5) = f.alpha(3);
  const Array2D d = dft2(f, a);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) EXPECT_EQ(d(i, j), f.alpha(3 + 2 * i + 5 * j));
}

TEST(Transform, Linearity) {
  const Field f = Field::gf9();
  std::mt19937 rng(15);
  const Array2D a = random_array(rng, 8), b = random_array(rng, 8);
  const Elt c = f.alpha(5);
  EXPECT_EQ(dft2(f, add(f, a, scale(f, b, c))), add(f, dft2(f, a), scale(f, dft2(f, b), c)));
}

TEST(Transform, WrongSideThrows) {
  const Field f = Field::gf9();
  EXPECT_THROW(dft2(f, Array2D(7)), Error);
  EXPECT_THROW(dft1(f, Array1D(9)), Error);
}
