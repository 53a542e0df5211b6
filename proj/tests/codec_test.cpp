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

#include <algorithm>
#include <thread>

#include "oracle.hpp"

using namespace algcodes;

namespace {

const CodeSpec& hermitian() {
  static const CodeSpec s = make_curve_code(Field::gf9(), CurveSpec::hermitian(Field::gf9()), 11);
  return s;
}
const CodeSpec& hermitian_ext() {
  static const CodeSpec s = make_curve_code(Field::gf9(), CurveSpec::hermitian(Field::gf9()), 11, true);
  return s;
}
const CodeSpec& hcrs() {
  static const CodeSpec s = make_hcrs_code(Field::gf9(), 9);
  return s;
}
const CodeSpec& rs4() {
  static const CodeSpec s = make_rs_code(Field::gf9(), 4);
  return s;
}

std::vector<const CodeSpec*> families() { return {&hermitian(), &hcrs(), &rs4()}; }

bool all_zero(const std::vector<Elt>& v) {
  return std::all_of(v.begin(), v.end(), [](Elt e) { return e.is_zero(); });
}

std::vector<Elt> axpy(const Field& f, const std::vector<Elt>& a, Elt c, const std::vector<Elt>& b) {
  std::vector<Elt> out = a;
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], f.mul(c, b[i]));
  return out;
}

std::vector<Elt> corrupt(std::mt19937& rng, std::vector<Elt> word, int t) {
  std::vector<int> idx(word.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (int e = 0; e < t; ++e) word[idx[e]] = Field::gf9().add(word[idx[e]], oracle::random_nonzero(rng));
  return word;
}

}  // namespace

TEST(Codec, SpecInvariants) {
  for (const CodeSpec* s : families()) {
    EXPECT_EQ(static_cast<int>(s->wp.size()), s->n - s->k);
    EXPECT_EQ(s->wp.size() + s->wp_prime.size(), static_cast<size_t>(s->n));
    EXPECT_TRUE(s->basis_wp.delta.same_cells(s->phi_m));
    EXPECT_EQ(s->basis_all.delta.size(), s->n);
  }
  EXPECT_EQ(hermitian().max_errors, 3);
  EXPECT_EQ(hcrs().max_errors, 4);
  EXPECT_EQ(rs4().max_errors, 2);
  EXPECT_EQ(hermitian_ext().zero_points.size(), 3u);
}

TEST(Codec, CheckMatrixShapeAndRank) {
  const CodeSpec& s = hermitian();
  const Matrix h = check_matrix(s);
  ASSERT_EQ(h.rows(), 24);
  ASSERT_EQ(h.cols(), 9);
  std::vector<std::vector<Elt>> ref(24, std::vector<Elt>(9));
  for (int r = 0; r < 24; ++r)
    for (int c = 0; c < 9; ++c) ref[r][c] = h(r, c);
  EXPECT_EQ(oracle::rank(oracle::gf9(), ref), 9);
  for (int r = 0; r < 24; ++r) EXPECT_EQ(h(r, 0), Elt::one());  // monomial 1
}

TEST(Codec, CheckMatrixZeroPointRows) {
  const CodeSpec& s = hermitian_ext();
  const Matrix h = check_matrix(s);
  ASSERT_EQ(h.rows(), 27);
  const auto& cells = s.phi_m.cells();
  const int row = 24 + 1;  // (0, alpha^2)
  ASSERT_EQ(s.zero_points[1], (Point{Elt::zero(), Elt{2}}));
  for (size_t l = 0; l < cells.size(); ++l) {
    const Elt want = cells[l].i > 0 ? Elt::zero() : Elt{(2 * cells[l].j) % 8};
    EXPECT_EQ(h(row, static_cast<int>(l)), want) << cells[l].i << "," << cells[l].j;
  }
  // x^0 y^3 at (0, alpha^2) is alpha^6; 0^0 = 1.
  EXPECT_EQ(s.field.mul(s.field.pow(Elt::zero(), 0), s.field.pow(Elt{2}, 3)), Elt{6});
}

TEST(Codec, GeneratorMatrixIsOrthogonalToChecks) {
  for (const CodeSpec* s : families()) {
    const Matrix g = generator_matrix(*s);
    const Matrix prod = multiply(s->field, g, check_matrix(*s));
    for (int r = 0; r < prod.rows(); ++r)
      for (int c = 0; c < prod.cols(); ++c) ASSERT_TRUE(prod(r, c).is_zero());
    for (int t = 0; t < s->k; ++t) EXPECT_EQ(g(t, s->wp_prime[t]), Elt::one());
    EXPECT_TRUE(all_zero(encode_matrix_oracle(*s, std::vector<Elt>(s->k))));
  }
}

TEST(Codec, SystematicEqualsOracle) {
  std::mt19937 rng(51);
  for (const CodeSpec* s : families()) {
    const Matrix gt = generator_matrix(*s).transpose();
    EXPECT_TRUE(all_zero(encode_systematic(*s, std::vector<Elt>(s->k))));
    for (int trial = 0; trial < 200; ++trial) {
      const auto info = oracle::random_word(rng, s->k);
      const auto c = encode_systematic(*s, info);
      ASSERT_EQ(c, multiply(s->field, gt, info));
      for (int t = 0; t < s->k; ++t) ASSERT_EQ(c[s->wp_prime[t]], info[t]);
    }
  }
}

TEST(Codec, NonsystematicSupportAndInjectivity) {
  std::mt19937 rng(52);
  for (const CodeSpec* s : families()) {
    EXPECT_TRUE(all_zero(encode_nonsystematic(*s, std::vector<Elt>(s->k))));
    for (int trial = 0; trial < 100; ++trial) {
      auto info = oracle::random_word(rng, s->k);
      info[rng() % s->k] = oracle::random_nonzero(rng);
      Array2D a = nonsystematic_array(*s, info);
      for (const Point& p : s->points) a(p.x.log, p.y.log) = Elt::zero();
      ASSERT_TRUE(a.is_zero());
      const auto c = encode_nonsystematic(*s, info);
      EXPECT_TRUE(is_codeword(*s, c));
      EXPECT_FALSE(all_zero(c));
    }
  }
}

TEST(Codec, EncodersAreLinear) {
  std::mt19937 rng(53);
  for (const CodeSpec* s : families()) {
    const Field& f = s->field;
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = oracle::random_word(rng, s->k), b = oracle::random_word(rng, s->k);
      const Elt c = oracle::random_nonzero(rng);
      EXPECT_EQ(encode_systematic(*s, axpy(f, a, c, b)), axpy(f, encode_systematic(*s, a), c, encode_systematic(*s, b)));
      EXPECT_EQ(encode_nonsystematic(*s, axpy(f, a, c, b)),
                axpy(f, encode_nonsystematic(*s, a), c, encode_nonsystematic(*s, b)));
    }
  }
}

TEST(Codec, SyndromesAgreeWithSubstitution) {
  std::mt19937 rng(54);
  for (const CodeSpec* s : families()) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto w = oracle::random_word(rng, s->n);
      const Syndromes syn = syndromes(*s, w);
      ASSERT_EQ(syn.on_phi, parity(*s, w));
      const auto& cells = s->phi_m.cells();
      for (size_t l = 0; l < cells.size(); ++l)
        ASSERT_EQ(syn.on_phi[l], oracle::substitute(oracle::gf9(), s->points, w, cells[l].i, cells[l].j));
    }
  }
}

TEST(Codec, SingleErrorSyndrome) {
  const CodeSpec& s = hermitian();
  for (int h = 0; h < s.n; ++h) {
    std::vector<Elt> w(s.n);
    w[h] = Elt{3};
    const Syndromes syn = syndromes(s, w);
    const int r = s.points[h].x.log, sy = s.points[h].y.log;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) EXPECT_EQ(syn.full(i, j), s.field.alpha(3 + r * i + sy * j));
  }
}

TEST(Codec, DecodeRoundTrip) {
  std::mt19937 rng(55);
  for (const CodeSpec* s : families()) {
    for (int trial = 0; trial < 150; ++trial) {
      const int t = trial % (s->max_errors + 1);
      const auto info = oracle::random_word(rng, s->k);
      const DecodeMode mode = trial % 2 ? DecodeMode::Systematic : DecodeMode::NonSystematic;
      const auto c = mode == DecodeMode::Systematic ? encode_systematic(*s, info) : encode_nonsystematic(*s, info);
      const DecodeResult r = decode(*s, corrupt(rng, c, t), mode);
      ASSERT_EQ(r.codeword, c);
      ASSERT_EQ(r.info, info);
      EXPECT_EQ(r.errors, t);
    }
  }
}

TEST(Codec, BeyondCapabilityIsNeverSilentlyWrongWord) {
  std::mt19937 rng(56);
  for (const CodeSpec* s : families()) {
    int failures = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const auto c = encode_systematic(*s, oracle::random_word(rng, s->k));
      const auto received = corrupt(rng, c, s->max_errors + 1 + trial % 2);
      try {
        const DecodeResult r = decode(*s, received, DecodeMode::Systematic);
        EXPECT_TRUE(is_codeword(*s, r.codeword));
        EXPECT_LE(r.errors, s->max_errors);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::DecodingFailure);
        ++failures;
      }
    }
    EXPECT_GT(failures, 0);
  }
}

TEST(Codec, AnalogueArrays) {
  const Field f = Field::gf9();
  auto row = [&](const Array2D& a, int i) {
    std::vector<int> out;
    for (int j = 0; j < 8; ++j) out.push_back(a(i, j).log);
    return out;
  };
  const Array2D a = analogue_dft(f, {Elt::zero(), Elt{2}}, Elt{5});
  EXPECT_EQ(row(a, 0), (std::vector<int>{5, 7, 1, 3, 5, 7, 1, 3}));
  for (int i = 1; i < 8; ++i) EXPECT_EQ(row(a, i), std::vector<int>(8, -1));
  const Array2D b = analogue_dft(f, {Elt::zero(), Elt{6}}, Elt{2});
  EXPECT_EQ(row(b, 0), (std::vector<int>{2, 0, 6, 4, 2, 0, 6, 4}));
  const Array2D c = analogue_dft(f, {Elt::zero(), Elt::zero()}, Elt{7});
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) EXPECT_EQ(c(i, j), i == 0 && j == 0 ? Elt{7} : Elt::zero());
  try {
    analogue_dft(f, {Elt::one(), Elt::one()}, Elt::one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAZeroPoint);
  }
}

TEST(Codec, ExtendedSystematicEncoding) {
  const CodeSpec& s = hermitian_ext();
  const size_t k = s.wp_prime.size() + 3;
  EXPECT_TRUE(all_zero(encode_systematic_extended(s, std::vector<Elt>(k))));
  std::vector<Elt> corner(k);
  corner[s.wp_prime.size()] = Elt{7};  // alpha^7 at (0, 0)
  const auto c0 = encode_systematic_extended(s, corner);
  EXPECT_TRUE(is_codeword(s, c0));
  EXPECT_EQ(c0[24], Elt{7});
  std::mt19937 rng(57);
  for (int trial = 0; trial < 200; ++trial) {
    const auto info = oracle::random_word(rng, k);
    const auto c = encode_systematic_extended(s, info);
    ASSERT_EQ(c.size(), 27u);
    ASSERT_TRUE(is_codeword(s, c));
    for (size_t t = 0; t < s.wp_prime.size(); ++t) ASSERT_EQ(c[s.wp_prime[t]], info[t]);
    for (int z = 0; z < 3; ++z) ASSERT_EQ(c[24 + z], info[s.wp_prime.size() + z]);
  }
  try {
    decode(s, encode_systematic_extended(s, corner), DecodeMode::Systematic);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExtendedDecodeUnsupported);
  }
}

TEST(Codec, NonGenericRedundancySetIsRejected) {
  std::vector<int> first;
  for (int h = 0; h < 9; ++h) first.push_back(h);
  try {
    make_code_with_wp(hermitian(), first);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonGenericSupport);
  }
  // The constructor's choice: the first eight points and the tenth.
  EXPECT_EQ(hermitian().wp, (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 9}));
}

TEST(Codec, ConcurrentDecodesShareOneSpec) {
  const CodeSpec& s = hermitian();
  std::mt19937 rng(58);
  std::vector<std::vector<Elt>> sent, received;
  for (int i = 0; i < 64; ++i) {
    sent.push_back(encode_systematic(s, oracle::random_word(rng, s.k)));
    received.push_back(corrupt(rng, sent.back(), 3));
  }
  std::vector<int> ok(received.size(), 0);
  std::vector<std::thread> pool;
  for (int w = 0; w < 4; ++w)
    pool.emplace_back([&, w] {
      for (size_t i = w; i < received.size(); i += 4) ok[i] = decode(s, received[i], DecodeMode::Systematic).codeword == sent[i];
    });
  for (auto& t : pool) t.join();
  EXPECT_EQ(std::count(ok.begin(), ok.end(), 1), 64);
}

TEST(Codec, WrongLengthsThrow) {
  EXPECT_THROW(encode_systematic(hermitian(), std::vector<Elt>(3)), Error);
  EXPECT_THROW(decode(hermitian(), std::vector<Elt>(5), DecodeMode::Systematic), Error);
  EXPECT_THROW(parity(hermitian(), std::vector<Elt>(25)), Error);
}
