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

/// Univariate polynomial, coefficient of x^i at index i.
using UniPoly = std::vector<Elt>;

Elt evaluate(const Field& f, const UniPoly& p, Elt x);

/// (x - 1)(x - alpha) ... (x - alpha^(r-1)). Throws BadRedundancy unless 1 <= r < q-1.
UniPoly rs_gen_poly(const Field& f, int r);

// The encoders take I(x) as a length q-1 vector whose first r coefficients
// are zero and return codewords of length q-1; position h is the
// coefficient of x^h.

/// I(x) mod G(x).
UniPoly rs_remainder(const Field& f, int r, const UniPoly& info);
/// c = I - (I mod G); systematic on positions r..q-2.
std::vector<Elt> rs_encode_euclid(const Field& f, int r, const UniPoly& info);
/// c_h = sum_i I_i alpha^(-ih); c(alpha^i) = -I_i.
std::vector<Elt> rs_encode_idft(const Field& f, int r, const UniPoly& info);
/// d_h = I(alpha^h) for h < r, then d_h = -sum_{i<r} G_i d_(i+h-r).
std::vector<Elt> rs_d_sequence(const Field& f, int r, const UniPoly& info);
/// c = I - R with R recovered from the d sequence by an inverse transform.
std::vector<Elt> rs_encode_dh(const Field& f, int r, const UniPoly& info);

/// Shortest connection polynomial (Lambda_0 = 1) generating s.
UniPoly berlekamp_massey(const Field& f, const std::vector<Elt>& s);
/// Corrects up to r/2 errors in a word of the code generated by rs_gen_poly.
/// Throws DecodingFailure otherwise.
std::vector<Elt> rs_decode(const Field& f, int r, const std::vector<Elt>& received);

}  // namespace algcodes
