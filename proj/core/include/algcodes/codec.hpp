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

#include <memory>
#include <optional>
#include <vector>

#include "algcodes/bms.hpp"
#include "algcodes/linalg.hpp"
#include "algcodes/voting.hpp"

namespace algcodes {

enum class CodeKind { Curve, HCRS, RS };

/// Everything needed to encode and decode one code. Immutable once
/// prepare()d; copies share the voting plan.
struct CodeSpec {
  Field field = Field::gf9();
  CodeKind kind = CodeKind::Curve;
  std::optional<CurveSpec> curve;
  /// Design parameter: m for curve and hyperbolic codes, the redundancy r for RS.
  int m = 0;
  MonomialOrder order = MonomialOrder::graded();
  /// Code locations with nonzero coordinates, in canonical order.
  std::vector<Point> points;
  /// Lengthening positions (at least one zero coordinate).
  std::vector<Point> zero_points;
  SupportSet phi_m;
  /// Indices into points: redundancy positions and information positions.
  std::vector<int> wp;
  std::vector<int> wp_prime;
  GroebnerBasis basis_wp;
  GroebnerBasis basis_all;
  int n = 0;
  int k = 0;
  /// Number of errors decode() is designed to correct.
  int max_errors = 0;
  std::shared_ptr<const SyndromeVoter> voter;

  /// Checks the invariants and builds the voting plan. Throws
  /// NonGenericSupport when the staircase of basis_wp differs from phi_m.
  void prepare();
  int length() const noexcept { return n + static_cast<int>(zero_points.size()); }
};

/// Canonical order of points for curve codes: lexicographic on (log x, log y).
/// The redundancy set is the first n-k points, with the last one replaced by
/// later points until the support is generic.
CodeSpec make_curve_code(const Field& f, const CurveSpec& curve, int m, bool with_zero_points = false);
/// Two-dimensional cyclic code on all (q-1)^2 grid positions. The redundancy
/// positions are the cells of phi_m themselves.
CodeSpec make_hcrs_code(const Field& f, int m);
/// Reed-Solomon code seen as points (alpha^h, 1); position h is the
/// coefficient of x^h.
CodeSpec make_rs_code(const Field& f, int r);
/// Rebuilds the bases for an explicit redundancy set; used when loading.
CodeSpec make_code_with_wp(CodeSpec base, std::vector<int> wp);

/// Cells of the ambient staircase outside phi_m, in the code's order; these
/// carry the non-systematic information symbols.
std::vector<Monomial> info_cells(const CodeSpec& spec);

/// Rows: points then zero points. Columns: the cells of phi_m.
Matrix check_matrix(const CodeSpec& spec);
/// word^T * check_matrix. A word of length n is taken to have zero tail.
std::vector<Elt> parity(const CodeSpec& spec, const std::vector<Elt>& word);
bool is_codeword(const CodeSpec& spec, const std::vector<Elt>& word);

/// k x n generator matrix with the identity on the information positions.
Matrix generator_matrix(const CodeSpec& spec);
/// info (one symbol per wp_prime entry, same order) times the generator matrix.
std::vector<Elt> encode_matrix_oracle(const CodeSpec& spec, const std::vector<Elt>& info);

/// info: one symbol per info_cells() entry.
std::vector<Elt> encode_nonsystematic(const CodeSpec& spec, const std::vector<Elt>& info);
/// The IDFT of the extended information array, before reading the points.
Array2D nonsystematic_array(const CodeSpec& spec, const std::vector<Elt>& info);
/// info: one symbol per wp_prime entry.
std::vector<Elt> encode_systematic(const CodeSpec& spec, const std::vector<Elt>& info);

/// Places a word on the grid (zeros off the points).
Array2D embed(const CodeSpec& spec, const std::vector<Elt>& word);

struct Syndromes {
  std::vector<Elt> on_phi;  // in phi_m order
  Array2D full;
};
Syndromes syndromes(const CodeSpec& spec, const std::vector<Elt>& word);

enum class DecodeMode { NonSystematic, Systematic };

struct DecodeResult {
  std::vector<Elt> codeword;
  std::vector<Elt> info;
  int errors = 0;
  int voted_cells = 0;
};
/// Corrects up to spec.max_errors errors. Throws DecodingFailure when the
/// word cannot be decoded; the result is always re-encoded and checked.
/// Words of the lengthened code are rejected with ExtendedDecodeUnsupported.
DecodeResult decode(const CodeSpec& spec, const std::vector<Elt>& received, DecodeMode mode);

/// value * x^i * y^j over the grid, with 0^0 = 1.
Array2D analogue_dft(const Field& f, const Point& point, Elt value);
/// info: wp_prime symbols followed by one per zero point. The result has
/// length n + #zero_points and carries the zero-point symbols verbatim.
std::vector<Elt> encode_systematic_extended(const CodeSpec& spec, const std::vector<Elt>& info);

}  // namespace algcodes
