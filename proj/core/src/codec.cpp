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

#include "algcodes/codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "algcodes/error.hpp"

namespace algcodes {
namespace {

std::vector<Point> pick(const std::vector<Point>& points, const std::vector<int>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(points[i]);
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& idx) {
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int i : idx) used[i] = true;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

int designed_errors(const CodeSpec& s) {
  switch (s.kind) {
    case CodeKind::Curve:
      return std::max(0, (s.m - 2 * s.curve->genus() + 1) / 2);
    case CodeKind::HCRS:
      return std::max(0, (s.m - 1) / 2);
    case CodeKind::RS:
      return s.m / 2;
  }
  return 0;
}

void check_length(const std::vector<Elt>& v, size_t want, const char* what) {
  if (v.size() != want)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                                  ", expected " + std::to_string(want));
}

// Codeword on the nonzero points whose DFT is tilde minus the extension of
// known|phi_m by the redundancy-set recurrences.
std::vector<Elt> systematic_core(const CodeSpec& spec, const Array2D& tilde, const Array2D& known) {
  const Array2D breve = extend(spec.field, PartialArray::restrict_to(known, spec.phi_m), spec.basis_wp);
  const Array2D c = idft2(spec.field, sub(spec.field, tilde, breve));
  std::vector<Elt> out;
  out.reserve(spec.points.size());
  for (const Point& p : spec.points) out.push_back(c(p.x.log, p.y.log));
  return out;
}

Array2D info_array(const CodeSpec& spec, const std::vector<Elt>& info) {
  Array2D a(spec.field.order());
  for (size_t t = 0; t < spec.wp_prime.size(); ++t) {
    const Point& p = spec.points[spec.wp_prime[t]];
    a(p.x.log, p.y.log) = info[t];
  }
  return a;
}

}  // namespace

void CodeSpec::prepare() {
  const int total = static_cast<int>(points.size());
  if (total != n) throw Error(ErrorCode::InvalidArgument, "point count differs from n");
  if (static_cast<int>(wp.size()) != n - k || phi_m.size() != n - k)
    throw Error(ErrorCode::InvalidArgument, "redundancy set must have n-k elements");
  std::vector<int> seen = wp;
  seen.insert(seen.end(), wp_prime.begin(), wp_prime.end());
  std::sort(seen.begin(), seen.end());
  bool partition = seen.size() == static_cast<size_t>(n);
  for (int i = 0; partition && i < n; ++i) partition = seen[i] == i;
  if (!partition)
    throw Error(ErrorCode::InvalidArgument, "redundancy and information sets must partition the points");
  for (const Point& p : points)
    if (p.has_zero_coordinate()) throw Error(ErrorCode::ZeroCoordinatePoint, "code locations need nonzero coordinates");
  for (const Point& p : zero_points)
    if (!p.has_zero_coordinate()) throw Error(ErrorCode::NotAZeroPoint, "lengthening points need a zero coordinate");
  if (basis_all.delta.size() != n) throw Error(ErrorCode::InvalidArgument, "ambient staircase must have n cells");
  if (!basis_wp.delta.same_cells(phi_m))
    throw Error(ErrorCode::NonGenericSupport, "staircase of the redundancy set differs from the defining set");
  auto v = std::make_shared<SyndromeVoter>(field, basis_all, phi_m, order);
  const int design = designed_errors(*this);
  max_errors = v->unknown_cells().empty() ? design : std::min(design, (v->min_pairs() - 1) / 2);
  max_errors = std::max(max_errors, 0);
  voter = std::move(v);
}

CodeSpec make_code_with_wp(CodeSpec s, std::vector<int> wp) {
  for (int i : wp)
    if (i < 0 || i >= s.n) throw Error(ErrorCode::InvalidArgument, "redundancy index out of range");
  s.wp = std::move(wp);
  s.wp_prime = complement(s.n, s.wp);
  s.basis_wp = vanishing_ideal_basis(pick(s.points, s.wp), s.order.groebner_order(), s.field);
  s.prepare();
  return s;
}

CodeSpec make_curve_code(const Field& f, const CurveSpec& curve, int m, bool with_zero_points) {
  const CodeParams params = curve_code_params(curve, f, m);
  CodeSpec s;
  s.field = f;
  s.kind = CodeKind::Curve;
  s.curve = curve;
  s.m = m;
  s.order = MonomialOrder::weighted(curve.a(), curve.b());
  s.points = enumerate_points(curve, f, false);
  if (with_zero_points)
    for (const Point& p : enumerate_points(curve, f, true))
      if (p.has_zero_coordinate()) s.zero_points.push_back(p);
  s.phi_m = phi_m(s.order, m, f, curve.a());
  s.n = params.n;
  s.k = params.k;
  s.basis_all = vanishing_ideal_basis(s.points, s.order, f);

  const int r = s.n - s.k;
  std::vector<int> wp;
  for (int i = 0; i + 1 < r; ++i) wp.push_back(i);
  for (int last = r - 1; last < s.n; ++last) {
    wp.push_back(last);
    GroebnerBasis gb = vanishing_ideal_basis(pick(s.points, wp), s.order, f);
    if (gb.delta.same_cells(s.phi_m)) {
      s.wp = wp;
      s.wp_prime = complement(s.n, wp);
      s.basis_wp = std::move(gb);
      s.prepare();
      return s;
    }
    wp.pop_back();
  }
  throw Error(ErrorCode::NonGenericSupport, "no generic redundancy set found for m=" + std::to_string(m));
}

CodeSpec make_hcrs_code(const Field& f, int m) {
  const CodeParams params = hcrs_code_params(f, m);
  CodeSpec s;
  s.field = f;
  s.kind = CodeKind::HCRS;
  s.m = m;
  s.order = MonomialOrder::hyperbolic();
  const int side = f.order();
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) s.points.push_back({Elt{i}, Elt{j}});
  s.phi_m = phi_m(s.order, m, f, 0);
  s.n = params.n;
  s.k = params.k;
  s.basis_all = full_grid_basis(f, s.order);
  std::vector<int> wp;
  for (Monomial c : s.phi_m.cells()) wp.push_back(c.i * side + c.j);
  std::sort(wp.begin(), wp.end());
  return make_code_with_wp(std::move(s), std::move(wp));
}

CodeSpec make_rs_code(const Field& f, int r) {
  const CodeParams params = rs_code_params(f, r);
  CodeSpec s;
  s.field = f;
  s.kind = CodeKind::RS;
  s.m = r;
  s.order = MonomialOrder::graded();
  for (int h = 0; h < f.order(); ++h) s.points.push_back({Elt{h}, Elt::one()});
  std::vector<Monomial> cells;
  for (int i = 0; i < r; ++i) cells.push_back({i, 0});
  s.phi_m = SupportSet(std::move(cells), s.order);
  s.n = params.n;
  s.k = params.k;
  s.basis_all = vanishing_ideal_basis(s.points, s.order, f);
  std::vector<int> wp;
  for (int h = 0; h < r; ++h) wp.push_back(h);
  return make_code_with_wp(std::move(s), std::move(wp));
}

std::vector<Monomial> info_cells(const CodeSpec& spec) {
  std::vector<Monomial> out;
  for (Monomial c : spec.basis_all.delta.cells())
    if (!spec.phi_m.contains(c)) out.push_back(c);
  spec.order.sort(out);
  return out;
}

Matrix check_matrix(const CodeSpec& spec) {
  const Field& f = spec.field;
  const auto& cols = spec.phi_m.cells();
  Matrix h(spec.length(), static_cast<int>(cols.size()));
  auto fill_row = [&](int row, const Point& p) {
    for (size_t l = 0; l < cols.size(); ++l) h(row, static_cast<int>(l)) = f.mul(f.pow(p.x, cols[l].i), f.pow(p.y, cols[l].j));
  };
  for (int r = 0; r < spec.n; ++r) fill_row(r, spec.points[r]);
  for (size_t z = 0; z < spec.zero_points.size(); ++z) fill_row(spec.n + static_cast<int>(z), spec.zero_points[z]);
  return h;
}

std::vector<Elt> parity(const CodeSpec& spec, const std::vector<Elt>& word) {
  if (word.size() != static_cast<size_t>(spec.n) && word.size() != static_cast<size_t>(spec.length()))
    check_length(word, spec.n, "word");
  const Field& f = spec.field;
  const auto& cols = spec.phi_m.cells();
  std::vector<Elt> out(cols.size());
  for (size_t h = 0; h < word.size(); ++h) {
    if (word[h].is_zero()) continue;
    const Point& p = h < spec.points.size() ? spec.points[h] : spec.zero_points[h - spec.points.size()];
    for (size_t l = 0; l < cols.size(); ++l)
      out[l] = f.add(out[l], f.mul(word[h], f.mul(f.pow(p.x, cols[l].i), f.pow(p.y, cols[l].j))));
  }
  return out;
}

bool is_codeword(const CodeSpec& spec, const std::vector<Elt>& word) {
  const auto s = parity(spec, word);
  return std::all_of(s.begin(), s.end(), [](Elt e) { return e.is_zero(); });
}

Matrix generator_matrix(const CodeSpec& spec) {
  const Field& f = spec.field;
  const Matrix h = check_matrix(spec);
  std::vector<int> rows_wp = spec.wp, rows_info = spec.wp_prime;
  const Matrix hw = h.transpose().columns(rows_wp).transpose();
  const Matrix hi = h.transpose().columns(rows_info).transpose();
  const Matrix red = multiply(f, hi, inverse(f, hw));  // k x (n-k)
  Matrix g(spec.k, spec.n);
  for (int t = 0; t < spec.k; ++t) {
    g(t, spec.wp_prime[t]) = Elt::one();
    for (size_t l = 0; l < spec.wp.size(); ++l) g(t, spec.wp[l]) = f.neg(red(t, static_cast<int>(l)));
  }
  return g;
}

std::vector<Elt> encode_matrix_oracle(const CodeSpec& spec, const std::vector<Elt>& info) {
  check_length(info, spec.k, "information");
  return multiply(spec.field, generator_matrix(spec).transpose(), info);
}

Array2D nonsystematic_array(const CodeSpec& spec, const std::vector<Elt>& info) {
  const auto cells = info_cells(spec);
  check_length(info, cells.size(), "information");
  PartialArray a(spec.field.order());
  for (Monomial c : spec.phi_m.cells()) a.set(c, Elt::zero());
  for (size_t t = 0; t < cells.size(); ++t) a.set(cells[t], info[t]);
  return idft2(spec.field, extend(spec.field, a, spec.basis_all));
}

std::vector<Elt> encode_nonsystematic(const CodeSpec& spec, const std::vector<Elt>& info) {
  Array2D c = nonsystematic_array(spec, info);
  std::vector<Elt> out;
  out.reserve(spec.points.size());
  for (const Point& p : spec.points) {
    out.push_back(c(p.x.log, p.y.log));
    c(p.x.log, p.y.log) = Elt::zero();
  }
  if (!c.is_zero()) throw std::logic_error("non-systematic array is nonzero off the code locations");
  return out;
}

std::vector<Elt> encode_systematic(const CodeSpec& spec, const std::vector<Elt>& info) {
  check_length(info, spec.wp_prime.size(), "information");
  const Array2D tilde = dft2(spec.field, info_array(spec, info));
  return systematic_core(spec, tilde, tilde);
}

Array2D embed(const CodeSpec& spec, const std::vector<Elt>& word) {
  if (word.size() < spec.points.size()) check_length(word, spec.points.size(), "word");
  Array2D a(spec.field.order());
  for (size_t h = 0; h < spec.points.size(); ++h) a(spec.points[h].x.log, spec.points[h].y.log) = word[h];
  return a;
}

Syndromes syndromes(const CodeSpec& spec, const std::vector<Elt>& word) {
  if (word.size() != static_cast<size_t>(spec.n) && word.size() != static_cast<size_t>(spec.length()))
    check_length(word, spec.n, "word");
  Syndromes s;
  s.full = dft2(spec.field, embed(spec, word));
  for (size_t z = 0; z + spec.points.size() < word.size(); ++z)
    s.full = add(spec.field, s.full, analogue_dft(spec.field, spec.zero_points[z], word[spec.points.size() + z]));
  for (Monomial c : spec.phi_m.cells()) s.on_phi.push_back(s.full(c.i, c.j));
  return s;
}

DecodeResult decode(const CodeSpec& spec, const std::vector<Elt>& received, DecodeMode mode) {
  if (received.size() != static_cast<size_t>(spec.n)) {
    if (!spec.zero_points.empty() && received.size() == static_cast<size_t>(spec.length()))
      throw Error(ErrorCode::ExtendedDecodeUnsupported, "words with zero-coordinate positions cannot be decoded");
    check_length(received, spec.n, "received word");
  }
  const Field& f = spec.field;
  const Array2D full = dft2(f, embed(spec, received));
  const VotingResult vr = spec.voter->run(PartialArray::restrict_to(full, spec.phi_m), spec.max_errors);
  const Array2D diff = sub(f, full, vr.syndromes);

  // The corrected word must live on the code locations.
  Array2D grid = idft2(f, diff);
  DecodeResult out;
  out.voted_cells = vr.voted_cells;
  for (size_t h = 0; h < spec.points.size(); ++h) {
    const Point& p = spec.points[h];
    out.codeword.push_back(grid(p.x.log, p.y.log));
    grid(p.x.log, p.y.log) = Elt::zero();
    if (out.codeword.back() != received[h]) ++out.errors;
  }
  if (!grid.is_zero()) throw Error(ErrorCode::DecodingFailure, "error pattern leaves the code locations");
  if (out.errors > spec.max_errors)
    throw Error(ErrorCode::DecodingFailure, std::to_string(out.errors) + " errors exceed the capability");

  std::vector<Elt> again;
  if (mode == DecodeMode::NonSystematic) {
    for (Monomial c : info_cells(spec)) out.info.push_back(diff(c.i, c.j));
    again = encode_nonsystematic(spec, out.info);
  } else {
    for (int h : spec.wp_prime) out.info.push_back(out.codeword[h]);
    again = encode_systematic(spec, out.info);
  }
  if (again != out.codeword || !is_codeword(spec, out.codeword))
    throw Error(ErrorCode::DecodingFailure, "re-encoding does not reproduce the corrected word");
  return out;
}

Array2D analogue_dft(const Field& f, const Point& point, Elt value) {
  if (!point.has_zero_coordinate()) throw Error(ErrorCode::NotAZeroPoint, "point has no zero coordinate");
  Array2D a(f.order());
  for (int i = 0; i < f.order(); ++i)
    for (int j = 0; j < f.order(); ++j) a(i, j) = f.mul(value, f.mul(f.pow(point.x, i), f.pow(point.y, j)));
  return a;
}

std::vector<Elt> encode_systematic_extended(const CodeSpec& spec, const std::vector<Elt>& info) {
  check_length(info, spec.wp_prime.size() + spec.zero_points.size(), "information");
  const Field& f = spec.field;
  const std::vector<Elt> on_points(info.begin(), info.begin() + static_cast<long>(spec.wp_prime.size()));
  const Array2D tilde = dft2(f, info_array(spec, on_points));
  Array2D y = tilde;
  for (size_t z = 0; z < spec.zero_points.size(); ++z)
    y = add(f, y, analogue_dft(f, spec.zero_points[z], info[spec.wp_prime.size() + z]));
  // The zero points are not grid cells, so only the point part of y is
  // transformed back; their contribution enters through the extension.
  std::vector<Elt> out = systematic_core(spec, tilde, y);
  out.insert(out.end(), info.begin() + static_cast<long>(spec.wp_prime.size()), info.end());
  return out;
}

}  // namespace algcodes
