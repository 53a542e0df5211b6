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

#include "algcodes/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "algcodes/error.hpp"

namespace algcodes {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Elt parse_elt(const Field& f, long long v) {
  if (v < -1 || v >= f.order()) bad("value " + std::to_string(v) + " is not a log in [-1, " + std::to_string(f.order() - 1) + "]");
  return Elt{static_cast<int>(v)};
}

bool content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<long long> ints(const std::string& line) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long v = 0;
  while (ss >> v) out.push_back(v);
  ss.clear();
  std::string rest;
  if (ss >> rest) bad("unexpected token '" + rest + "'");
  return out;
}

std::vector<Monomial> carrier_cells(const CodeSpec& spec, InfoLayout layout) {
  if (layout == InfoLayout::NonSystematic) return info_cells(spec);
  std::vector<Monomial> out;
  for (int h : spec.wp_prime) out.push_back(spec.points[h].cell());
  return out;
}

// Checks that a grid is zero outside the given cells and reads them.
std::vector<Elt> take(const Array2D& grid, const std::vector<Monomial>& cells, const char* where) {
  Array2D rest = grid;
  std::vector<Elt> out;
  for (Monomial c : cells) {
    out.push_back(rest(c.i, c.j));
    rest(c.i, c.j) = Elt::zero();
  }
  if (!rest.is_zero()) bad(std::string("nonzero value outside the ") + where);
  return out;
}

std::vector<Elt> zero_tail(const CodeSpec& spec, const ArrayFile& a) {
  if (a.zero_entries.size() != spec.zero_points.size()) bad("zero-point trailer must list every zero point of the code");
  std::vector<Elt> out;
  for (const Point& p : spec.zero_points) {
    auto it = std::find_if(a.zero_entries.begin(), a.zero_entries.end(), [&](const auto& e) { return e.first == p; });
    if (it == a.zero_entries.end()) bad("zero point (" + std::to_string(p.x.log) + ", " + std::to_string(p.y.log) + ") missing");
    out.push_back(it->second);
  }
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

template <class T>
T expect(std::istream& in, const char* tag) {
  std::string word;
  T value{};
  if (!(in >> word) || word != tag) bad(std::string("expected '") + tag + "'");
  if (!(in >> value)) bad(std::string("missing value after '") + tag + "'");
  return value;
}

std::vector<Point> read_points(std::istream& in, const Field& f, size_t count) {
  std::vector<Point> out;
  for (size_t t = 0; t < count; ++t) {
    long long x = 0, y = 0;
    if (!(in >> x >> y)) bad("bad point line");
    out.push_back({parse_elt(f, x), parse_elt(f, y)});
  }
  return out;
}

void check_basis(const Field& f, const GroebnerBasis& gb, const std::vector<Point>& points, const char* name) {
  for (const Poly2& g : gb.elements) {
    for (const auto& [m, c] : g.terms())
      if (!f.valid(c)) bad(std::string(name) + " has an invalid coefficient");
    for (const Point& p : points)
      if (!g.evaluate(f, p.x, p.y).is_zero()) bad(std::string(name) + " does not vanish on its points");
  }
}

}  // namespace

Field parse_field(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::replace(s.begin(), s.end(), ':', ' ');
  const auto v = ints(s);
  if (v.size() < 3) bad("field must be 'p,m,c0:c1:...:cm'");
  const int p = static_cast<int>(v[0]), m = static_cast<int>(v[1]);
  if (m < 1 || v.size() != static_cast<size_t>(m) + 3) bad("field needs m+1 polynomial coefficients");
  std::vector<int> poly(v.begin() + 2, v.end());
  return Field(p, m, poly);
}

std::string format_field(const Field& f) {
  std::string out = std::to_string(f.p()) + "," + std::to_string(f.m()) + ",";
  for (size_t i = 0; i < f.primitive_poly().size(); ++i)
    out += (i ? ":" : "") + std::to_string(f.primitive_poly()[i]);
  return out;
}

ArrayFile read_array(std::istream& in, const Field& f, bool line) {
  const int side = f.order();
  ArrayFile a{Array2D(side), {}};
  std::string text;
  const int rows = line ? 1 : side;
  for (int r = 0; r < rows; ++r) {
    if (!content_line(in, text)) bad("array ends after " + std::to_string(r) + " rows");
    const auto v = ints(text);
    if (static_cast<int>(v.size()) != side)
      bad("row " + std::to_string(r) + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(side));
    for (int c = 0; c < side; ++c) {
      if (line)
        a.grid(c, 0) = parse_elt(f, v[c]);
      else
        a.grid(r, c) = parse_elt(f, v[c]);
    }
  }
  if (!content_line(in, text)) return a;
  if (text.find("zero-points") == std::string::npos) bad("unexpected content after the array");
  while (content_line(in, text)) {
    std::string s = text;
    for (char& ch : s)
      if (ch == '(' || ch == ')' || ch == ',' || ch == ':') ch = ' ';
    const auto v = ints(s);
    if (v.size() != 3) bad("zero-point lines read '(xlog, ylog): vlog'");
    const Point p{parse_elt(f, v[0]), parse_elt(f, v[1])};
    if (!p.has_zero_coordinate()) bad("zero-point entry has no zero coordinate");
    a.zero_entries.push_back({p, parse_elt(f, v[2])});
  }
  return a;
}

void write_array(std::ostream& out, const ArrayFile& a, bool line) {
  const int side = a.grid.side();
  if (line) {
    out << "# position h = coefficient of x^h; log notation, -1 = zero\n";
    for (int h = 0; h < side; ++h) out << (h ? " " : "") << a.grid(h, 0).log;
    out << '\n';
  } else {
    out << "# rows: log x, columns: log y; log notation, -1 = zero\n";
    for (int i = 0; i < side; ++i) {
      for (int j = 0; j < side; ++j) out << (j ? " " : "") << a.grid(i, j).log;
      out << '\n';
    }
  }
  if (a.zero_entries.empty()) return;
  out << "zero-points\n";
  for (const auto& [p, v] : a.zero_entries) out << '(' << p.x.log << ", " << p.y.log << "): " << v.log << '\n';
}

bool uses_line_format(const CodeSpec& spec) { return spec.kind == CodeKind::RS; }

ArrayFile word_to_array(const CodeSpec& spec, const std::vector<Elt>& word) {
  ArrayFile a{embed(spec, word), {}};
  for (size_t z = 0; z + spec.points.size() < word.size(); ++z)
    a.zero_entries.push_back({spec.zero_points[z], word[spec.points.size() + z]});
  return a;
}

std::vector<Elt> array_to_word(const CodeSpec& spec, const ArrayFile& a) {
  std::vector<Monomial> cells;
  for (const Point& p : spec.points) cells.push_back(p.cell());
  std::vector<Elt> word = take(a.grid, cells, "code locations");
  if (!a.zero_entries.empty()) {
    const auto tail = zero_tail(spec, a);
    word.insert(word.end(), tail.begin(), tail.end());
  }
  return word;
}

ArrayFile info_to_array(const CodeSpec& spec, const std::vector<Elt>& info, InfoLayout layout) {
  const auto cells = carrier_cells(spec, layout);
  const size_t tail = layout == InfoLayout::Extended ? spec.zero_points.size() : 0;
  if (info.size() != cells.size() + tail) throw Error(ErrorCode::DimensionMismatch, "information length mismatch");
  ArrayFile a{Array2D(spec.field.order()), {}};
  for (size_t t = 0; t < cells.size(); ++t) a.grid(cells[t].i, cells[t].j) = info[t];
  for (size_t z = 0; z < tail; ++z) a.zero_entries.push_back({spec.zero_points[z], info[cells.size() + z]});
  return a;
}

std::vector<Elt> array_to_info(const CodeSpec& spec, const ArrayFile& a, InfoLayout layout) {
  std::vector<Elt> info = take(a.grid, carrier_cells(spec, layout), "information cells");
  if (layout == InfoLayout::Extended) {
    if (spec.zero_points.empty()) bad("the code has no zero points");
    const auto tail = zero_tail(spec, a);
    info.insert(info.end(), tail.begin(), tail.end());
  } else if (!a.zero_entries.empty()) {
    bad("zero-point trailer is only allowed for extended encoding");
  }
  return info;
}

void write_codespec(std::ostream& out, const CodeSpec& spec) {
  const Field& f = spec.field;
  out << "algcodes-codespec 1\n";
  out << "field " << f.p() << ' ' << f.m();
  for (int c : f.primitive_poly()) out << ' ' << c;
  out << '\n';
  switch (spec.kind) {
    case CodeKind::Curve: {
      const CurveSpec& c = *spec.curve;
      out << "kind curve " << c.a() << ' ' << c.b() << ' ' << spec.m << '\n';
      out << "curve " << c.defining_poly().size() << '\n';
      for (const auto& [m, v] : c.defining_poly().terms()) out << m.i << ' ' << m.j << ' ' << v.log << '\n';
      break;
    }
    case CodeKind::HCRS:
      out << "kind hcrs " << spec.m << '\n';
      break;
    case CodeKind::RS:
      out << "kind rs " << spec.m << '\n';
      break;
  }
  out << "points " << spec.points.size() << '\n';
  for (const Point& p : spec.points) out << p.x.log << ' ' << p.y.log << '\n';
  out << "zero-points " << spec.zero_points.size() << '\n';
  for (const Point& p : spec.zero_points) out << p.x.log << ' ' << p.y.log << '\n';
  out << "wp " << spec.wp.size() << '\n';
  for (size_t t = 0; t < spec.wp.size(); ++t) out << (t ? " " : "") << spec.wp[t];
  out << "\nbasis-wp\n";
  write_basis(out, spec.basis_wp);
  out << "basis-all\n";
  write_basis(out, spec.basis_all);
  out << "end\n";
}

CodeSpec read_codespec(std::istream& in) {
  if (expect<int>(in, "algcodes-codespec") != 1) bad("unsupported codespec version");
  CodeSpec s;
  {
    const int p = expect<int>(in, "field");
    int m = 0;
    if (!(in >> m) || m < 1 || m > 16) bad("bad field degree");
    std::vector<int> poly(static_cast<size_t>(m) + 1);
    for (int& c : poly)
      if (!(in >> c)) bad("bad field polynomial");
    s.field = Field(p, m, poly);
  }
  const Field& f = s.field;
  const std::string kind = expect<std::string>(in, "kind");
  CodeParams params;
  if (kind == "curve") {
    int a = 0, b = 0;
    if (!(in >> a >> b >> s.m)) bad("bad curve kind line");
    const size_t terms = expect<size_t>(in, "curve");
    Poly2 poly;
    for (size_t t = 0; t < terms; ++t) {
      int i = 0, j = 0;
      long long v = 0;
      if (!(in >> i >> j >> v) || i < 0 || j < 0) bad("bad curve term");
      poly.set({i, j}, parse_elt(f, v));
    }
    s.kind = CodeKind::Curve;
    s.curve = CurveSpec(a, b, poly);
    s.order = MonomialOrder::weighted(a, b);
    s.phi_m = phi_m(s.order, s.m, f, a);
    params = curve_code_params(*s.curve, f, s.m);
  } else if (kind == "hcrs") {
    if (!(in >> s.m)) bad("bad hcrs kind line");
    s.kind = CodeKind::HCRS;
    s.order = MonomialOrder::hyperbolic();
    s.phi_m = phi_m(s.order, s.m, f, 0);
    params = hcrs_code_params(f, s.m);
  } else if (kind == "rs") {
    if (!(in >> s.m)) bad("bad rs kind line");
    s.kind = CodeKind::RS;
    s.order = MonomialOrder::graded();
    params = rs_code_params(f, s.m);
    std::vector<Monomial> cells;
    for (int i = 0; i < s.m; ++i) cells.push_back({i, 0});
    s.phi_m = SupportSet(std::move(cells), s.order);
  } else {
    bad("unknown code kind '" + kind + "'");
  }
  s.n = params.n;
  s.k = params.k;

  const size_t npoints = expect<size_t>(in, "points");
  if (npoints != static_cast<size_t>(s.n)) bad("point count does not match the code length");
  s.points = read_points(in, f, npoints);
  s.zero_points = read_points(in, f, expect<size_t>(in, "zero-points"));
  std::vector<Point> sorted = s.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad("repeated point");
  if (s.curve) {
    for (const Point& p : s.points)
      if (!s.curve->defining_poly().evaluate(f, p.x, p.y).is_zero()) bad("point is not on the curve");
    for (const Point& p : s.zero_points)
      if (!s.curve->defining_poly().evaluate(f, p.x, p.y).is_zero()) bad("zero point is not on the curve");
  }

  const size_t nwp = expect<size_t>(in, "wp");
  for (size_t t = 0; t < nwp; ++t) {
    int h = 0;
    if (!(in >> h) || h < 0 || h >= s.n) bad("bad redundancy index");
    s.wp.push_back(h);
  }
  s.wp_prime = complement(s.n, s.wp);
  std::string tag;
  if (!(in >> tag) || tag != "basis-wp") bad("expected 'basis-wp'");
  s.basis_wp = read_basis(in, s.order);
  if (!(in >> tag) || tag != "basis-all") bad("expected 'basis-all'");
  s.basis_all = read_basis(in, s.order);
  if (!(in >> tag) || tag != "end") bad("expected 'end'");

  std::vector<Point> wp_points;
  for (int h : s.wp) wp_points.push_back(s.points[h]);
  check_basis(f, s.basis_wp, wp_points, "basis-wp");
  check_basis(f, s.basis_all, s.points, "basis-all");
  s.prepare();
  return s;
}

}  // namespace algcodes
