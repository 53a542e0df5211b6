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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "algcodes/codec.hpp"

namespace algcodes {

/// "p,m,c0:c1:...:cm" with primitive-polynomial coefficients low to high.
Field parse_field(const std::string& text);
std::string format_field(const Field& f);

/// Contents of an array file in log notation (-1 = zero). Grid files have
/// q-1 rows (log x) of q-1 columns (log y); line files hold one row of q-1
/// positions, stored here in column 0. Zero-point values come from an
/// optional trailer of "(xlog, ylog): vlog" lines.
struct ArrayFile {
  Array2D grid;
  std::vector<std::pair<Point, Elt>> zero_entries;
};

ArrayFile read_array(std::istream& in, const Field& f, bool line);
void write_array(std::ostream& out, const ArrayFile& a, bool line);

/// RS words are stored as a single line.
bool uses_line_format(const CodeSpec& spec);

/// Codeword (plus zero-point tail if present) as an array file and back.
ArrayFile word_to_array(const CodeSpec& spec, const std::vector<Elt>& word);
std::vector<Elt> array_to_word(const CodeSpec& spec, const ArrayFile& a);

enum class InfoLayout { NonSystematic, Systematic, Extended };
/// Information symbols sit at info_cells() for NonSystematic, at the
/// information points for Systematic, and additionally in the zero-point
/// trailer for Extended. All other cells must be zero.
ArrayFile info_to_array(const CodeSpec& spec, const std::vector<Elt>& info, InfoLayout layout);
std::vector<Elt> array_to_info(const CodeSpec& spec, const ArrayFile& a, InfoLayout layout);

void write_codespec(std::ostream& out, const CodeSpec& spec);
/// Throws ParseError on malformed input and the construction errors of
/// CodeSpec::prepare() on inconsistent content.
CodeSpec read_codespec(std::istream& in);

}  // namespace algcodes
