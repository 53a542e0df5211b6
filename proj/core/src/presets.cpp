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

#include "algcodes/presets.hpp"

#include "algcodes/error.hpp"

namespace algcodes {

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = {
      {"hermitian-q9", "hermitian", 11, "Hermitian curve y^3 + y = x^4 over GF(9), 24 points plus 3 zero points"},
      {"hcrs-q9", "hcrs", 9, "hyperbolic cascaded Reed-Solomon code on the 8x8 grid over GF(9)"},
      {"rs-q9", "rs", 3, "Reed-Solomon code of length 8 over GF(9), redundancy m+1"},
  };
  return all;
}

CodeSpec make_code(const Field& f, const std::string& kind, int m) {
  if (kind == "hermitian") return make_curve_code(f, CurveSpec::hermitian(f), m, true);
  if (kind == "hcrs") return make_hcrs_code(f, m);
  if (kind == "rs") return make_rs_code(f, m + 1);
  throw Error(ErrorCode::InvalidArgument, "unknown code kind '" + kind + "'");
}

CodeSpec make_preset(const std::string& name, std::optional<int> m) {
  for (const Preset& p : presets())
    if (p.name == name) return make_code(Field::gf9(), p.kind, m.value_or(p.default_m));
  throw Error(ErrorCode::InvalidArgument, "unknown preset '" + name + "'");
}

}  // namespace algcodes
