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

#include <optional>
#include <string>
#include <vector>

#include "algcodes/codec.hpp"

namespace algcodes {

struct Preset {
  std::string name;
  std::string kind;  // hermitian, hcrs or rs
  int default_m;
  std::string summary;
};

const std::vector<Preset>& presets();

/// kind: "hermitian" (lengthened by its zero points), "hcrs" or "rs". For
/// rs the defining set is {0, ..., m}, so the redundancy is m + 1.
CodeSpec make_code(const Field& f, const std::string& kind, int m);
/// Presets use GF(9) built on x^2 + x + 2. Throws InvalidArgument for an
/// unknown name.
CodeSpec make_preset(const std::string& name, std::optional<int> m = std::nullopt);

}  // namespace algcodes
