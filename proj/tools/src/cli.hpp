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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "algcodes/codec.hpp"
#include "algcodes/error.hpp"

namespace algcodes::cli {

/// Runs the command line (without the program name). Returns the exit code:
/// 0 ok, 2 usage or input, 3 construction, 4 decoding failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for a library error.
int exit_code(ErrorCode code);

/// splitmix64: state += 0x9e3779b97f4a7c15, then two xor-shift-multiply
/// rounds. Uniform draws below n use next() mod n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

enum class Outcome { Success, Failure, Miscorrection };

struct Trial {
  Outcome outcome = Outcome::Success;
  int corrected = 0;
};

struct Simulation {
  std::vector<Trial> trials;
  int success = 0;
  int failure = 0;
  int miscorrection = 0;
};

/// Trial t draws from SplitMix64(seed + t): k uniform information symbols,
/// then the error positions by a partial Fisher-Yates shuffle, then nonzero
/// error values. Results do not depend on the thread count.
Simulation simulate(const CodeSpec& spec, DecodeMode mode, int errors, int trials, std::uint64_t seed,
                    int threads = 1);

}  // namespace algcodes::cli
