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

#include "algcodes/bms.hpp"

namespace algcodes {

struct VotingResult {
  /// Groebner basis of the error-locator ideal.
  GroebnerBasis locator;
  /// Error syndromes on the whole grid.
  Array2D syndromes;
  /// Cells whose value was decided by a vote.
  int voted_cells = 0;
  /// Voted cells on which the candidates were not unanimous.
  int contested_cells = 0;
  bool voting_invoked() const noexcept { return voted_cells > 0; }
};

/// Majority voting for the syndromes outside the defining set.
///
/// The syndrome matrix S[u][v] = E(x^u * x^v), with rows and columns indexed
/// by the staircase of the ambient (all-locations) ideal in the Groebner
/// order, has rank equal to the number of errors. Unknown cells are visited
/// in that order. For each well-behaving pair (u, v) whose entry is the
/// first to involve the cell, a pair that is not blocked by an already known
/// pivot in its row or column proposes the value that keeps the leading
/// submatrix rank unchanged. The most frequent proposal wins; a tie is a
/// decoding failure. With t errors a cell reached by more than 2t
/// well-behaving pairs is always decided correctly.
///
/// The plan depends only on the code, so one voter serves many decodes and
/// run() is safe to call concurrently.
class SyndromeVoter {
 public:
  SyndromeVoter(const Field& f, const GroebnerBasis& ambient, const SupportSet& known_cells,
                const MonomialOrder& order);

  /// Throws DecodingFailure when a vote is inconclusive or more than
  /// max_errors pivots appear.
  VotingResult run(const PartialArray& syndromes, int max_errors) const;

  /// Number of well-behaving pairs available for an unknown cell (0 for
  /// known cells and cells outside the staircase).
  int pairs_for(Monomial cell) const;
  /// The smallest pairs_for over all unknown cells.
  int min_pairs() const;
  const std::vector<Monomial>& unknown_cells() const noexcept { return unknown_; }

 private:
  struct Entry {
    int cell = 0;     // grid cell index of (u + v) mod (q-1)
    int time = 0;     // latest time among the cell's components
    int target = -1;  // staircase index of the component with that time
  };
  struct Term {
    int index;
    Elt coef;
  };

  Elt entry_value(int u, int v, const std::vector<Elt>& values) const;

  Field f_;
  MonomialOrder order_;
  int side_;
  std::vector<Monomial> staircase_;
  std::vector<int> staircase_index_;        // grid cell -> staircase index or -1
  std::vector<std::vector<Term>> reduce_;  // grid cell -> combination over staircase
  std::vector<int> time_;                   // staircase index -> 0 known, t >= 1 voted
  std::vector<Monomial> unknown_;
  std::vector<Entry> entries_;                            // staircase x staircase
  std::vector<std::vector<std::pair<int, int>>> groups_;  // entries whose region completes at time t
  std::vector<std::vector<std::pair<int, int>>> pairs_;   // well-behaving pairs per time
};

/// Voting over the full grid (every cell is an independent location).
VotingResult bms_with_voting(const Field& f, const PartialArray& syndromes, const MonomialOrder& order,
                             int max_errors);
/// Voting relative to an ambient ideal, e.g. the curve's points.
VotingResult bms_with_voting(const Field& f, const PartialArray& syndromes, const MonomialOrder& order,
                             int max_errors, const GroebnerBasis& ambient);

/// Basis {x^(q-1) - 1, y^(q-1) - 1} of the ideal of all grid points.
GroebnerBasis full_grid_basis(const Field& f, const MonomialOrder& order);

}  // namespace algcodes
