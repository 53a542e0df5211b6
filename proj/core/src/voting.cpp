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

#include "algcodes/voting.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "algcodes/error.hpp"

namespace algcodes {
namespace {

// Solves a * x = b for a square system; returns false when singular.
bool solve(const Field& f, std::vector<std::vector<Elt>> a, std::vector<Elt> b, std::vector<Elt>& x) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Elt inv = f.inv(a[col][col]);
    for (size_t k = col; k < n; ++k) a[col][k] = f.mul(a[col][k], inv);
    b[col] = f.mul(b[col], inv);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Elt factor = a[r][col];
      for (size_t k = col; k < n; ++k) a[r][k] = f.sub(a[r][k], f.mul(factor, a[col][k]));
      b[r] = f.sub(b[r], f.mul(factor, b[col]));
    }
  }
  x = std::move(b);
  return true;
}

}  // namespace

GroebnerBasis full_grid_basis(const Field& f, const MonomialOrder& order) {
  GroebnerBasis gb;
  gb.order = order.groebner_order();
  const int n = f.order();
  Poly2 gx, gy;
  gx.set({n, 0}, Elt::one());
  gx.set({0, 0}, f.neg(Elt::one()));
  gy.set({0, n}, Elt::one());
  gy.set({0, 0}, f.neg(Elt::one()));
  gb.elements = {gx, gy};
  if (gb.order.less({0, n}, {n, 0})) std::swap(gb.elements[0], gb.elements[1]);
  gb.delta = staircase_of(gb.leads(), gb.order, n);
  return gb;
}

SyndromeVoter::SyndromeVoter(const Field& f, const GroebnerBasis& ambient, const SupportSet& known_cells,
                             const MonomialOrder& order)
    : f_(f), order_(order.groebner_order()), side_(f.order()) {
  const int n = side_;
  staircase_ = ambient.delta.cells();
  order_.sort(staircase_);
  const int nb = static_cast<int>(staircase_.size());
  staircase_index_.assign(static_cast<size_t>(n) * n, -1);
  for (int b = 0; b < nb; ++b) {
    const Monomial c = staircase_[b];
    if (c.i >= n || c.j >= n) throw Error(ErrorCode::InvalidArgument, "ambient staircase leaves the grid");
    staircase_index_[static_cast<size_t>(c.i) * n + c.j] = b;
  }

  // Each grid cell as a combination of staircase cells.
  reduce_.assign(static_cast<size_t>(n) * n, {});
  for (int b = 0; b < nb; ++b) {
    PartialArray unit(n);
    for (int o = 0; o < nb; ++o) unit.set(staircase_[o], o == b ? Elt::one() : Elt::zero());
    const Array2D col = extend(f_, unit, ambient);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!col(i, j).is_zero()) reduce_[static_cast<size_t>(i) * n + j].push_back({b, col(i, j)});
  }

  time_.assign(static_cast<size_t>(nb), 0);
  for (Monomial c : known_cells.cells())
    if (c.i >= n || c.j >= n || staircase_index_[static_cast<size_t>(c.i) * n + c.j] < 0)
      throw Error(ErrorCode::InvalidArgument, "known cell outside the ambient staircase");
  for (int b = 0; b < nb; ++b)
    if (!known_cells.contains(staircase_[b])) {
      unknown_.push_back(staircase_[b]);
      time_[b] = static_cast<int>(unknown_.size());
    }
  const int horizon = static_cast<int>(unknown_.size());

  entries_.assign(static_cast<size_t>(nb) * nb, {});
  for (int u = 0; u < nb; ++u)
    for (int v = 0; v < nb; ++v) {
      const Monomial s = staircase_[u] + staircase_[v];
      Entry e;
      e.cell = (s.i % n) * n + (s.j % n);
      for (const Term& t : reduce_[e.cell])
        if (time_[t.index] > e.time) {
          e.time = time_[t.index];
          e.target = t.index;
        }
      entries_[static_cast<size_t>(u) * nb + v] = e;
    }

  // latest[u][v]: max time over the leading region [0..u] x [0..v].
  std::vector<int> latest(static_cast<size_t>(nb) * nb, 0);
  auto at = [nb](std::vector<int>& m, int u, int v) -> int& { return m[static_cast<size_t>(u) * nb + v]; };
  groups_.assign(static_cast<size_t>(horizon) + 1, {});
  pairs_.assign(static_cast<size_t>(horizon) + 1, {});
  for (int u = 0; u < nb; ++u)
    for (int v = 0; v < nb; ++v) {
      const int above = u > 0 ? at(latest, u - 1, v) : 0;
      const int left = v > 0 ? at(latest, u, v - 1) : 0;
      const Entry& e = entries_[static_cast<size_t>(u) * nb + v];
      const int region = std::max(above, left);
      at(latest, u, v) = std::max(region, e.time);
      groups_[at(latest, u, v)].push_back({u, v});
      if (e.time > 0 && e.time > region &&
          order_.weight(staircase_[u]) + order_.weight(staircase_[v]) == order_.weight(staircase_[e.target]))
        pairs_[e.time].push_back({u, v});
    }
}

Elt SyndromeVoter::entry_value(int u, int v, const std::vector<Elt>& values) const {
  const int nb = static_cast<int>(staircase_.size());
  Elt acc = Elt::zero();
  for (const Term& t : reduce_[entries_[static_cast<size_t>(u) * nb + v].cell])
    acc = f_.add(acc, f_.mul(t.coef, values[t.index]));
  return acc;
}

int SyndromeVoter::pairs_for(Monomial cell) const {
  auto it = std::find(unknown_.begin(), unknown_.end(), cell);
  if (it == unknown_.end()) return 0;
  return static_cast<int>(pairs_[static_cast<size_t>(it - unknown_.begin()) + 1].size());
}

int SyndromeVoter::min_pairs() const {
  int best = -1;
  for (size_t t = 1; t < pairs_.size(); ++t)
    if (best < 0 || static_cast<int>(pairs_[t].size()) < best) best = static_cast<int>(pairs_[t].size());
  return best < 0 ? 0 : best;
}

VotingResult SyndromeVoter::run(const PartialArray& syndromes, int max_errors) const {
  const int n = side_;
  const int nb = static_cast<int>(staircase_.size());
  if (syndromes.side() != n) throw Error(ErrorCode::DimensionMismatch, "syndrome array side must be q-1");

  std::vector<Elt> values(static_cast<size_t>(nb), Elt::zero());
  for (int b = 0; b < nb; ++b)
    if (time_[b] == 0) {
      if (!syndromes.known(staircase_[b])) throw Error(ErrorCode::InvalidArgument, "defining-set syndrome missing");
      values[b] = syndromes.value(staircase_[b]);
    }

  // Entries are filled group by group; every lookup below stays inside
  // groups that are already complete.
  std::vector<Elt> matrix(static_cast<size_t>(nb) * nb);
  auto S = [&](int u, int v) { return matrix[static_cast<size_t>(u) * nb + v]; };
  auto fill = [&](int time) {
    for (auto [u, v] : groups_[time]) matrix[static_cast<size_t>(u) * nb + v] = entry_value(u, v, values);
  };

  std::vector<int> row_pivot(static_cast<size_t>(nb), -1), col_pivot(static_cast<size_t>(nb), -1);
  std::vector<std::pair<int, int>> pivots;

  auto blocked = [&](int u, int v) {
    return (row_pivot[u] >= 0 && row_pivot[u] < v) || (col_pivot[v] >= 0 && col_pivot[v] < u);
  };
  // Value of S[u][v] implied by the rows above u, given the leading
  // submatrix is already known and (u, v) is not blocked. The coefficients
  // only depend on row u and which pivots lie inside, so they are cached.
  std::vector<std::map<unsigned, std::vector<Elt>>> lambdas(static_cast<size_t>(nb));
  auto predict = [&](int u, int v) {
    unsigned mask = 0;
    for (size_t p = 0; p < pivots.size(); ++p)
      if (pivots[p].first < u && pivots[p].second < v) mask |= 1u << p;
    if (mask == 0) return Elt::zero();
    auto [it, fresh] = lambdas[u].try_emplace(mask);
    if (fresh) {
      std::vector<std::pair<int, int>> inside;
      for (size_t p = 0; p < pivots.size(); ++p)
        if (mask >> p & 1u) inside.push_back(pivots[p]);
      const size_t d = inside.size();
      std::vector<std::vector<Elt>> a(d, std::vector<Elt>(d));
      std::vector<Elt> rhs(d);
      for (size_t q = 0; q < d; ++q) {
        for (size_t p = 0; p < d; ++p) a[q][p] = S(inside[p].first, inside[q].second);
        rhs[q] = S(u, inside[q].second);
      }
      if (!solve(f_, std::move(a), std::move(rhs), it->second))
        throw Error(ErrorCode::DecodingFailure, "singular pivot submatrix");
    }
    Elt acc = Elt::zero();
    size_t k = 0;
    for (size_t p = 0; p < pivots.size(); ++p)
      if (mask >> p & 1u) acc = f_.add(acc, f_.mul(it->second[k++], S(pivots[p].first, v)));
    return acc;
  };
  auto classify = [&](int time) {
    fill(time);
    for (auto [u, v] : groups_[time]) {
      if (blocked(u, v)) continue;
      if (S(u, v) == predict(u, v)) continue;
      row_pivot[u] = v;
      col_pivot[v] = u;
      pivots.push_back({u, v});
      if (static_cast<int>(pivots.size()) > max_errors || pivots.size() >= 32)
        throw Error(ErrorCode::DecodingFailure, "syndrome matrix rank exceeds " + std::to_string(max_errors));
    }
  };

  VotingResult result;
  classify(0);
  for (size_t t = 1; t < groups_.size(); ++t) {
    std::map<int, int> tally;  // candidate log -> votes
    int target = -1;
    for (auto [u, v] : pairs_[t]) {
      if (blocked(u, v)) continue;
      const Entry& e = entries_[static_cast<size_t>(u) * nb + v];
      target = e.target;
      Elt rest = Elt::zero(), coef = Elt::zero();
      for (const Term& term : reduce_[e.cell]) {
        if (term.index == e.target)
          coef = term.coef;
        else
          rest = f_.add(rest, f_.mul(term.coef, values[term.index]));
      }
      const Elt candidate = f_.div(f_.sub(predict(u, v), rest), coef);
      ++tally[candidate.log];
    }
    const Monomial cell = unknown_[t - 1];
    if (tally.empty())
      throw Error(ErrorCode::DecodingFailure,
                  "no candidates at (" + std::to_string(cell.i) + "," + std::to_string(cell.j) + ")");
    auto best = tally.begin();
    bool tie = false;
    for (auto it = std::next(tally.begin()); it != tally.end(); ++it) {
      if (it->second > best->second) {
        best = it;
        tie = false;
      } else if (it->second == best->second) {
        tie = true;
      }
    }
    if (tie)
      throw Error(ErrorCode::DecodingFailure,
                  "tied vote at (" + std::to_string(cell.i) + "," + std::to_string(cell.j) + ")");
    values[target] = Elt{best->first};
    ++result.voted_cells;
    if (tally.size() > 1) ++result.contested_cells;
    classify(static_cast<int>(t));
  }

  Array2D full(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt acc = Elt::zero();
      for (const Term& term : reduce_[static_cast<size_t>(i) * n + j])
        acc = f_.add(acc, f_.mul(term.coef, values[term.index]));
      full(i, j) = acc;
    }
  result.syndromes = full;
  result.locator = bms(f_, PartialArray(std::move(full)), order_);
  if (result.locator.delta.size() > max_errors || result.locator.delta.size() != static_cast<int>(pivots.size()))
    throw Error(ErrorCode::DecodingFailure, "locator staircase of size " + std::to_string(result.locator.delta.size()) +
                                                " is inconsistent with the syndrome rank");
  return result;
}

VotingResult bms_with_voting(const Field& f, const PartialArray& syndromes, const MonomialOrder& order,
                             int max_errors) {
  return bms_with_voting(f, syndromes, order, max_errors, full_grid_basis(f, order));
}

VotingResult bms_with_voting(const Field& f, const PartialArray& syndromes, const MonomialOrder& order,
                             int max_errors, const GroebnerBasis& ambient) {
  std::vector<Monomial> known;
  for (int i = 0; i < syndromes.side(); ++i)
    for (int j = 0; j < syndromes.side(); ++j)
      if (syndromes.known({i, j})) known.push_back({i, j});
  SyndromeVoter voter(f, ambient, SupportSet(std::move(known), order), order);
  return voter.run(syndromes, max_errors);
}

}  // namespace algcodes
