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

#include "algcodes/bms.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "algcodes/error.hpp"

namespace algcodes {
namespace {

struct Element {
  Poly2 poly;
  Monomial lead;
};

// A polynomial that failed: valid on every cell before fail, discrepancy
// disc at fail. Its span fail - lead is a corner of the staircase.
struct Witness {
  Poly2 poly;
  Monomial lead;
  Monomial fail;
  Elt disc;

  Monomial span() const { return fail - lead; }
};

// Minimal elements of N^2 outside the union of boxes [0, s] over spans.
std::vector<Monomial> corners_outside(const std::vector<Monomial>& spans) {
  int max_j = -1;
  for (Monomial s : spans) max_j = std::max(max_j, s.j);
  std::vector<Monomial> corners;
  int prev_width = -1;
  for (int j = 0; j <= max_j + 1; ++j) {
    int width = 0;
    for (Monomial s : spans)
      if (s.j >= j) width = std::max(width, s.i + 1);
    if (j == 0 || width < prev_width) corners.push_back({width, j});
    prev_width = width;
  }
  return corners;
}

class Sakata {
 public:
  Sakata(const Field& f, MonomialOrder order, std::function<Elt(Monomial)> value)
      : f_(f), order_(order), value_(std::move(value)) {
    elements_.push_back({Poly2::monomial({0, 0}), {0, 0}});
  }

  void process(Monomial u) {
    std::vector<Elt> disc(elements_.size(), Elt::zero());
    bool any_failed = false;
    for (size_t e = 0; e < elements_.size(); ++e) {
      if (!divides(elements_[e].lead, u)) continue;
      disc[e] = discrepancy(elements_[e], u);
      any_failed = any_failed || !disc[e].is_zero();
    }
    if (!any_failed) return;

    std::vector<Monomial> spans;
    for (const auto& w : witnesses_) spans.push_back(w.span());
    for (size_t e = 0; e < elements_.size(); ++e)
      if (!disc[e].is_zero()) spans.push_back(u - elements_[e].lead);

    std::vector<Element> next;
    for (Monomial t : corners_outside(spans)) {
      const Element* keep = nullptr;
      const Element* failed = nullptr;
      Elt failed_disc = Elt::zero();
      for (size_t e = 0; e < elements_.size(); ++e) {
        const auto& el = elements_[e];
        if (!divides(el.lead, t)) continue;
        if (disc[e].is_zero() || !divides(t, u)) {
          keep = &el;
          break;
        }
        if (!failed) {
          failed = &el;
          failed_disc = disc[e];
        }
      }
      Poly2 poly;
      if (keep) {
        poly.add_scaled(f_, keep->poly, Elt::one(), t - keep->lead);
      } else {
        if (!failed) throw std::logic_error("bms: staircase corner not covered by any element");
        const Witness* w = nullptr;
        for (const auto& cand : witnesses_)
          if (divides(u - t, cand.span())) {
            w = &cand;
            break;
          }
        if (!w) throw std::logic_error("bms: no witness polynomial for update");
        poly.add_scaled(f_, failed->poly, Elt::one(), t - failed->lead);
        poly.add_scaled(f_, w->poly, f_.neg(f_.div(failed_disc, w->disc)), w->span() - (u - t));
      }
      next.push_back({std::move(poly), t});
    }

    for (size_t e = 0; e < elements_.size(); ++e)
      if (!disc[e].is_zero()) witnesses_.push_back({elements_[e].poly, elements_[e].lead, u, disc[e]});
    prune_witnesses();

    std::sort(next.begin(), next.end(),
              [this](const Element& a, const Element& b) { return order_.less(a.lead, b.lead); });
    elements_ = std::move(next);
  }

  const std::vector<Element>& elements() const { return elements_; }

  std::vector<Monomial> staircase() const {
    std::vector<Monomial> cells;
    for (const auto& w : witnesses_)
      for (int i = 0; i <= w.span().i; ++i)
        for (int j = 0; j <= w.span().j; ++j) cells.push_back({i, j});
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
  }

 private:
  Elt discrepancy(const Element& el, Monomial u) const {
    Elt acc = Elt::zero();
    for (const auto& [k, c] : el.poly.terms()) acc = f_.add(acc, f_.mul(c, value_(k + u - el.lead)));
    return acc;
  }

  void prune_witnesses() {
    std::vector<Witness> kept;
    for (size_t a = 0; a < witnesses_.size(); ++a) {
      bool dominated = false;
      for (size_t b = 0; b < witnesses_.size() && !dominated; ++b) {
        if (a == b) continue;
        const Monomial sa = witnesses_[a].span(), sb = witnesses_[b].span();
        // Strictly larger box, or an equal box seen earlier.
        if (divides(sa, sb) && (sa != sb || b < a)) dominated = true;
      }
      if (!dominated) kept.push_back(witnesses_[a]);
    }
    witnesses_ = std::move(kept);
  }

  const Field& f_;
  MonomialOrder order_;
  std::function<Elt(Monomial)> value_;
  std::vector<Element> elements_;
  std::vector<Witness> witnesses_;
};

// Rewrites every element so that no non-leading term is divisible by a
// leading term of another element.
std::vector<Poly2> reduce(const Field& f, std::vector<Element> els, const MonomialOrder& order) {
  for (auto& g : els) {
    for (;;) {
      bool found = false;
      Monomial best{};
      const Element* by = nullptr;
      for (const auto& [k, c] : g.poly.terms()) {
        if (k == g.lead) continue;
        for (const auto& h : els)
          if (&h != &g && divides(h.lead, k) && (!found || order.less(best, k))) {
            found = true;
            best = k;
            by = &h;
            break;
          }
      }
      if (!found) break;
      g.poly.add_scaled(f, by->poly, f.neg(g.poly.coeff(best)), best - by->lead);
    }
  }
  std::vector<Poly2> out;
  for (auto& g : els) out.push_back(std::move(g.poly));
  return out;
}

GroebnerBasis finish(const Field& f, const Sakata& s, const MonomialOrder& order) {
  GroebnerBasis gb;
  gb.order = order;
  gb.elements = reduce(f, s.elements(), order);
  gb.delta = SupportSet(s.staircase(), order);
  return gb;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leads() const {
  std::vector<Monomial> out;
  for (const auto& e : elements) out.push_back(e.lead(order));
  return out;
}

PartialArray::PartialArray(Array2D full)
    : values_(std::move(full)), known_(static_cast<size_t>(values_.side()) * values_.side(), true) {}

PartialArray PartialArray::restrict_to(const Array2D& source, const SupportSet& support) {
  PartialArray p(source.side());
  for (Monomial c : support.cells()) p.set(c, source(c.i, c.j));
  return p;
}

void PartialArray::set(Monomial c, Elt v) {
  if (c.i < 0 || c.j < 0 || c.i >= side() || c.j >= side())
    throw Error(ErrorCode::DimensionMismatch, "cell outside the grid");
  values_(c.i, c.j) = v;
  known_[index(c)] = true;
}

bool PartialArray::is_full() const {
  return std::all_of(known_.begin(), known_.end(), [](bool b) { return b; });
}

GroebnerBasis bms(const Field& f, const PartialArray& known, const MonomialOrder& order) {
  const MonomialOrder go = order.groebner_order();
  const int n = known.side();
  if (n != f.order()) throw Error(ErrorCode::DimensionMismatch, "array side must be q-1");

  if (known.is_full()) {
    const Array2D& arr = known.values();
    Sakata s(f, go, [&arr](Monomial c) { return arr.wrapped(c.i, c.j); });
    const long long cap = go.weight({4 * n, 4 * n});
    go.enumerate([&](Monomial u) {
      s.process(u);
      if (go.weight(u) > cap) throw std::logic_error("bms: no convergence on periodic array");
      for (const auto& el : s.elements())
        if (go.less(u, el.lead + Monomial{n - 1, n - 1})) return true;
      return false;
    });
    return finish(f, s, go);
  }

  Sakata s(f, go, [&known](Monomial c) { return known.value(c); });
  go.enumerate([&](Monomial u) {
    if (u.i >= n || u.j >= n || !known.known(u)) return false;
    s.process(u);
    return true;
  });
  return finish(f, s, go);
}

GroebnerBasis vanishing_ideal_basis(const std::vector<Point>& points, const MonomialOrder& order, const Field& f) {
  Array2D indicator(f.order());
  for (const Point& p : points) {
    if (p.has_zero_coordinate()) throw Error(ErrorCode::ZeroCoordinatePoint, "point with a zero coordinate");
    indicator(p.x.log, p.y.log) = Elt::one();
  }
  return bms(f, PartialArray(dft2(f, indicator)), order);
}

Array2D extend(const Field& f, const PartialArray& partial, const GroebnerBasis& basis, FillSchedule schedule) {
  const int n = partial.side();
  const auto leads = basis.leads();
  PartialArray work = partial;
  auto wrap = [n](Monomial c) { return Monomial{((c.i % n) + n) % n, ((c.j % n) + n) % n}; };

  auto try_fill = [&](Monomial c) {
    for (size_t e = 0; e < basis.elements.size(); ++e) {
      const Monomial lead = leads[e];
      if (!divides(lead, c)) continue;
      const Poly2& g = basis.elements[e];
      Elt acc = Elt::zero();
      bool ready = true;
      for (const auto& [k, coef] : g.terms()) {
        if (k == lead) continue;
        const Monomial r = wrap(k + c - lead);
        if (!work.known(r)) {
          ready = false;
          break;
        }
        acc = f.add(acc, f.mul(coef, work.value(r)));
      }
      if (!ready) continue;
      work.set(c, f.neg(f.div(acc, g.coeff(lead))));
      return true;
    }
    return false;
  };

  std::vector<Monomial> cells;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cells.push_back({i, j});
  if (schedule == FillSchedule::OrderSweep) basis.order.sort(cells);

  for (bool progress = true; progress;) {
    progress = false;
    for (Monomial c : cells)
      if (!work.known(c) && try_fill(c)) progress = true;
  }
  for (Monomial c : cells)
    if (!work.known(c))
      throw Error(ErrorCode::IncompleteCover,
                  "no recurrence reaches cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");

  const Array2D& out = work.values();
  for (size_t e = 0; e < basis.elements.size(); ++e)
    for (Monomial c : cells) {
      if (!divides(leads[e], c)) continue;
      Elt acc = Elt::zero();
      for (const auto& [k, coef] : basis.elements[e].terms()) {
        const Monomial r = wrap(k + c - leads[e]);
        acc = f.add(acc, f.mul(coef, out(r.i, r.j)));
      }
      if (!acc.is_zero())
        throw Error(ErrorCode::InconsistentKnownValues,
                    "recurrence " + std::to_string(e) + " fails at (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
    }
  return out;
}

SupportSet staircase_of(const std::vector<Monomial>& leads, const MonomialOrder& order, int bound) {
  std::vector<Monomial> cells;
  for (int i = 0; i < bound; ++i)
    for (int j = 0; j < bound; ++j) {
      const Monomial c{i, j};
      if (std::none_of(leads.begin(), leads.end(), [c](Monomial l) { return divides(l, c); })) cells.push_back(c);
    }
  return SupportSet(std::move(cells), order);
}

void write_basis(std::ostream& out, const GroebnerBasis& basis) {
  out << "basis " << basis.elements.size() << ' ' << basis.order.name() << '\n';
  for (const auto& g : basis.elements) {
    out << "poly " << g.size() << '\n';
    for (const auto& [m, c] : g.terms()) out << m.i << ' ' << m.j << ' ' << c.log << '\n';
  }
}

GroebnerBasis read_basis(std::istream& in, const MonomialOrder& order) {
  std::string tag, order_name;
  size_t count = 0;
  if (!(in >> tag >> count >> order_name) || tag != "basis")
    throw Error(ErrorCode::ParseError, "expected 'basis <count> <order>'");
  GroebnerBasis gb;
  gb.order = order.groebner_order();
  if (order_name != gb.order.name())
    throw Error(ErrorCode::ParseError, "basis order " + order_name + " does not match " + gb.order.name());
  for (size_t e = 0; e < count; ++e) {
    size_t terms = 0;
    if (!(in >> tag >> terms) || tag != "poly") throw Error(ErrorCode::ParseError, "expected 'poly <terms>'");
    Poly2 g;
    for (size_t t = 0; t < terms; ++t) {
      int i = 0, j = 0, log = 0;
      if (!(in >> i >> j >> log) || i < 0 || j < 0 || log < 0)
        throw Error(ErrorCode::ParseError, "bad polynomial term");
      g.set({i, j}, Elt{log});
    }
    if (g.is_zero()) throw Error(ErrorCode::ParseError, "empty polynomial");
    gb.elements.push_back(std::move(g));
  }
  int bound = 1;
  for (Monomial l : gb.leads()) bound = std::max({bound, l.i + 1, l.j + 1});
  gb.delta = staircase_of(gb.leads(), gb.order, bound);
  return gb;
}

}  // namespace algcodes
