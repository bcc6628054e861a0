#include "idealforge/oracles/brute.hpp"

#include <algorithm>

namespace idealforge::oracle {

namespace {

bool admits(const Predicate& p, Nat v) {
  const bool listed = std::find(p.values.begin(), p.values.end(), v) != p.values.end();
  return p.kind == Predicate::Kind::In ? listed : !listed;
}

Point tail(const Point& x, std::size_t i) { return Point(x.end() - static_cast<std::ptrdiff_t>(i), x.end()); }
Point head(const Point& x, std::size_t i) { return Point(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i)); }

Point concat(const Point& a, const Point& b) {
  Point out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

bool member(const SymbolicSet& s, const Point& p) {
  for (const auto& conj : s.conjuncts()) {
    bool all = true;
    for (const auto& [coord, pred] : conj) {
      if (!admits(pred, p.at(coord))) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::vector<Point> grid(std::size_t n, Nat bound) {
  std::vector<Point> out;
  Point cur(n, 0);
  if (n == 0) return {cur};
  if (bound == 0) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t k = n;
    while (k > 0 && ++cur[k - 1] == bound) cur[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::set<Point> members(const SymbolicSet& s, Nat bound) {
  std::set<Point> out;
  for (auto& p : grid(s.level(), bound)) {
    if (member(s, p)) out.insert(std::move(p));
  }
  return out;
}

Nat fresh_value(const SymbolicSet& s) {
  Nat v = 0;
  for (const auto& conj : s.conjuncts()) {
    for (const auto& [coord, pred] : conj) {
      for (Nat x : pred.values) v = std::max(v, x + 1);
    }
  }
  return v;
}

Nat universe_bound(const std::vector<const SymbolicSet*>& sets) {
  Nat v = 0;
  for (const auto* s : sets) v = std::max(v, fresh_value(*s));
  return v + 2;
}

std::set<Point> section_first(const SymbolicSet& s, Nat v, Nat bound) {
  std::set<Point> out;
  for (const auto& y : grid(s.level() - 1, bound)) {
    Point x{v};
    x.insert(x.end(), y.begin(), y.end());
    if (member(s, x)) out.insert(y);
  }
  return out;
}

std::set<Point> project_last(const SymbolicSet& s, std::size_t i, Nat bound) {
  std::set<Point> out;
  for (const auto& x : members(s, bound)) out.insert(tail(x, i));
  return out;
}

std::set<Point> project_first(const SymbolicSet& s, std::size_t i, Nat bound) {
  std::set<Point> out;
  for (const auto& x : members(s, bound)) out.insert(head(x, i));
  return out;
}

std::set<Point> lift_last(const SymbolicSet& s, std::size_t j, Nat bound) {
  std::set<Point> out;
  for (const auto& x : grid(j, bound)) {
    if (member(s, tail(x, s.level()))) out.insert(x);
  }
  return out;
}

std::set<Point> lift_first(const SymbolicSet& s, std::size_t j, Nat bound) {
  std::set<Point> out;
  for (const auto& x : grid(j, bound)) {
    if (member(s, head(x, s.level()))) out.insert(x);
  }
  return out;
}

bool fin_generic_point(const SymbolicSet& s) {
  return !member(s, Point(s.level(), fresh_value(s)));
}

bool fin2_sections(const SymbolicSet& s) {
  const Nat v = fresh_value(s);
  const Nat bound = 2 * v + 2;
  for (Nat x = v; x < bound; ++x) {
    std::size_t size = 0;
    for (Nat y = 0; y < bound; ++y) size += member(s, Point{x, y}) ? 1 : 0;
    // More than v members forces one at or above v, hence infinitely many.
    if (size > v) return false;
  }
  return true;
}

bool sum_member(const SumSymbolicSet& m, const SumPoint& p) {
  const std::size_t j = p.summand;
  if (j < m.threshold()) {
    auto it = m.exceptional().find(j);
    return it != m.exceptional().end() && member(it->second, p.x);
  }
  return member(m.pattern(), concat(head(p.x, m.head_width()), tail(p.x, m.tail_width())));
}

std::vector<std::size_t> large_summands(const SumSymbolicSet& m, std::size_t summand_bound) {
  std::vector<std::size_t> out;
  Nat v = fresh_value(m.pattern());
  for (const auto& [k, s] : m.exceptional()) v = std::max(v, fresh_value(s));
  for (std::size_t j = 1; j < summand_bound; ++j) {
    if (sum_member(m, SumPoint{j, Point(j, v)})) out.push_back(j);
  }
  return out;
}

std::set<Point> tail_projection(const SumSymbolicSet& m, std::size_t i, std::size_t summand_bound, Nat bound) {
  std::set<Point> out;
  for (std::size_t j = i; j < summand_bound; ++j) {
    for (const auto& x : grid(j, bound)) {
      if (sum_member(m, SumPoint{j, x})) out.insert(tail(x, i));
    }
  }
  return out;
}

bool limit_certificate_holds(const SumSymbolicSet& m, const LimitCertificate& cert, std::size_t summand_bound,
                             Nat bound) {
  const SymbolicSet& p = cert.filter_set;
  if (p.level() != cert.index) return false;
  if (!member(p, Point(cert.index, fresh_value(p)))) return false;  // complement of P must be small
  for (const auto& y : tail_projection(m, cert.index, summand_bound, bound)) {
    if (member(p, y)) return false;
  }
  return true;
}

Stack decode_stack(Nat m) {
  if (m == 0) return {};
  std::size_t len = 1;
  while ((m & 1) == 0) {
    m >>= 1;
    ++len;
  }
  const Nat body = m >> 1;
  const std::size_t width = len * (len + 1) / 2;
  Stack st;
  for (std::size_t e = 0; e < len; ++e) st.emplace_back(e + 1, 0);
  for (std::size_t pos = 0; pos < 64; ++pos) {
    if (((body >> pos) & 1) == 0) continue;
    std::size_t r = pos % width;
    std::size_t e = 0;
    while (r > e) r -= ++e;
    st[e][r] |= Nat{1} << (pos / width);
  }
  return st;
}

Nat cantor_swap(Nat m) {
  Nat w = 0;
  while ((w + 1) * (w + 2) / 2 <= m) {
    // Galloping keeps this usable for codes near 2^40.
    Nat step = 1;
    while ((w + 2 * step) * (w + 2 * step + 1) / 2 <= m) step *= 2;
    w += step;
  }
  const Nat y = m - w * (w + 1) / 2;
  return w * (w + 1) / 2 + (w - y);
}

Point cell(Family f, Nat m, std::size_t n) {
  const Stack st = decode_stack(f == Family::A ? m : cantor_swap(m));
  return n < st.size() ? st[n] : Point(n + 1, 0);
}

bool meets(Family f, Nat m, const CellConstraints& c) {
  for (const auto& [n, t] : c.cells) {
    if (cell(f, m, n) != t) return false;
  }
  if (c.zero_span) {
    for (std::size_t n = c.zero_span->first; n <= c.zero_span->second; ++n) {
      const Point t = cell(f, m, n);
      if (std::any_of(t.begin(), t.end(), [](Nat v) { return v != 0; })) return false;
    }
  }
  return true;
}

std::vector<Nat> filter_intersection(Family f, const CellConstraints& c, Nat bound) {
  std::vector<Nat> out;
  for (Nat m = 0; m < bound; ++m) {
    if (meets(f, m, c)) out.push_back(m);
  }
  return out;
}

bool certified_member(const CertifiedSet& a, Nat m) {
  if (a.finite_part.contains(m)) return true;
  for (const auto& [l, b] : a.bundles) {
    if (member(b, cell(a.family, m, l))) return true;
  }
  for (const auto& mc : a.multicells) {
    bool all = true;
    for (const auto& [l, t] : mc) all = all && cell(a.family, m, l) == t;
    if (all) return true;
  }
  return false;
}

bool meets_finitely(const CertifiedSet& a, const std::vector<Point>& s, std::size_t probe) {
  std::map<std::size_t, Point> cells;
  for (std::size_t l = 0; l < s.size(); ++l) cells.emplace(l, s[l]);
  const auto floor = a.finite_part.max();
  for (std::size_t want = probe;; want *= 2) {
    std::vector<Nat> above;
    for (Nat m : enumerate_intersection(a.family, cells, want)) {
      if (!floor || m > *floor) above.push_back(m);
    }
    if (above.size() < probe) continue;
    return std::none_of(above.begin(), above.begin() + static_cast<std::ptrdiff_t>(probe),
                        [&](Nat m) { return certified_member(a, m); });
  }
}

}  // namespace idealforge::oracle
