#include "idealforge/symcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "idealforge/errors.hpp"

namespace idealforge {

Nat Predicate::nth_admitted(std::size_t k) const {
  if (kind == Kind::In) {
    if (k >= values.size()) throw PreconditionError("predicate admits fewer values than requested");
    return values.values()[k];
  }
  return values.nth_outside(k);
}

Predicate Predicate::meet(const Predicate& other) const {
  if (is_in() && other.is_in()) return in(values.intersect(other.values));
  if (is_in()) return in(values.minus(other.values));
  if (other.is_in()) return in(other.values.minus(values));
  return not_in(values.unite(other.values));
}

Predicate Predicate::join(const Predicate& other) const {
  if (is_in() && other.is_in()) return in(values.unite(other.values));
  if (is_in()) return not_in(other.values.minus(values));
  if (other.is_in()) return not_in(values.minus(other.values));
  return not_in(values.intersect(other.values));
}

bool Predicate::included_in(const Predicate& other) const {
  if (is_in() && other.is_in()) return values.subset_of(other.values);
  if (is_in()) return values.disjoint_from(other.values);
  if (other.is_in()) return false;
  return other.values.subset_of(values);
}

const ResourceCaps& resource_caps() {
  static const ResourceCaps caps = [] {
    ResourceCaps c;
    if (const char* env = std::getenv("IDEALFORGE_RESOURCE_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) {
        c.conjuncts = static_cast<std::size_t>(v);
        c.regions = static_cast<std::size_t>(v);
      }
    }
    return c;
  }();
  return caps;
}

std::optional<Conjunct> meet(const Conjunct& a, const Conjunct& b) {
  Conjunct out = a;
  for (const auto& [coord, pred] : b) {
    auto it = out.find(coord);
    Predicate merged = it == out.end() ? pred : it->second.meet(pred);
    if (merged.unsatisfiable()) return std::nullopt;
    if (merged.trivial()) {
      if (it != out.end()) out.erase(it);
    } else {
      out[coord] = std::move(merged);
    }
  }
  return out;
}

bool conjunct_included(const Conjunct& a, const Conjunct& b) {
  for (const auto& [coord, pred] : b) {
    auto it = a.find(coord);
    if (it == a.end()) return false;
    if (!it->second.included_in(pred)) return false;
  }
  return true;
}

namespace {

void check_cap(std::size_t n) {
  if (n > resource_caps().conjuncts) {
    throw ResourceError("symbolic set exceeds conjunct cap (" + std::to_string(resource_caps().conjuncts) + ")");
  }
}

// Two conjuncts identical except on one coordinate present in both.
std::optional<std::size_t> single_difference(const Conjunct& a, const Conjunct& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::optional<std::size_t> diff;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    if (ia->second != ib->second) {
      if (diff) return std::nullopt;
      diff = ia->first;
    }
  }
  return diff;
}

std::vector<Conjunct> canonicalize(std::vector<Conjunct> cs) {
  std::vector<Conjunct> clean;
  clean.reserve(cs.size());
  for (auto& c : cs) {
    bool dead = false;
    for (auto it = c.begin(); it != c.end();) {
      if (it->second.unsatisfiable()) {
        dead = true;
        break;
      }
      if (it->second.trivial()) {
        it = c.erase(it);
      } else {
        ++it;
      }
    }
    if (dead) continue;
    if (c.empty()) return {Conjunct{}};
    clean.push_back(std::move(c));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(clean.begin(), clean.end());
    clean.erase(std::unique(clean.begin(), clean.end()), clean.end());

    // absorption
    std::vector<bool> drop(clean.size(), false);
    for (std::size_t i = 0; i < clean.size(); ++i) {
      for (std::size_t j = 0; j < clean.size() && !drop[i]; ++j) {
        if (i == j || drop[j]) continue;
        if (conjunct_included(clean[i], clean[j])) {
          drop[i] = true;
          changed = true;
        }
      }
    }
    if (changed) {
      std::vector<Conjunct> kept;
      for (std::size_t i = 0; i < clean.size(); ++i) {
        if (!drop[i]) kept.push_back(std::move(clean[i]));
      }
      clean = std::move(kept);
      continue;
    }

    // merge conjuncts differing on a single coordinate
    for (std::size_t i = 0; i < clean.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < clean.size() && !changed; ++j) {
        auto coord = single_difference(clean[i], clean[j]);
        if (!coord) continue;
        Conjunct merged = clean[i];
        Predicate joined = clean[i].at(*coord).join(clean[j].at(*coord));
        if (joined.trivial()) {
          merged.erase(*coord);
        } else {
          merged[*coord] = std::move(joined);
        }
        if (merged.empty()) return {Conjunct{}};
        clean[i] = std::move(merged);
        clean.erase(clean.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }
  return clean;
}

void check_same_level(const SymbolicSet& s, const SymbolicSet& t) {
  if (s.level() != t.level()) {
    throw LevelError("level mismatch: " + std::to_string(s.level()) + " vs " + std::to_string(t.level()));
  }
}

}  // namespace

SymbolicSet SymbolicSet::empty(std::size_t level) { return SymbolicSet(level, {}); }

SymbolicSet SymbolicSet::full(std::size_t level) { return SymbolicSet(level, {Conjunct{}}); }

SymbolicSet SymbolicSet::from_conjuncts(std::size_t level, std::vector<Conjunct> conjuncts) {
  for (const auto& c : conjuncts) {
    for (const auto& [coord, pred] : c) {
      if (coord >= level) {
        throw LevelError("coordinate x" + std::to_string(coord) + " out of range for level " +
                         std::to_string(level));
      }
    }
  }
  check_cap(conjuncts.size());
  return SymbolicSet(level, canonicalize(std::move(conjuncts)));
}

SymbolicSet SymbolicSet::atom(std::size_t level, std::size_t coord, Predicate pred) {
  Conjunct c;
  c.emplace(coord, std::move(pred));
  return from_conjuncts(level, {std::move(c)});
}

SymbolicSet SymbolicSet::singleton(const Point& p) {
  Conjunct c;
  for (std::size_t k = 0; k < p.size(); ++k) c.emplace(k, Predicate::in({p[k]}));
  return from_conjuncts(p.size(), {std::move(c)});
}

bool contains(const SymbolicSet& s, const Point& p) {
  if (p.size() != s.level()) {
    throw ArityError("point of length " + std::to_string(p.size()) + " tested against level " +
                     std::to_string(s.level()));
  }
  return std::any_of(s.conjuncts().begin(), s.conjuncts().end(), [&](const Conjunct& c) {
    return std::all_of(c.begin(), c.end(), [&](const auto& kv) { return kv.second.admits(p[kv.first]); });
  });
}

SymbolicSet unite(const SymbolicSet& s, const SymbolicSet& t) {
  check_same_level(s, t);
  std::vector<Conjunct> cs = s.conjuncts();
  cs.insert(cs.end(), t.conjuncts().begin(), t.conjuncts().end());
  return SymbolicSet::from_conjuncts(s.level(), std::move(cs));
}

SymbolicSet intersect(const SymbolicSet& s, const SymbolicSet& t) {
  check_same_level(s, t);
  std::vector<Conjunct> cs;
  for (const auto& a : s.conjuncts()) {
    for (const auto& b : t.conjuncts()) {
      if (auto m = meet(a, b)) cs.push_back(std::move(*m));
      check_cap(cs.size());
    }
  }
  return SymbolicSet::from_conjuncts(s.level(), std::move(cs));
}

SymbolicSet complement(const SymbolicSet& s) {
  // De Morgan: not(c1 or ... or cm) = and_i (or_k not pred_ik)
  SymbolicSet acc = SymbolicSet::full(s.level());
  for (const auto& c : s.conjuncts()) {
    std::vector<Conjunct> negated;
    for (const auto& [coord, pred] : c) {
      Conjunct single;
      single.emplace(coord, pred.negated());
      negated.push_back(std::move(single));
    }
    acc = intersect(acc, SymbolicSet::from_conjuncts(s.level(), std::move(negated)));
    if (acc.is_empty()) break;
  }
  return acc;
}

SymbolicSet difference(const SymbolicSet& s, const SymbolicSet& t) {
  check_same_level(s, t);
  // Remove t one conjunct at a time to keep intermediate results small.
  SymbolicSet acc = s;
  for (const auto& c : t.conjuncts()) {
    if (acc.is_empty()) break;
    acc = intersect(acc, complement(SymbolicSet::from_conjuncts(s.level(), {c})));
  }
  return acc;
}

SymbolicSet combine(SetOp op, const SymbolicSet& s, const SymbolicSet* t) {
  if (op == SetOp::Complement) return complement(s);
  if (t == nullptr) throw PreconditionError("binary set operation needs two operands");
  switch (op) {
    case SetOp::Union:
      return unite(s, *t);
    case SetOp::Intersection:
      return intersect(s, *t);
    case SetOp::Difference:
      return difference(s, *t);
    case SetOp::Complement:
      break;
  }
  return complement(s);
}

bool is_empty(const SymbolicSet& s) { return s.is_empty(); }

bool subset(const SymbolicSet& s, const SymbolicSet& t) {
  check_same_level(s, t);
  if (t.is_full()) return true;
  for (const auto& c : s.conjuncts()) {
    if (std::any_of(t.conjuncts().begin(), t.conjuncts().end(),
                    [&](const Conjunct& d) { return conjunct_included(c, d); })) {
      continue;
    }
    if (!difference(SymbolicSet::from_conjuncts(s.level(), {c}), t).is_empty()) return false;
  }
  return true;
}

bool same_set(const SymbolicSet& s, const SymbolicSet& t) { return subset(s, t) && subset(t, s); }

SymbolicSet section_first(const SymbolicSet& s, Nat v) {
  if (s.level() < 2) throw LevelError("section_first needs level >= 2");
  std::vector<Conjunct> out;
  for (const auto& c : s.conjuncts()) {
    auto it = c.find(0);
    if (it != c.end() && !it->second.admits(v)) continue;
    Conjunct shifted;
    for (const auto& [coord, pred] : c) {
      if (coord > 0) shifted.emplace(coord - 1, pred);
    }
    out.push_back(std::move(shifted));
  }
  return SymbolicSet::from_conjuncts(s.level() - 1, std::move(out));
}

GenericSection generic_section_first(const SymbolicSet& s) {
  if (s.level() < 2) throw LevelError("generic_section_first needs level >= 2");
  FiniteSet exceptional;
  std::vector<Conjunct> out;
  for (const auto& c : s.conjuncts()) {
    auto it = c.find(0);
    if (it != c.end()) {
      exceptional = exceptional.unite(it->second.values);
      if (it->second.is_in()) continue;
    }
    Conjunct shifted;
    for (const auto& [coord, pred] : c) {
      if (coord > 0) shifted.emplace(coord - 1, pred);
    }
    out.push_back(std::move(shifted));
  }
  return {SymbolicSet::from_conjuncts(s.level() - 1, std::move(out)), std::move(exceptional)};
}

SymbolicSet reposition(const SymbolicSet& s, std::size_t level, const std::vector<std::size_t>& positions) {
  if (positions.size() != s.level()) throw LevelError("reposition: one target position per coordinate");
  std::vector<Conjunct> out;
  out.reserve(s.conjuncts().size());
  for (const auto& c : s.conjuncts()) {
    Conjunct moved;
    for (const auto& [coord, pred] : c) {
      if (positions[coord] >= level) throw LevelError("reposition: target coordinate out of range");
      auto [it, fresh] = moved.emplace(positions[coord], pred);
      if (!fresh) it->second = it->second.meet(pred);
    }
    out.push_back(std::move(moved));
  }
  return SymbolicSet::from_conjuncts(level, std::move(out));
}

SymbolicSet project_last(const SymbolicSet& s, std::size_t i) {
  if (i > s.level()) throw LevelError("project_last: i exceeds level");
  const std::size_t drop = s.level() - i;
  std::vector<Conjunct> out;
  for (const auto& c : s.conjuncts()) {
    Conjunct kept;
    for (const auto& [coord, pred] : c) {
      if (coord >= drop) kept.emplace(coord - drop, pred);
    }
    out.push_back(std::move(kept));
  }
  return SymbolicSet::from_conjuncts(i, std::move(out));
}

SymbolicSet lift_last(const SymbolicSet& s, std::size_t j) {
  if (j < s.level()) throw LevelError("lift_last: target level below source level");
  std::vector<std::size_t> pos(s.level());
  for (std::size_t k = 0; k < s.level(); ++k) pos[k] = k + (j - s.level());
  return reposition(s, j, pos);
}

SymbolicSet project_first(const SymbolicSet& s, std::size_t i) {
  if (i > s.level()) throw LevelError("project_first: i exceeds level");
  std::vector<Conjunct> out;
  for (const auto& c : s.conjuncts()) {
    Conjunct kept;
    for (const auto& [coord, pred] : c) {
      if (coord < i) kept.emplace(coord, pred);
    }
    out.push_back(std::move(kept));
  }
  return SymbolicSet::from_conjuncts(i, std::move(out));
}

SymbolicSet lift_first(const SymbolicSet& s, std::size_t j) {
  if (j < s.level()) throw LevelError("lift_first: target level below source level");
  std::vector<std::size_t> pos(s.level());
  for (std::size_t k = 0; k < s.level(); ++k) pos[k] = k;
  return reposition(s, j, pos);
}

bool is_finite(const SymbolicSet& s) {
  return std::all_of(s.conjuncts().begin(), s.conjuncts().end(), [&](const Conjunct& c) {
    if (c.size() != s.level()) return false;
    return std::all_of(c.begin(), c.end(), [](const auto& kv) { return kv.second.is_in(); });
  });
}

std::optional<std::vector<Point>> finite_witness(const SymbolicSet& s) {
  if (!is_finite(s)) return std::nullopt;
  std::vector<Point> out;
  for (const auto& c : s.conjuncts()) {
    std::vector<Point> partial{Point{}};
    for (std::size_t k = 0; k < s.level(); ++k) {
      std::vector<Point> next;
      for (const auto& p : partial) {
        for (Nat v : c.at(k).values) {
          Point q = p;
          q.push_back(v);
          next.push_back(std::move(q));
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> enumerate(const SymbolicSet& s, Nat bound) {
  std::vector<Point> out;
  if (bound == 0 && s.level() > 0) return out;
  Point p(s.level(), 0);
  while (true) {
    if (contains(s, p)) out.push_back(p);
    std::size_t k = s.level();
    while (k > 0) {
      --k;
      if (++p[k] < bound) break;
      p[k] = 0;
      if (k == 0) return out;
    }
    if (s.level() == 0) return out;
  }
}

std::optional<Point> least_element(const SymbolicSet& s) {
  std::optional<Point> best;
  for (const auto& c : s.conjuncts()) {
    Point p(s.level(), 0);
    for (const auto& [coord, pred] : c) p[coord] = pred.least();
    if (!best || p < *best) best = std::move(p);
  }
  return best;
}

bool fin_member(const SymbolicSet& s, std::size_t n) {
  if (n == 0 || s.level() != n) {
    throw LevelError("fin_member: set of level " + std::to_string(s.level()) + " tested against Fin^" +
                     std::to_string(n));
  }
  // All but the finitely many exceptional first coordinates share the generic
  // section, so the bad-index set is finite iff the generic section is small.
  SymbolicSet cur = s;
  while (cur.level() > 1) cur = generic_section_first(cur).section;
  return is_finite(cur);
}

FinEvidence fin_evidence(const SymbolicSet& s) {
  FinEvidence ev;
  ev.member = true;
  for (std::size_t idx = 0; idx < s.conjuncts().size(); ++idx) {
    const auto& c = s.conjuncts()[idx];
    auto it = std::find_if(c.begin(), c.end(), [](const auto& kv) { return kv.second.is_in(); });
    if (it == c.end()) {
      ev.member = false;
      ev.finite_coordinate.clear();
      ev.cofinite_conjunct = idx;
      return ev;
    }
    ev.finite_coordinate.push_back(it->first);
  }
  return ev;
}

}  // namespace idealforge
