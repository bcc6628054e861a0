#include "idealforge/quasisys.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "idealforge/errors.hpp"

namespace idealforge {

namespace {

SumSymbolicSet exindlim_domain_one() {
  std::map<std::size_t, SymbolicSet> ex;
  ex.emplace(1, SymbolicSet::full(1));
  return SumSymbolicSet::make(std::move(ex), 1, 0, SymbolicSet::atom(1, 0, Predicate::not_in(FiniteSet{0})), 2);
}

std::size_t admitted_count(const Predicate& p) {
  return p.is_in() ? p.values.size() : static_cast<std::size_t>(-1);
}

/// A point of `dom` whose coordinates p and q differ, if there is one.
std::optional<Point> separating_point(const SymbolicSet& dom, std::size_t p, std::size_t q) {
  const std::size_t n = dom.level();
  for (const auto& c : dom.conjuncts()) {
    auto pick = [&](std::size_t coord, std::size_t k) -> std::optional<Nat> {
      auto it = c.find(coord);
      if (it == c.end()) return static_cast<Nat>(k);
      if (k >= admitted_count(it->second)) return std::nullopt;
      return it->second.nth_admitted(k);
    };
    // Generic point: coordinate c takes its c-th admitted value.
    Point a(n);
    for (std::size_t coord = 0; coord < n; ++coord) {
      auto it = c.find(coord);
      const std::size_t cap = it == c.end() ? coord + 1 : std::min(admitted_count(it->second), coord + 1);
      a[coord] = *pick(coord, cap - 1);
    }
    if (a[p] != a[q]) return a;
    for (std::size_t coord = 0; coord < n; ++coord) a[coord] = *pick(coord, 0);
    for (std::size_t coord : {p, q}) {
      Point b = a;
      if (auto v = pick(coord, 1)) {
        b[coord] = *v;
        if (b[p] != b[q]) return b;
      }
    }
  }
  return std::nullopt;
}

const TabulatedBijection* as_table(const MapExpr& m) {
  return std::get_if<TabulatedBijection>(&m.node());
}

std::optional<CoherenceViolation> pointwise_coherence(const QuasiHomSystem& sys, std::size_t i, std::size_t j,
                                                      std::size_t k, std::size_t prefix) {
  const MapExpr ik = connecting_map(sys, i, k);
  const MapExpr jk = connecting_map(sys, j, k);
  const MapExpr ij = connecting_map(sys, i, j);
  std::vector<Point> samples;
  for (const MapExpr* m : {&jk, &ik}) {
    if (const auto* t = as_table(*m)) {
      for (std::size_t e = 0; e < t->table.size() && e < prefix; ++e) samples.push_back(t->table[e].first);
    }
  }
  if (const auto* t = as_table(ij)) {
    for (std::size_t e = 0; e < t->table.size() && e < prefix; ++e) {
      Point a(k - j, 0);
      a.insert(a.end(), t->table[e].first.begin(), t->table[e].first.end());
      samples.push_back(std::move(a));
    }
  }
  const SymbolicSet dom_ik = map_domain(sys, i, k);
  const SymbolicSet dom_jk = map_domain(sys, j, k);
  const SymbolicSet dom_ij = map_domain(sys, i, j);
  for (const auto& a : samples) {
    if (!contains(dom_ik, a) || !contains(dom_jk, a)) continue;
    auto b = map_apply(jk, Element(std::in_place_type<Point>, a));
    if (!b || !contains(dom_ij, *b)) continue;
    auto direct = map_apply(ik, Element(std::in_place_type<Point>, a));
    auto composed = map_apply(ij, Element(std::in_place_type<Point>, *b));
    if (direct && composed && *direct != *composed) return CoherenceViolation{i, j, k, a, *direct, *composed};
  }
  return std::nullopt;
}

}  // namespace

QuasiHomSystem builtin_system(const std::string& name) {
  QuasiHomSystem sys;
  sys.name = name;
  if (name == "standard") return sys;
  if (name == "exindlim") {
    sys.domains.emplace(1, exindlim_domain_one());
    return sys;
  }
  throw PreconditionError("unknown system '" + name + "' (expected standard or exindlim)");
}

SymbolicSet map_domain(const QuasiHomSystem& sys, std::size_t i, std::size_t j) {
  if (i == 0 || j < i) throw LevelError("map domains need 1 <= i <= j");
  auto it = sys.domains.find(i);
  return it == sys.domains.end() ? SymbolicSet::full(j) : summand_slice(it->second, j);
}

MapExpr connecting_map(const QuasiHomSystem& sys, std::size_t i, std::size_t j) {
  if (i == 0 || j < i) throw LevelError("connecting maps need 1 <= i <= j");
  auto it = sys.overrides.find({i, j});
  return it == sys.overrides.end() ? MapExpr::last_proj(j, i) : it->second;
}

MapExpr limit_map(const QuasiHomSystem& sys, std::size_t i) {
  std::map<std::size_t, MapExpr> summands;
  for (const auto& [ij, m] : sys.overrides) {
    if (ij.first == i) summands.emplace(ij.second, m);
  }
  MapExpr sum = MapExpr::sum_of_last_proj(i, std::move(summands));
  auto it = sys.domains.find(i);
  if (it == sys.domains.end()) return sum;
  return MapExpr::restrict(sum, it->second.from_summand(i));
}

std::size_t system_extent(const QuasiHomSystem& sys) {
  std::size_t e = 1;
  for (const auto& [i, d] : sys.domains) {
    e = std::max({e, i, d.threshold() + d.head_width() + d.tail_width()});
  }
  for (const auto& [ij, m] : sys.overrides) e = std::max(e, ij.second);
  return e;
}

CoherenceResult check_coherent(const QuasiHomSystem& sys, std::size_t prefix) {
  // Triples made only of default projections compose exactly, so only
  // triples touching an override can fail. Past the extent every domain and
  // map is template-stable, hence two extra levels suffice.
  const std::size_t top = system_extent(sys) + 2;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
  for (const auto& [ij, m] : sys.overrides) {
    const auto [a, b] = ij;
    for (std::size_t k = b; k <= std::max(top, b); ++k) triples.emplace(a, b, k);
    for (std::size_t i = 1; i <= a; ++i) triples.emplace(i, a, b);
    for (std::size_t j = a; j <= b; ++j) triples.emplace(a, j, b);
  }
  for (const auto& [i, j, k] : triples) {
    const MapExpr ik = connecting_map(sys, i, k);
    const MapExpr jk = connecting_map(sys, j, k);
    const MapExpr ij = connecting_map(sys, i, j);
    auto s_ik = as_selection(ik);
    auto s_jk = as_selection(jk);
    auto s_ij = as_selection(ij);
    if (!s_ik || !s_jk || !s_ij) {
      if (auto v = pointwise_coherence(sys, i, j, k, prefix)) return {false, v};
      continue;
    }
    std::vector<std::size_t> composed;
    for (std::size_t c : *s_ij) composed.push_back((*s_jk)[c]);
    if (composed == *s_ik) continue;
    const SymbolicSet dom = intersect(
        intersect(map_domain(sys, i, k), map_domain(sys, j, k)),
        std::get<SymbolicSet>(map_preimage(jk, map_domain(sys, i, j))));
    for (std::size_t c = 0; c < composed.size(); ++c) {
      if (composed[c] == (*s_ik)[c]) continue;
      if (auto a = separating_point(dom, (*s_ik)[c], composed[c])) {
        const Element x(std::in_place_type<Point>, *a);
        auto direct = map_apply(ik, x);
        auto mid = map_apply(jk, x);
        auto via = map_apply(ij, Element(std::in_place_type<Point>, *mid));
        return {false, CoherenceViolation{i, j, k, *a, *direct, *via}};
      }
    }
  }
  return {};
}

ConditionCResult check_condition_C(const QuasiHomSystem& sys) {
  // Only a proper domain dom(pi_{i,k}) can fail to contain the preimage.
  const std::size_t reach = std::max(sys.horizon, system_extent(sys));
  for (const auto& [i, dom_i] : sys.domains) {
    const std::size_t last_j = reach + dom_i.head_width() + dom_i.tail_width() + 2;
    for (std::size_t j = i; j <= last_j; ++j) {
      const auto pre = std::get<SumSymbolicSet>(map_preimage(limit_map(sys, j), map_domain(sys, i, j)));
      const SumSymbolicSet outside = sum_difference(pre, dom_i);
      if (auto w = sum_least_element(outside)) return {false, ConditionCViolation{i, j, w->summand, w->x}};
    }
  }
  return {};
}

QuasiHomSystem extend_infinity(const QuasiHomSystem& sys) {
  if (sys.has_top) throw PreconditionError("system already has a top index");
  if (!check_condition_C(sys).pass) throw PreconditionError("extend_infinity needs condition (C)");
  QuasiHomSystem out = sys;
  out.has_top = true;
  out.name = sys.name + "+inf";
  return out;
}

bool top_member(const QuasiHomSystem& sys, const SumSymbolicSet& m) {
  if (!sys.has_top) throw PreconditionError("system has no top index");
  return finpow_omega_member(m);
}

std::size_t limit_search_bound(const QuasiHomSystem& sys, const SumSymbolicSet& m) {
  return finomega_search_bound(m) + system_extent(sys);
}

std::optional<LimitCertificate> limit_member(const QuasiHomSystem& sys, const SumSymbolicSet& m) {
  const std::size_t bound = limit_search_bound(sys, m);
  for (std::size_t i = 1; i <= bound; ++i) {
    SymbolicSet u = map_image(limit_map(sys, i), m);
    if (fin_member(u, i)) return LimitCertificate{i, complement(u)};
  }
  return std::nullopt;
}

bool validate_limit_certificate(const QuasiHomSystem& sys, const SumSymbolicSet& m, const LimitCertificate& cert) {
  const std::size_t i = cert.index;
  if (i == 0 || cert.filter_set.level() != i) return false;
  if (!fin_member(complement(cert.filter_set), i)) return false;
  const auto bar = std::get<SumSymbolicSet>(map_preimage(limit_map(sys, i), cert.filter_set));
  return sum_is_empty(sum_intersect(m, bar));
}

LimitCertificate lift_limit_certificate(const QuasiHomSystem& sys, const LimitCertificate& cert) {
  const std::size_t i = cert.index;
  SymbolicSet pre = std::get<SymbolicSet>(map_preimage(connecting_map(sys, i, i + 1), cert.filter_set));
  return {i + 1, intersect(pre, map_domain(sys, i, i + 1))};
}

SumSymbolicSet exindlim_a() { return exindlim_domain_one(); }

SumSymbolicSet exindlim_b() { return SumSymbolicSet::make({}, 0, 0, SymbolicSet::full(0), 2); }

SumPoint exindlim_refuter(std::size_t i, const SymbolicSet& p) {
  if (i == 0 || p.level() != i) throw LevelError("refuter needs a level-i set with i >= 1");
  if (!fin_member(complement(p), i)) throw PreconditionError("refuter needs P in the dual filter of Fin^i");
  const Point x = *least_element(p);
  if (i == 1) return {1, x};
  // (0, x) lies outside F_{i+1} and projects into P.
  Point y{0};
  y.insert(y.end(), x.begin(), x.end());
  return {i + 1, y};
}

}  // namespace idealforge
