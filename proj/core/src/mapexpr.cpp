#include "idealforge/mapexpr.hpp"

#include <set>
#include <string>

#include "idealforge/errors.hpp"

namespace idealforge {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Point& as_point(const Element& x) {
  if (const auto* p = std::get_if<Point>(&x)) return *p;
  throw ArityError("expected a point of omega^n, got a sum-space point");
}

const SumPoint& as_sum_point(const Element& x) {
  if (const auto* p = std::get_if<SumPoint>(&x)) return *p;
  throw ArityError("expected a sum-space point, got a point of omega^n");
}

void check_arity(const Point& p, std::size_t n) {
  if (p.size() != n) {
    throw ArityError("point of length " + std::to_string(p.size()) + " given to a map on omega^" + std::to_string(n));
  }
}

const SymbolicSet& as_level_set(const SetValue& s, std::size_t level) {
  const auto* p = std::get_if<SymbolicSet>(&s);
  if (p == nullptr) throw LevelError("expected a subset of omega^" + std::to_string(level) + ", got a sum set");
  if (p->level() != level) {
    throw LevelError("expected a level-" + std::to_string(level) + " set, got level " + std::to_string(p->level()));
  }
  return *p;
}

const SumSymbolicSet& as_sum_set(const SetValue& s) {
  const auto* p = std::get_if<SumSymbolicSet>(&s);
  if (p == nullptr) throw LevelError("expected a sum set");
  return *p;
}

}  // namespace

MapExpr::MapExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

MapExpr MapExpr::last_proj(std::size_t from, std::size_t to) {
  if (to == 0 || to > from) throw LevelError("last_proj needs 1 <= to <= from");
  return MapExpr(LastProj{from, to});
}

MapExpr MapExpr::first_proj(std::size_t from, std::size_t to) {
  if (to == 0 || to > from) throw LevelError("first_proj needs 1 <= to <= from");
  return MapExpr(FirstProj{from, to});
}

MapExpr MapExpr::identity(std::size_t level) {
  if (level == 0) throw LevelError("identity needs level >= 1");
  return MapExpr(IdentityMap{level});
}

MapExpr MapExpr::sum_of_last_proj(std::size_t to, std::map<std::size_t, MapExpr> overrides) {
  if (to == 0) throw LevelError("sum_of_last_proj needs i >= 1");
  SumOfLastProj node{to, {}};
  for (auto& [j, m] : overrides) {
    if (j < to || m.source_level() != j || m.target_level() != to) {
      throw LevelError("summand override at " + std::to_string(j) + " must map omega^j to omega^i");
    }
    node.overrides.emplace(j, std::make_shared<const MapExpr>(std::move(m)));
  }
  return MapExpr(std::move(node));
}

MapExpr MapExpr::restrict(const MapExpr& map, std::variant<SymbolicSet, SumSymbolicSet> domain) {
  const auto src = map.source_level();
  if (src) {
    as_level_set(domain, *src);
  } else {
    as_sum_set(domain);
  }
  return MapExpr(Restrict{std::make_shared<const MapExpr>(map), std::move(domain)});
}

MapExpr MapExpr::compose(const MapExpr& outer, const MapExpr& inner) {
  const auto src = outer.source_level();
  if (!src || *src != inner.target_level()) {
    throw UnsupportedError("composition levels do not match");
  }
  return MapExpr(Compose{std::make_shared<const MapExpr>(outer), std::make_shared<const MapExpr>(inner)});
}

MapExpr MapExpr::tabulated(std::size_t from, std::size_t to, std::vector<std::pair<Point, Point>> table) {
  std::set<Point> keys;
  std::set<Point> values;
  for (const auto& [k, v] : table) {
    check_arity(k, from);
    check_arity(v, to);
    if (!keys.insert(k).second) throw PreconditionError("tabulated map lists a key twice");
    if (!values.insert(v).second) throw PreconditionError("tabulated map is not injective");
  }
  return MapExpr(TabulatedBijection{from, to, std::move(table)});
}

std::optional<std::size_t> MapExpr::source_level() const {
  return std::visit(Overloaded{
                        [](const LastProj& n) -> std::optional<std::size_t> { return n.from; },
                        [](const FirstProj& n) -> std::optional<std::size_t> { return n.from; },
                        [](const IdentityMap& n) -> std::optional<std::size_t> { return n.level; },
                        [](const SumOfLastProj&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const Restrict& n) { return n.map->source_level(); },
                        [](const Compose& n) { return n.inner->source_level(); },
                        [](const TabulatedBijection& n) -> std::optional<std::size_t> { return n.from; },
                    },
                    node());
}

std::size_t MapExpr::target_level() const {
  return std::visit(Overloaded{
                        [](const LastProj& n) { return n.to; },
                        [](const FirstProj& n) { return n.to; },
                        [](const IdentityMap& n) { return n.level; },
                        [](const SumOfLastProj& n) { return n.to; },
                        [](const Restrict& n) { return n.map->target_level(); },
                        [](const Compose& n) { return n.outer->target_level(); },
                        [](const TabulatedBijection& n) { return n.to; },
                    },
                    node());
}

std::optional<Point> map_apply(const MapExpr& m, const Element& x) {
  return std::visit(
      Overloaded{
          [&](const LastProj& n) -> std::optional<Point> {
            const Point& p = as_point(x);
            check_arity(p, n.from);
            return Point(p.end() - static_cast<std::ptrdiff_t>(n.to), p.end());
          },
          [&](const FirstProj& n) -> std::optional<Point> {
            const Point& p = as_point(x);
            check_arity(p, n.from);
            return Point(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n.to));
          },
          [&](const IdentityMap& n) -> std::optional<Point> {
            const Point& p = as_point(x);
            check_arity(p, n.level);
            return p;
          },
          [&](const SumOfLastProj& n) -> std::optional<Point> {
            const SumPoint& p = as_sum_point(x);
            check_arity(p.x, p.summand);
            if (p.summand < n.to) return std::nullopt;
            if (auto it = n.overrides.find(p.summand); it != n.overrides.end()) return map_apply(*it->second, Element(std::in_place_type<Point>, p.x));
            return Point(p.x.end() - static_cast<std::ptrdiff_t>(n.to), p.x.end());
          },
          [&](const Restrict& n) -> std::optional<Point> {
            const bool inside = std::visit(Overloaded{
                                               [&](const SymbolicSet& d) { return contains(d, as_point(x)); },
                                               [&](const SumSymbolicSet& d) { return sum_contains(d, as_sum_point(x)); },
                                           },
                                           n.domain);
            if (!inside) return std::nullopt;
            return map_apply(*n.map, x);
          },
          [&](const Compose& n) -> std::optional<Point> {
            auto y = map_apply(*n.inner, x);
            if (!y) return std::nullopt;
            return map_apply(*n.outer, Element(std::in_place_type<Point>, std::move(*y)));
          },
          [&](const TabulatedBijection& n) -> std::optional<Point> {
            const Point& p = as_point(x);
            check_arity(p, n.from);
            for (const auto& [k, v] : n.table) {
              if (k == p) return v;
            }
            return std::nullopt;
          },
      },
      m.node());
}

SymbolicSet map_image(const MapExpr& m, const SetValue& s) {
  return std::visit(
      Overloaded{
          [&](const LastProj& n) { return project_last(as_level_set(s, n.from), n.to); },
          [&](const FirstProj& n) { return project_first(as_level_set(s, n.from), n.to); },
          [&](const IdentityMap& n) { return as_level_set(s, n.level); },
          [&](const SumOfLastProj& n) {
            SumSymbolicSet rest = as_sum_set(s).from_summand(n.to);
            SymbolicSet extra = SymbolicSet::empty(n.to);
            for (const auto& [j, over] : n.overrides) {
              extra = unite(extra, map_image(*over, summand_slice(rest, j)));
              rest = rest.with_summand(j, SymbolicSet::empty(j));
            }
            return unite(tail_union_projection(rest, n.to), extra);
          },
          [&](const Restrict& n) {
            SetValue narrowed = std::visit(
                Overloaded{
                    [&](const SymbolicSet& d) -> SetValue { return intersect(as_level_set(s, d.level()), d); },
                    [&](const SumSymbolicSet& d) -> SetValue { return sum_intersect(as_sum_set(s), d); },
                },
                n.domain);
            return map_image(*n.map, narrowed);
          },
          [&](const Compose& n) { return map_image(*n.outer, map_image(*n.inner, s)); },
          [&](const TabulatedBijection&) -> SymbolicSet {
            throw UnsupportedError("images under tabulated maps are not symbolic");
          },
      },
      m.node());
}

SetValue map_preimage(const MapExpr& m, const SymbolicSet& s) {
  if (s.level() != m.target_level()) {
    throw LevelError("preimage of a level-" + std::to_string(s.level()) + " set under a map into omega^" +
                     std::to_string(m.target_level()));
  }
  return std::visit(
      Overloaded{
          [&](const LastProj& n) -> SetValue { return lift_last(s, n.from); },
          [&](const FirstProj& n) -> SetValue { return lift_first(s, n.from); },
          [&](const IdentityMap&) -> SetValue { return s; },
          [&](const SumOfLastProj& n) -> SetValue {
            SumSymbolicSet out = SumSymbolicSet::overline(s);
            for (const auto& [j, over] : n.overrides) {
              out = out.with_summand(j, std::get<SymbolicSet>(map_preimage(*over, s)));
            }
            return out;
          },
          [&](const Restrict& n) -> SetValue {
            SetValue pre = map_preimage(*n.map, s);
            return std::visit(
                Overloaded{
                    [&](const SymbolicSet& d) -> SetValue { return intersect(std::get<SymbolicSet>(pre), d); },
                    [&](const SumSymbolicSet& d) -> SetValue {
                      return sum_intersect(std::get<SumSymbolicSet>(pre), d);
                    },
                },
                n.domain);
          },
          [&](const Compose& n) -> SetValue {
            return map_preimage(*n.inner, std::get<SymbolicSet>(map_preimage(*n.outer, s)));
          },
          [&](const TabulatedBijection&) -> SetValue {
            throw UnsupportedError("preimages under tabulated maps are not symbolic");
          },
      },
      m.node());
}

std::optional<std::vector<std::size_t>> as_selection(const MapExpr& m) {
  using Sel = std::optional<std::vector<std::size_t>>;
  return std::visit(Overloaded{
                        [](const LastProj& n) -> Sel {
                          std::vector<std::size_t> v(n.to);
                          for (std::size_t k = 0; k < n.to; ++k) v[k] = n.from - n.to + k;
                          return v;
                        },
                        [](const FirstProj& n) -> Sel {
                          std::vector<std::size_t> v(n.to);
                          for (std::size_t k = 0; k < n.to; ++k) v[k] = k;
                          return v;
                        },
                        [](const IdentityMap& n) -> Sel {
                          std::vector<std::size_t> v(n.level);
                          for (std::size_t k = 0; k < n.level; ++k) v[k] = k;
                          return v;
                        },
                        [](const SumOfLastProj&) -> Sel { return std::nullopt; },
                        [](const Restrict& n) -> Sel { return as_selection(*n.map); },
                        [](const Compose& n) -> Sel {
                          auto outer = as_selection(*n.outer);
                          auto inner = as_selection(*n.inner);
                          if (!outer || !inner) return std::nullopt;
                          std::vector<std::size_t> v;
                          for (std::size_t k : *outer) v.push_back((*inner)[k]);
                          return v;
                        },
                        [](const TabulatedBijection&) -> Sel { return std::nullopt; },
                    },
                    m.node());
}

}  // namespace idealforge
