#pragma once

// Map expressions between coordinate spaces omega^n and the sum space, with
// exact images and preimages for the projection constructor class.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "idealforge/sumspace.hpp"

namespace idealforge {

class MapExpr;

/// Projection omega^from -> omega^to onto the last `to` coordinates.
struct LastProj {
  std::size_t from = 1;
  std::size_t to = 1;
};
/// Projection omega^from -> omega^to onto the first `to` coordinates.
struct FirstProj {
  std::size_t from = 1;
  std::size_t to = 1;
};
struct IdentityMap {
  std::size_t level = 1;
};
/// Sum_{j>=i} pi_{i,j}: the sum space (summands >= i) -> omega^i. Individual
/// summands may be replaced by another level map omega^j -> omega^i.
struct SumOfLastProj {
  std::size_t to = 1;
  std::map<std::size_t, std::shared_ptr<const MapExpr>> overrides;
};
struct Restrict {
  std::shared_ptr<const MapExpr> map;
  std::variant<SymbolicSet, SumSymbolicSet> domain;
};
/// outer after inner.
struct Compose {
  std::shared_ptr<const MapExpr> outer;
  std::shared_ptr<const MapExpr> inner;
};
/// Finitely tabulated injective map omega^from -> omega^to (defined on the table keys only).
struct TabulatedBijection {
  std::size_t from = 1;
  std::size_t to = 1;
  std::vector<std::pair<Point, Point>> table;
};

using SetValue = std::variant<SymbolicSet, SumSymbolicSet>;
using Element = std::variant<Point, SumPoint>;

class MapExpr {
 public:
  using Node = std::variant<LastProj, FirstProj, IdentityMap, SumOfLastProj, Restrict, Compose, TabulatedBijection>;

  MapExpr(Node node);  // NOLINT(google-explicit-constructor)

  static MapExpr last_proj(std::size_t from, std::size_t to);
  static MapExpr first_proj(std::size_t from, std::size_t to);
  static MapExpr identity(std::size_t level);
  static MapExpr sum_of_last_proj(std::size_t to, std::map<std::size_t, MapExpr> overrides = {});
  static MapExpr restrict(const MapExpr& map, std::variant<SymbolicSet, SumSymbolicSet> domain);
  static MapExpr compose(const MapExpr& outer, const MapExpr& inner);
  static MapExpr tabulated(std::size_t from, std::size_t to, std::vector<std::pair<Point, Point>> table);

  [[nodiscard]] const Node& node() const { return *node_; }
  /// Source level, or std::nullopt for maps out of the sum space.
  [[nodiscard]] std::optional<std::size_t> source_level() const;
  [[nodiscard]] std::size_t target_level() const;

 private:
  std::shared_ptr<const Node> node_;
};

/// Pointwise value; std::nullopt outside the map's domain.
std::optional<Point> map_apply(const MapExpr& m, const Element& x);

SymbolicSet map_image(const MapExpr& m, const SetValue& s);
SetValue map_preimage(const MapExpr& m, const SymbolicSet& s);

/// The coordinates a (restriction-stripped) composition of coordinate
/// projections selects, in target order; std::nullopt for other maps.
std::optional<std::vector<std::size_t>> as_selection(const MapExpr& m);

}  // namespace idealforge
