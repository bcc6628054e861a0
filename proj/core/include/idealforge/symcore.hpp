#pragma once

// Decidable boolean algebra of coordinate-constrained subsets of omega^n and
// the exact Fin^n membership procedure.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idealforge/finite_set.hpp"

namespace idealforge {

using Point = std::vector<Nat>;

/// In(F) or NotIn(F) on a single coordinate.
struct Predicate {
  enum class Kind { In, NotIn };

  Kind kind = Kind::NotIn;
  FiniteSet values;

  static Predicate in(FiniteSet f) { return {Kind::In, std::move(f)}; }
  static Predicate not_in(FiniteSet f) { return {Kind::NotIn, std::move(f)}; }

  [[nodiscard]] bool admits(Nat v) const {
    return (kind == Kind::In) == values.contains(v);
  }
  [[nodiscard]] bool is_in() const { return kind == Kind::In; }
  /// In(empty): no value passes.
  [[nodiscard]] bool unsatisfiable() const { return kind == Kind::In && values.empty(); }
  /// NotIn(empty): every value passes.
  [[nodiscard]] bool trivial() const { return kind == Kind::NotIn && values.empty(); }
  /// k-th admitted value in increasing order; requires k < count for In.
  [[nodiscard]] Nat nth_admitted(std::size_t k) const;
  [[nodiscard]] Nat least() const { return nth_admitted(0); }
  [[nodiscard]] Predicate negated() const {
    return {kind == Kind::In ? Kind::NotIn : Kind::In, values};
  }
  [[nodiscard]] Predicate meet(const Predicate& other) const;
  [[nodiscard]] Predicate join(const Predicate& other) const;
  /// Set inclusion between the admitted value sets.
  [[nodiscard]] bool included_in(const Predicate& other) const;

  friend bool operator==(const Predicate&, const Predicate&) = default;
  friend auto operator<=>(const Predicate&, const Predicate&) = default;
};

/// Coordinate index -> predicate; absent coordinates are unconstrained.
using Conjunct = std::map<std::size_t, Predicate>;

/// Conjunction of two conjuncts; std::nullopt when unsatisfiable.
std::optional<Conjunct> meet(const Conjunct& a, const Conjunct& b);

/// Product inclusion, exact because every factor is non-empty.
bool conjunct_included(const Conjunct& a, const Conjunct& b);

/// A finite union of conjuncts over omega^level, kept in canonical form:
/// one predicate per coordinate, no unsatisfiable conjuncts, no trivial
/// predicates, no conjunct subsumed by another, sorted. Level 0 is allowed
/// and denotes subsets of the one-point space omega^0.
class SymbolicSet {
 public:
  SymbolicSet() = default;

  static SymbolicSet empty(std::size_t level);
  static SymbolicSet full(std::size_t level);
  static SymbolicSet from_conjuncts(std::size_t level, std::vector<Conjunct> conjuncts);
  /// {x in omega^level : pred(x_coord)}
  static SymbolicSet atom(std::size_t level, std::size_t coord, Predicate pred);
  /// Product of per-coordinate In-singletons: the single point p.
  static SymbolicSet singleton(const Point& p);

  [[nodiscard]] std::size_t level() const { return level_; }
  [[nodiscard]] const std::vector<Conjunct>& conjuncts() const { return conjuncts_; }
  [[nodiscard]] bool is_empty() const { return conjuncts_.empty(); }
  [[nodiscard]] bool is_full() const { return conjuncts_.size() == 1 && conjuncts_.front().empty(); }

  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;

 private:
  SymbolicSet(std::size_t level, std::vector<Conjunct> conjuncts)
      : level_(level), conjuncts_(std::move(conjuncts)) {}
  std::size_t level_ = 0;
  std::vector<Conjunct> conjuncts_;
};

enum class SetOp { Union, Intersection, Difference, Complement };

bool contains(const SymbolicSet& s, const Point& p);

/// Exact boolean combination. `t` is ignored for Complement and required otherwise.
SymbolicSet combine(SetOp op, const SymbolicSet& s, const SymbolicSet* t = nullptr);
SymbolicSet unite(const SymbolicSet& s, const SymbolicSet& t);
SymbolicSet intersect(const SymbolicSet& s, const SymbolicSet& t);
SymbolicSet difference(const SymbolicSet& s, const SymbolicSet& t);
SymbolicSet complement(const SymbolicSet& s);

bool is_empty(const SymbolicSet& s);
bool subset(const SymbolicSet& s, const SymbolicSet& t);
/// Semantic equality (mutual inclusion).
bool same_set(const SymbolicSet& s, const SymbolicSet& t);

/// The section {y : (v, y) in S} at level n-1.
SymbolicSet section_first(const SymbolicSet& s, Nat v);

struct GenericSection {
  SymbolicSet section;
  FiniteSet exceptional;
};
/// Section shared by every v outside `exceptional`.
GenericSection generic_section_first(const SymbolicSet& s);

/// Image under the projection onto the last i coordinates.
SymbolicSet project_last(const SymbolicSet& s, std::size_t i);
/// Preimage of a level-i set under the projection omega^j -> omega^i onto the last i coordinates.
SymbolicSet lift_last(const SymbolicSet& s, std::size_t j);
/// Image under the projection onto the first i coordinates.
SymbolicSet project_first(const SymbolicSet& s, std::size_t i);
/// Preimage under the projection omega^j -> omega^i onto the first i coordinates.
SymbolicSet lift_first(const SymbolicSet& s, std::size_t j);
/// Relabel coordinates: coordinate k of `s` becomes coordinate positions[k] of a level-`level` set.
SymbolicSet reposition(const SymbolicSet& s, std::size_t level, const std::vector<std::size_t>& positions);

/// Syntactic finiteness: every conjunct pins every coordinate with In.
bool is_finite(const SymbolicSet& s);
std::optional<std::vector<Point>> finite_witness(const SymbolicSet& s);
/// All members with every coordinate < bound, lexicographically sorted.
std::vector<Point> enumerate(const SymbolicSet& s, Nat bound);
/// Lexicographically least member.
std::optional<Point> least_element(const SymbolicSet& s);

/// Exact Fin^n membership for a level-n set (n >= 1).
bool fin_member(const SymbolicSet& s, std::size_t n);

/// Fin^n evidence read straight off the conjuncts. A union of conjuncts is
/// small iff every conjunct is, and a product of non-empty factors is small iff
/// some factor is finite; so a member is witnessed by one In-coordinate per
/// conjunct and a non-member by a conjunct built only from cofinite factors.
struct FinEvidence {
  bool member = false;
  std::vector<std::size_t> finite_coordinate;    // per conjunct, when member
  std::optional<std::size_t> cofinite_conjunct;  // when not member
};
FinEvidence fin_evidence(const SymbolicSet& s);

struct ResourceCaps {
  std::size_t conjuncts = 1u << 14;
  std::size_t regions = 1u << 12;
};
/// Process-wide caps; IDEALFORGE_RESOURCE_CAP overrides both when set.
const ResourceCaps& resource_caps();

}  // namespace idealforge
