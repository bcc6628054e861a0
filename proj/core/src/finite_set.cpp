#include "idealforge/finite_set.hpp"

#include <iterator>

namespace idealforge {

FiniteSet FiniteSet::unite(const FiniteSet& other) const {
  std::vector<Nat> out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  FiniteSet r;
  r.values_ = std::move(out);
  return r;
}

FiniteSet FiniteSet::intersect(const FiniteSet& other) const {
  std::vector<Nat> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  FiniteSet r;
  r.values_ = std::move(out);
  return r;
}

FiniteSet FiniteSet::minus(const FiniteSet& other) const {
  std::vector<Nat> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  FiniteSet r;
  r.values_ = std::move(out);
  return r;
}

Nat FiniteSet::nth_outside(std::size_t k) const {
  // Walk the sorted excluded values; each one at or below the candidate pushes it up.
  Nat candidate = k;
  for (Nat v : values_) {
    if (v <= candidate) {
      ++candidate;
    } else {
      break;
    }
  }
  return candidate;
}

}  // namespace idealforge
