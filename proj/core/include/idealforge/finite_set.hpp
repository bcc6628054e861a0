#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace idealforge {

using Nat = std::uint64_t;

/// An explicit finite set of naturals, stored sorted and duplicate-free.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<Nat> values) : values_(values) { normalize(); }
  explicit FiniteSet(std::vector<Nat> values) : values_(std::move(values)) { normalize(); }

  [[nodiscard]] bool contains(Nat v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
  }
  [[nodiscard]] bool empty() const { return values_.empty(); }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const std::vector<Nat>& values() const { return values_; }
  [[nodiscard]] auto begin() const { return values_.begin(); }
  [[nodiscard]] auto end() const { return values_.end(); }
  [[nodiscard]] std::optional<Nat> max() const {
    if (values_.empty()) return std::nullopt;
    return values_.back();
  }

  [[nodiscard]] FiniteSet unite(const FiniteSet& other) const;
  [[nodiscard]] FiniteSet intersect(const FiniteSet& other) const;
  [[nodiscard]] FiniteSet minus(const FiniteSet& other) const;
  [[nodiscard]] bool subset_of(const FiniteSet& other) const {
    return std::includes(other.values_.begin(), other.values_.end(), values_.begin(), values_.end());
  }
  [[nodiscard]] bool disjoint_from(const FiniteSet& other) const { return intersect(other).empty(); }

  /// k-th natural (0-based) that is NOT in this set.
  [[nodiscard]] Nat nth_outside(std::size_t k) const;

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
  friend auto operator<=>(const FiniteSet& a, const FiniteSet& b) { return a.values_ <=> b.values_; }

 private:
  void normalize() {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }
  std::vector<Nat> values_;
};

}  // namespace idealforge
