#include "idealforge/random.hpp"

#include <algorithm>
#include <limits>

#include "idealforge/errors.hpp"

namespace idealforge {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::split(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream + 1))); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw PreconditionError("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % n;
  }
}

FiniteSet random_finite_set(Rng& rng, const SetShape& shape) {
  std::vector<Nat> v;
  const std::size_t k = rng.below(shape.max_values) + 1;
  for (std::size_t e = 0; e < k; ++e) v.push_back(rng.below(shape.value_bound));
  return FiniteSet(std::move(v));
}

Predicate random_predicate(Rng& rng, const SetShape& shape) {
  FiniteSet f = random_finite_set(rng, shape);
  return rng.chance(1, 2) ? Predicate::in(std::move(f)) : Predicate::not_in(std::move(f));
}

namespace {

Conjunct random_conjunct(Rng& rng, std::size_t level, const SetShape& shape, bool need_in) {
  Conjunct c;
  for (std::size_t k = 0; k < level; ++k) {
    if (rng.chance(1, 2)) c.emplace(k, random_predicate(rng, shape));
  }
  if (need_in && level > 0 && std::none_of(c.begin(), c.end(), [](const auto& e) { return e.second.is_in(); })) {
    c[rng.below(level)] = Predicate::in(random_finite_set(rng, shape));
  }
  return c;
}

}  // namespace

SymbolicSet random_symbolic_set(Rng& rng, std::size_t level, const SetShape& shape) {
  std::vector<Conjunct> cs;
  const std::size_t k = rng.below(shape.max_conjuncts + 1);
  for (std::size_t e = 0; e < k; ++e) cs.push_back(random_conjunct(rng, level, shape, false));
  return SymbolicSet::from_conjuncts(level, std::move(cs));
}

SymbolicSet random_small_set(Rng& rng, std::size_t level, const SetShape& shape) {
  std::vector<Conjunct> cs;
  const std::size_t k = rng.below(shape.max_conjuncts + 1);
  for (std::size_t e = 0; e < k; ++e) cs.push_back(random_conjunct(rng, level, shape, true));
  return SymbolicSet::from_conjuncts(level, std::move(cs));
}

SumSymbolicSet random_sum_set(Rng& rng, const SetShape& shape) {
  const std::size_t h = rng.below(3);
  const std::size_t t = rng.below(3);
  const std::size_t threshold = std::max<std::size_t>(h + t, 1) + rng.below(3);
  std::map<std::size_t, SymbolicSet> ex;
  for (std::size_t j = 1; j < threshold; ++j) {
    if (rng.chance(1, 2)) ex.emplace(j, random_symbolic_set(rng, j, shape));
  }
  return SumSymbolicSet::make(std::move(ex), h, t, random_symbolic_set(rng, h + t, shape), threshold);
}

SumSymbolicSet random_finomega_member(Rng& rng, const SetShape& shape) {
  const std::size_t i = rng.below(3) + 1;
  const SymbolicSet p = complement(random_small_set(rng, i, shape));
  return sum_difference(random_sum_set(rng, shape), SumSymbolicSet::overline(p));
}

CertifiedSet random_certified_set(Rng& rng, Family f, std::size_t max_level, const SetShape& shape) {
  CertifiedSet a = CertifiedSet::finite(f, rng.chance(1, 2) ? random_finite_set(rng, shape) : FiniteSet{});
  const std::size_t bundles = rng.below(3);
  for (std::size_t b = 0; b < bundles; ++b) {
    const std::size_t l = rng.below(max_level + 1);
    SymbolicSet s = rng.chance(2, 3) ? random_small_set(rng, l + 1, shape) : random_symbolic_set(rng, l + 1, shape);
    a = certified_union(a, CertifiedSet::bundle(f, l, std::move(s)));
  }
  if (rng.chance(1, 2)) {
    std::map<std::size_t, Point> u;
    for (std::size_t l = 0; l <= max_level; ++l) {
      if (!rng.chance(1, 2)) continue;
      Point t(l + 1);
      for (auto& v : t) v = rng.below(shape.value_bound);
      u.emplace(l, std::move(t));
    }
    if (!u.empty()) a = certified_union(a, CertifiedSet::multicell(f, std::move(u)));
  }
  return a;
}

}  // namespace idealforge
