#include "idealforge/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "idealforge/errors.hpp"

namespace idealforge {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr Nat kLimitCeiling = Nat{1} << 62;

Nat isqrt(u128 n) {
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<Nat>(r);
}

std::size_t flat_index(std::size_t entry, std::size_t coord) { return entry * (entry + 1) / 2 + coord; }

/// Bits of v spread to positions b*K + r; saturates past 127 bits.
u128 spread(Nat v, std::size_t r, std::size_t k) {
  u128 out = 0;
  for (std::size_t b = 0; v != 0; ++b, v >>= 1) {
    if ((v & 1) == 0) continue;
    const std::size_t pos = b * k + r;
    if (pos >= 127) return ~u128{0};
    out |= u128{1} << pos;
  }
  return out;
}

bool is_zero(const Point& t) {
  return std::all_of(t.begin(), t.end(), [](Nat v) { return v == 0; });
}

void check_arities(const CellConstraints& c) {
  for (const auto& [n, t] : c.cells) {
    if (t.size() != n + 1) throw ArityError("level-" + std::to_string(n) + " cells are indexed by tuples of length n+1");
  }
  if (c.zero_span && c.zero_span->first > c.zero_span->second) {
    throw PreconditionError("zero span must be an ordered pair of levels");
  }
}

/// Calls `emit` with every stack code <= limit whose stack meets the
/// constraints, stopping early (and returning false) once `emit` returns false.
bool codes_below(const CellConstraints& c, Nat limit, const std::function<bool(Nat)>& emit) {
  auto forced_zero = [&](std::size_t n) {
    return c.zero_span && c.zero_span->first <= n && n <= c.zero_span->second;
  };
  // Length 0: every cell is the zero tuple.
  if (std::all_of(c.cells.begin(), c.cells.end(), [](const auto& e) { return is_zero(e.second); }) && !emit(0)) {
    return false;
  }

  for (std::size_t len = 1; len <= 64; ++len) {
    const Nat scale = Nat{1} << (len - 1);
    if (scale > limit) break;
    const Nat odd_max = limit >> (len - 1);  // 2c + 1 <= odd_max
    if (odd_max == 0) break;
    const u128 c_max = (odd_max - 1) / 2;

    bool feasible = true;
    for (const auto& [n, t] : c.cells) {
      if (n >= len && !is_zero(t)) feasible = false;
      if (n < len && forced_zero(n) && !is_zero(t)) feasible = false;
    }
    if (!feasible) continue;

    const std::size_t k = len * (len + 1) / 2;
    u128 base = 0;
    std::vector<std::size_t> free;
    for (std::size_t e = 0; e < len; ++e) {
      auto it = c.cells.find(e);
      if (it == c.cells.end() && forced_zero(e)) continue;
      for (std::size_t t = 0; t <= e; ++t) {
        const std::size_t r = flat_index(e, t);
        if (it == c.cells.end()) {
          free.push_back(r);
        } else {
          const u128 s = spread(it->second[t], r, k);
          base = s == ~u128{0} ? s : (base | s);
        }
      }
    }
    if (base > c_max) continue;

    // The interleave is monotone in every coordinate, so each free value
    // loop can stop at its first overshoot.
    std::function<bool(std::size_t, u128)> dfs = [&](std::size_t idx, u128 cur) {
      if (idx == free.size()) return emit(static_cast<Nat>((2 * cur + 1) << (len - 1)));
      for (Nat v = 0;; ++v) {
        const u128 s = spread(v, free[idx], k);
        if (s == ~u128{0}) break;
        const u128 next = cur | s;
        if (next > c_max) break;
        if (!dfs(idx + 1, next)) return false;
      }
      return true;
    };
    if (!dfs(0, base)) return false;
  }
  return true;
}

/// Elements <= bound of the intersection, ascending; std::nullopt once more
/// than `cap` of them turn up.
std::optional<std::vector<Nat>> collect_below(Family f, const CellConstraints& c, Nat bound, std::size_t cap) {
  std::vector<Nat> out;
  bool complete = false;
  if (f == Family::A) {
    complete = codes_below(c, bound, [&](Nat code) {
      out.push_back(code);
      return out.size() <= cap;
    });
  } else {
    // A code on the Cantor diagonal d moves by at most d <= sqrt(2 * bound).
    const Nat slack = 2 * isqrt(u128{2} * bound) + 2;
    const Nat limit = bound > ~Nat{0} - slack ? ~Nat{0} : bound + slack;
    complete = codes_below(c, limit, [&](Nat code) {
      const Nat m = permute(Family::B, code);
      if (m <= bound) out.push_back(m);
      return out.size() <= cap;
    });
  }
  if (!complete) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string family_name(Family f) { return f == Family::A ? "A" : "B"; }

Family parse_family(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  throw PreconditionError("unknown partition family '" + name + "' (expected A or B)");
}

Nat encode(const Stack& st) {
  if (st.empty()) return 0;
  const std::size_t len = st.size();
  if (len > 64) throw ResourceError("stack of length " + std::to_string(len) + " exceeds the 64-bit code space");
  const std::size_t k = len * (len + 1) / 2;
  Nat c = 0;
  for (std::size_t e = 0; e < len; ++e) {
    if (st[e].size() != e + 1) throw ArityError("stack entry " + std::to_string(e) + " must have arity " + std::to_string(e + 1));
    for (std::size_t t = 0; t <= e; ++t) {
      const std::size_t r = flat_index(e, t);
      Nat v = st[e][t];
      for (std::size_t b = 0; v != 0; ++b, v >>= 1) {
        if ((v & 1) == 0) continue;
        const std::size_t pos = b * k + r;
        if (pos + len >= 64) throw ResourceError("stack entries too large for a 64-bit code");
        c |= Nat{1} << pos;
      }
    }
  }
  return (2 * c + 1) << (len - 1);
}

Stack decode(Nat m) {
  if (m == 0) return {};
  const std::size_t len = static_cast<std::size_t>(std::countr_zero(m)) + 1;
  const Nat c = len >= 64 ? 0 : m >> len;
  const std::size_t k = len * (len + 1) / 2;
  std::vector<Nat> flat(k, 0);
  for (std::size_t pos = 0; pos + len < 64; ++pos) {
    if (((c >> pos) & 1) != 0) flat[pos % k] |= Nat{1} << (pos / k);
  }
  Stack st(len);
  for (std::size_t e = 0; e < len; ++e) {
    st[e].resize(e + 1);
    for (std::size_t t = 0; t <= e; ++t) st[e][t] = flat[flat_index(e, t)];
  }
  return st;
}

Nat permute(Family f, Nat m) {
  if (f == Family::A) return m;
  // m = w(w+1)/2 + y with x = w - y; the swap moves y to x on the same diagonal.
  const Nat w = (isqrt(u128{8} * m + 1) - 1) / 2;
  const Nat y = m - static_cast<Nat>(u128{w} * (w + 1) / 2);
  const Nat x = w - y;
  return m - y + x;
}

Point cell_of(Family f, Nat m, std::size_t n) {
  Stack st = decode(permute(f, m));
  if (n < st.size()) return std::move(st[n]);
  return Point(n + 1, 0);
}

bool satisfies(Family f, Nat m, const CellConstraints& c) {
  check_arities(c);
  const Stack st = decode(permute(f, m));
  auto cell = [&](std::size_t n) { return n < st.size() ? st[n] : Point(n + 1, 0); };
  for (const auto& [n, t] : c.cells) {
    if (cell(n) != t) return false;
  }
  if (c.zero_span) {
    for (std::size_t n = c.zero_span->first; n <= c.zero_span->second && n < st.size(); ++n) {
      if (!is_zero(st[n])) return false;
    }
  }
  return true;
}

std::vector<Nat> intersection_below(Family f, const CellConstraints& c, Nat bound) {
  check_arities(c);
  return *collect_below(f, c, bound, std::numeric_limits<std::size_t>::max());
}

std::vector<Nat> enumerate_intersection(Family f, const CellConstraints& c, std::size_t count) {
  check_arities(c);
  if (count == 0) return {};
  // Deep cells are empty up to some huge code and dense right after it, so
  // the bound grows geometrically and is bisected back whenever a probe
  // overshoots the cap. Each extra unit of bound adds at most one element,
  // so the bisection always lands on a bound with count..cap elements.
  const std::size_t cap = 16 * count + 1024;
  Nat lo = 0;
  std::optional<Nat> hi;
  Nat limit = std::max<Nat>(64, 2 * static_cast<Nat>(count));
  for (;;) {
    std::optional<std::vector<Nat>> found = collect_below(f, c, limit, cap);
    if (!found) {
      hi = limit;
      limit = lo + (limit - lo) / 2;
      continue;
    }
    if (found->size() >= count) {
      found->resize(count);
      return std::move(*found);
    }
    lo = limit;
    if (hi) {
      limit = lo + (*hi - lo) / 2;
      if (limit == lo) limit = *hi;
    } else {
      if (limit >= kLimitCeiling) throw ResourceError("cell intersection search exceeded 2^62");
      limit = std::min(limit * 4, kLimitCeiling);
    }
  }
}

std::vector<Nat> enumerate_intersection(Family f, const std::map<std::size_t, Point>& cells, std::size_t count) {
  return enumerate_intersection(f, CellConstraints{cells, std::nullopt}, count);
}

}  // namespace idealforge
