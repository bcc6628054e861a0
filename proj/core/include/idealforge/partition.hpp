#pragma once

// Independent families of partitions of omega. Every natural codes a finite
// stack (t_0, ..., t_{L-1}) with t_n in omega^{n+1}; the level-n cell of m is
// entry n of its stack, or the zero tuple when the stack is shorter. Cells at
// different levels can be fixed independently, so every finite cross-level
// intersection of cells is infinite.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealforge/symcore.hpp"

namespace idealforge {

using Stack = std::vector<Point>;

enum class Family { A, B };

std::string family_name(Family f);
/// "A" or "B"; throws PreconditionError otherwise.
Family parse_family(const std::string& name);

/// Code layout: 0 is the empty stack. A stack of length L >= 1 codes as
/// 2^(L-1) * (2c + 1), where c interleaves the bits of its K = L(L+1)/2
/// coordinates: bit b of flattened coordinate r goes to bit b*K + r of c.
Nat encode(const Stack& st);
Stack decode(Nat m);

/// Family A reads codes directly. Family B first swaps the arguments of the
/// Cantor pairing, (x, y) -> (y, x), which is an involution on omega.
Nat permute(Family f, Nat m);

Point cell_of(Family f, Nat m, std::size_t n);

/// Cell constraints for an intersection of cells: explicit tuples per level,
/// plus an optional inclusive span of levels pinned to the zero tuple.
struct CellConstraints {
  std::map<std::size_t, Point> cells;
  std::optional<std::pair<std::size_t, std::size_t>> zero_span;
};

bool satisfies(Family f, Nat m, const CellConstraints& c);

/// First `count` elements, ascending, of the intersection of the constrained
/// cells. Builds matching stacks directly instead of filtering omega.
std::vector<Nat> enumerate_intersection(Family f, const CellConstraints& c, std::size_t count);
std::vector<Nat> enumerate_intersection(Family f, const std::map<std::size_t, Point>& cells, std::size_t count);

/// All elements <= bound of the intersection, ascending.
std::vector<Nat> intersection_below(Family f, const CellConstraints& c, Nat bound);

}  // namespace idealforge
