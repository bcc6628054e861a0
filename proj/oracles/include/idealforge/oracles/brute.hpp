#pragma once

// Brute-force reference implementations. Everything here reads the raw data
// (conjunct lists, stack codes, pattern fields) directly and avoids the
// decision procedures it is used to check.

#include <cstddef>
#include <set>
#include <vector>

#include "idealforge/finprime.hpp"
#include "idealforge/partition.hpp"
#include "idealforge/sumspace.hpp"

namespace idealforge::oracle {

bool member(const SymbolicSet& s, const Point& p);

/// Every point of [0, bound)^n, lexicographic.
std::vector<Point> grid(std::size_t n, Nat bound);
std::set<Point> members(const SymbolicSet& s, Nat bound);

/// One more than the largest constant in any predicate. Values at or above it
/// are interchangeable, which is what makes truncated universes exact.
Nat fresh_value(const SymbolicSet& s);
/// Safe truncation bound for comparing operations on these sets.
Nat universe_bound(const std::vector<const SymbolicSet*>& sets);

// Truncated images and preimages; `bound` must exceed every constant involved.
std::set<Point> section_first(const SymbolicSet& s, Nat v, Nat bound);
std::set<Point> project_last(const SymbolicSet& s, std::size_t i, Nat bound);
std::set<Point> project_first(const SymbolicSet& s, std::size_t i, Nat bound);
std::set<Point> lift_last(const SymbolicSet& s, std::size_t j, Nat bound);
std::set<Point> lift_first(const SymbolicSet& s, std::size_t j, Nat bound);

/// Fin^n through the diagonal point (v, ..., v) with v = fresh_value.
bool fin_generic_point(const SymbolicSet& s);
/// Fin^2 by counting section sizes on [0, 2v + 2)^2.
bool fin2_sections(const SymbolicSet& s);

bool sum_member(const SumSymbolicSet& m, const SumPoint& p);
/// {j : M_j not small} restricted to j < summand_bound.
std::vector<std::size_t> large_summands(const SumSymbolicSet& m, std::size_t summand_bound);
/// Points of union_{i <= j < summand_bound} pi_{i,j}[M_j] inside [0, bound)^i.
std::set<Point> tail_projection(const SumSymbolicSet& m, std::size_t i, std::size_t summand_bound, Nat bound);
/// P is co-small and no enumerated point of M projects into P.
bool limit_certificate_holds(const SumSymbolicSet& m, const LimitCertificate& cert, std::size_t summand_bound,
                             Nat bound);

/// Decode written bit by bit, independent of the library coder.
Stack decode_stack(Nat m);
Nat cantor_swap(Nat m);
Point cell(Family f, Nat m, std::size_t n);
bool meets(Family f, Nat m, const CellConstraints& c);
std::vector<Nat> filter_intersection(Family f, const CellConstraints& c, Nat bound);

bool certified_member(const CertifiedSet& a, Nat m);
/// Whether A meets X_{s_0} cap ... cap X_{s_n} finitely, by looking at the
/// first `probe` elements of the intersection above the finite part. Exact
/// when max_level(A) <= n: each component then holds or misses the whole
/// intersection.
bool meets_finitely(const CertifiedSet& a, const std::vector<Point>& s, std::size_t probe = 8);

}  // namespace idealforge::oracle
