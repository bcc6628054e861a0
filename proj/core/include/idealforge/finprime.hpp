#pragma once

// The ideal Fin'_omega on omega over an independent partition family:
// certified sets, the block formulas phi_n, the J_n hierarchy and the C/D
// splitting of a set whose full cell intersections are all finite.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "idealforge/partition.hpp"
#include "idealforge/symcore.hpp"

namespace idealforge {

/// Finite part, unions of whole cells per level, and intersections of cells
/// at several levels. bundles[l] is a set of level-(l+1) indices s and denotes
/// the union of the X_s.
struct CertifiedSet {
  Family family = Family::A;
  FiniteSet finite_part;
  std::map<std::size_t, SymbolicSet> bundles;
  std::vector<std::map<std::size_t, Point>> multicells;

  static CertifiedSet finite(Family f, FiniteSet values);
  static CertifiedSet bundle(Family f, std::size_t level, SymbolicSet b);
  static CertifiedSet multicell(Family f, std::map<std::size_t, Point> cells);

  /// Greatest level mentioned by a bundle or multicell; 0 when there are none.
  [[nodiscard]] std::size_t max_level() const;
  friend bool operator==(const CertifiedSet&, const CertifiedSet&) = default;
};

/// Checks bundle levels and multicell arities; throws LevelError/ArityError.
void validate(const CertifiedSet& a);

bool certified_contains(const CertifiedSet& a, Nat m);
/// Throws PreconditionError on a family mismatch.
CertifiedSet certified_union(const CertifiedSet& a, const CertifiedSet& b);
/// Members below `bound`, ascending.
std::vector<Nat> certified_enumerate(const CertifiedSet& a, Nat bound);

/// Boolean formula over atoms "s_l lies in Q" for index tuples s_l in omega^{l+1}.
class BlockFormula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or };

  static BlockFormula constant(bool value);
  static BlockFormula atom(std::size_t level, SymbolicSet q);
  static BlockFormula negation(BlockFormula f);
  static BlockFormula conjunction(std::vector<BlockFormula> fs);
  static BlockFormula disjunction(std::vector<BlockFormula> fs);

  [[nodiscard]] Kind kind() const;
  [[nodiscard]] std::size_t atom_level() const;
  [[nodiscard]] const SymbolicSet& atom_set() const;
  [[nodiscard]] const std::vector<BlockFormula>& children() const;
  /// Highest atom level, or std::nullopt for atom-free formulas.
  [[nodiscard]] std::optional<std::size_t> max_level() const;

 private:
  struct Node;
  explicit BlockFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Truth value at the index tuple (s_0, ..., s_n).
bool evaluate(const BlockFormula& f, const std::vector<Point>& s);

/// B'_0, ..., B'_n with B'_l a Fin^{l+1}-small subset of omega^{l+1}.
using Rectangle = std::vector<SymbolicSet>;

/// phi_n(A): the tuples (s_0, ..., s_n) whose cell intersection meets A finitely.
/// Requires n >= max_level(A).
BlockFormula phi(const CertifiedSet& a, std::size_t n);
/// phi_n(A) for any n; components above level n meet every lower cell
/// intersection infinitely and constrain only their levels <= n.
BlockFormula phi_truncated(const CertifiedSet& a, std::size_t n);

/// Whether F contains a product of complements (B'_0)^c x ... x (B'_n)^c of
/// small sets, with the witness. Decided by splitting each level into the
/// non-empty boolean regions of its atoms, lowest level first.
std::optional<Rectangle> upfamily_member(const BlockFormula& f, std::size_t n);

/// Some index tuple satisfies F.
bool block_satisfiable(const BlockFormula& f, std::size_t n);

/// Each B'_l is small and the product of complements lies inside F (exact).
bool validate_rectangle(const BlockFormula& f, const Rectangle& r);

bool jn_member(const CertifiedSet& a, std::size_t n);

struct FinPrimeCertificate {
  std::size_t n = 0;
  Rectangle rectangle;
};
/// Decides at n = max_level(A).
std::optional<FinPrimeCertificate> finprime_member(const CertifiedSet& a);

/// A \ B is finite. Full cell intersections are infinite and either inside or
/// disjoint from every bundle and multicell, so only the finite parts can differ.
bool certified_almost_subset(const CertifiedSet& a, const CertifiedSet& b);
/// Exact inclusion A subset of B.
bool certified_subset(const CertifiedSet& a, const CertifiedSet& b);

struct Generator {
  std::size_t level = 0;
  SymbolicSet cells;  // small subset of omega^{level+1}
};
struct Decomposition {
  std::vector<Generator> generators;
  FiniteSet remainder;
};

/// A covered by generators U_{s in B'_l} X_s plus a finite remainder.
/// Throws PreconditionError for non-members.
Decomposition decomposition_certificate(const CertifiedSet& a);
bool generator_contains(Family f, const Generator& g, Nat m);
/// Generators are small and the cover is exact; `prefix` also re-checks
/// coverage pointwise on [0, prefix).
bool validate_decomposition(const CertifiedSet& a, const Decomposition& d, Nat prefix = 10000);

/// Inverse bijections omega^{n+1} -> omega and omega x ... x omega^n -> omega.
using TupleIndex = std::function<Nat(const Point&)>;
using StackIndex = std::function<Nat(const std::vector<Point>&)>;
/// Default indices: bit interleaving of the (flattened) coordinates.
Nat default_tuple_index(const Point& t);
Nat default_stack_index(const std::vector<Point>& s);

struct SplitResult {
  std::vector<Nat> c;
  std::vector<Nat> d;
};

/// x goes to C when h^{-1}(s_n) >= g^{-1}(s_0, ..., s_{n-1}), otherwise to D,
/// where s are the cells of x at levels 0..n.
SplitResult split_small(Family f, const std::vector<Nat>& prefix, std::size_t n,
                        const TupleIndex& h_inv = default_tuple_index,
                        const StackIndex& g_inv = default_stack_index);

}  // namespace idealforge
