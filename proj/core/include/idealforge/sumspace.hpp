#pragma once

// Subsets of the disjoint sum  Sum_{j>=1} omega^j  and the exact membership
// procedures for the inductive-limit ideal Fin_omega and Katetov's Fin^omega.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "idealforge/symcore.hpp"

namespace idealforge {

/// A point (j, x) of the sum space, x in omega^j.
struct SumPoint {
  std::size_t summand = 1;
  Point x;
  friend bool operator==(const SumPoint&, const SumPoint&) = default;
  friend auto operator<=>(const SumPoint&, const SumPoint&) = default;
};

/// A template conjunct: `head` constrains the first h coordinates and `tail`
/// the last t coordinates of every summand past the threshold.
struct TemplateConjunct {
  SymbolicSet head;
  SymbolicSet tail;
};

/// Subset of Sum_{j>=1} omega^j.
///
/// Summands below the threshold j0 are stored explicitly (absent = empty).
/// Every summand j >= j0 is the instantiation of one `pattern` over
/// head_width + tail_width virtual coordinates: pattern coordinate k < H maps
/// to summand coordinate k and the remaining ones map to the last T summand
/// coordinates; the j - H - T coordinates in between are unconstrained. A
/// pattern conjunct is exactly a (head, tail) template pair, and since
/// instantiation is a preimage under a surjection it commutes with every
/// boolean operation.
class SumSymbolicSet {
 public:
  SumSymbolicSet();

  static SumSymbolicSet empty();
  static SumSymbolicSet full();
  /// All summands j >= from equal the instantiation of head x tail (other summands empty).
  static SumSymbolicSet from_template(const SymbolicSet& head, const SymbolicSet& tail, std::size_t from);
  /// Only summand j is non-empty and equals `s`.
  static SumSymbolicSet single_summand(std::size_t j, const SymbolicSet& s);
  /// P-bar: Sum_{j>=i} pi_{i,j}^{-1}[P] for P at level i.
  static SumSymbolicSet overline(const SymbolicSet& p);
  /// General constructor; validates levels and the threshold invariant.
  static SumSymbolicSet make(std::map<std::size_t, SymbolicSet> exceptional, std::size_t head_width,
                             std::size_t tail_width, SymbolicSet pattern, std::size_t threshold);

  [[nodiscard]] std::size_t threshold() const { return threshold_; }
  [[nodiscard]] std::size_t head_width() const { return head_width_; }
  [[nodiscard]] std::size_t tail_width() const { return tail_width_; }
  [[nodiscard]] const SymbolicSet& pattern() const { return pattern_; }
  [[nodiscard]] const std::map<std::size_t, SymbolicSet>& exceptional() const { return exceptional_; }
  [[nodiscard]] std::vector<TemplateConjunct> template_conjuncts() const;

  /// Same set, re-expressed with wider head/tail blocks and a later threshold.
  [[nodiscard]] SumSymbolicSet realigned(std::size_t head_width, std::size_t tail_width,
                                         std::size_t threshold) const;
  /// Same set with summand j replaced by `s`.
  [[nodiscard]] SumSymbolicSet with_summand(std::size_t j, const SymbolicSet& s) const;
  /// Same set with every summand below `from` emptied.
  [[nodiscard]] SumSymbolicSet from_summand(std::size_t from) const;

  friend bool operator==(const SumSymbolicSet&, const SumSymbolicSet&) = default;

 private:
  std::size_t threshold_ = 1;
  std::map<std::size_t, SymbolicSet> exceptional_;
  std::size_t head_width_ = 0;
  std::size_t tail_width_ = 0;
  SymbolicSet pattern_;
};

/// Instantiate the pattern at summand level j >= head_width + tail_width.
SymbolicSet instantiate_pattern(const SumSymbolicSet& m, std::size_t j);

SymbolicSet summand_slice(const SumSymbolicSet& m, std::size_t j);
bool sum_contains(const SumSymbolicSet& m, const SumPoint& p);
SumSymbolicSet sum_combine(SetOp op, const SumSymbolicSet& m, const SumSymbolicSet* n = nullptr);
SumSymbolicSet sum_unite(const SumSymbolicSet& m, const SumSymbolicSet& n);
SumSymbolicSet sum_intersect(const SumSymbolicSet& m, const SumSymbolicSet& n);
SumSymbolicSet sum_difference(const SumSymbolicSet& m, const SumSymbolicSet& n);
SumSymbolicSet sum_complement(const SumSymbolicSet& m);
bool sum_is_empty(const SumSymbolicSet& m);
bool sum_subset(const SumSymbolicSet& m, const SumSymbolicSet& n);
bool sum_same_set(const SumSymbolicSet& m, const SumSymbolicSet& n);
/// Least non-empty summand and its lexicographically least point.
std::optional<SumPoint> sum_least_element(const SumSymbolicSet& m);
/// Members (j, x) with j < summand_bound and every coordinate < coord_bound.
std::vector<SumPoint> sum_enumerate(const SumSymbolicSet& m, std::size_t summand_bound, Nat coord_bound);

/// Image of the pattern's summands under the projection onto the last i
/// coordinates, for any summand level j >= max(j0, H + i).
SymbolicSet stable_tail_image(const SumSymbolicSet& m, std::size_t i);

/// U_i = union over j >= i of pi_{i,j}[M_j].
SymbolicSet tail_union_projection(const SumSymbolicSet& m, std::size_t i);

/// Witness that M avoids P-bar for some P in the dual filter of Fin^i.
struct LimitCertificate {
  std::size_t index = 1;
  SymbolicSet filter_set;
};

/// Largest index the Fin_omega search needs to try for `m`.
std::size_t finomega_search_bound(const SumSymbolicSet& m);

/// Fin_omega membership with the least-index certificate, or std::nullopt.
std::optional<LimitCertificate> finomega_member(const SumSymbolicSet& m);

/// Independent re-validation of a Fin_omega certificate: the filter set is
/// co-small and every summand of M misses the lifted filter set.
bool validate_finomega_certificate(const SumSymbolicSet& m, const LimitCertificate& cert);

/// (i, P) -> (i + 1, pi_{i,i+1}^{-1}[P]).
LimitCertificate lift_certificate(const LimitCertificate& cert);

struct FinPowOmegaReport {
  bool member = false;
  /// Exceptional summands that are not Fin^j-small (finitely many, never decisive).
  std::vector<std::size_t> large_exceptional;
  /// Whether the template summands are small; they agree for every j >= j0.
  bool template_small = true;
};

/// Katetov's Fin^omega: {j : M_j not in Fin^j} must be finite.
FinPowOmegaReport finpow_omega_report(const SumSymbolicSet& m);
bool finpow_omega_member(const SumSymbolicSet& m);

}  // namespace idealforge
