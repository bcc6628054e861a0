#pragma once

// Copy witnesses for the generators of Fin'_omega, the greedy embedding of
// Fin'_omega over one partition family into Fin'_omega over another, and the
// Katetov reductions of Fin^{n+1} to Fin_omega.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealforge/finprime.hpp"
#include "idealforge/mapexpr.hpp"
#include "idealforge/partition.hpp"
#include "idealforge/sumspace.hpp"

namespace idealforge {

/// sigma : omega^{n+2} -> omega, sigma(s, k) = k-th element of the level-n
/// cell X_s. Cell prefixes are memoized; copies share the memo.
class CopyWitness {
 public:
  CopyWitness(Family target, std::size_t n);

  [[nodiscard]] Family target() const { return target_; }
  [[nodiscard]] std::size_t level() const { return n_; }
  [[nodiscard]] Nat apply(const Point& x) const;
  /// (s, k) with apply((s, k)) = m.
  [[nodiscard]] Point inverse(Nat m) const;

 private:
  struct Memo;
  Family target_;
  std::size_t n_;
  std::shared_ptr<Memo> memo_;
};

CopyWitness sigma_bijection(Family f, std::size_t n);

/// The s with i in sigma[{s} x omega]; requires w.level() == n.
Point g_index(const CopyWitness& w, Nat i, std::size_t n);

struct EmbeddingPrefix {
  std::vector<Nat> values;
  Family source = Family::A;
  Family target = Family::B;
};

/// Cell constraints for f(i): X_{g_i(0)} n ... n X_{g_i(c)} with c the entry
/// of g_i(0). Levels past the stack of i carry zero tuples and are passed as
/// a zero span.
CellConstraints embedding_constraints(Family target, Nat i);

/// f(i) = least element of the prescribed intersection in the source family
/// not used by f(0..i-1).
EmbeddingPrefix build_mc_embedding(Family source, Family target, std::size_t count);

/// A generator of Fin'_omega at level n: a finite set together with the
/// cells X_s, s in a small B.
struct SampledGenerator {
  std::size_t level = 0;
  SymbolicSet cells;
  FiniteSet finite;
};

struct EmbeddingReport {
  std::size_t checked = 0;
  std::size_t injectivity = 0;
  std::size_t prescribed = 0;
  std::size_t observation = 0;
  std::size_t containment = 0;
  std::vector<std::string> messages;  // first few violations
  [[nodiscard]] bool ok() const { return injectivity + prescribed + observation + containment == 0; }
};

/// Pointwise checks of the embedding on its prefix: injectivity, the
/// prescribed intersections, f(i) in X_{g_i(n)} whenever g_i(0) >= n (for
/// n <= observation_levels), and for each generator A' u A'' that
/// f^{-1}[A''] lies in U_{j<n} h_0[{j} x omega] u h_n[B x omega] while the
/// rest C meets each column h_n[{s} x omega] in at most |A' n X_s| points.
EmbeddingReport verify_embedding_prefix(const EmbeddingPrefix& f, const std::vector<SampledGenerator>& generators,
                                        std::size_t observation_levels = 3);

struct KatetovReport {
  std::size_t n = 0;
  bool domain_complement_small = false;
  std::optional<LimitCertificate> domain_certificate;
  std::size_t samples = 0;
  std::size_t certified = 0;  // preimages with a Fin_omega certificate
  std::size_t expected = 0;   // preimages where (n+1, complement(A)) validates
  std::vector<std::size_t> failed_samples;
  [[nodiscard]] bool ok() const {
    return domain_complement_small && certified == samples && expected == samples;
  }
};

/// Sum_{j>=n+1} pi_{n+1,j}, optionally with summand `broken_level` replaced
/// by the projection onto the first n+1 coordinates.
MapExpr katetov_map(std::size_t n, std::optional<std::size_t> broken_level = std::nullopt);

/// Checks that the domain complement Sum_{j<=n} omega^j is Fin_omega-small and
/// that every small A in `samples` (level n+1) pulls back to a Fin_omega set
/// certified by (n+1, complement(A)).
KatetovReport katetov_quasihom_check(std::size_t n, const std::vector<SymbolicSet>& samples,
                                     std::optional<std::size_t> broken_level = std::nullopt);

}  // namespace idealforge
