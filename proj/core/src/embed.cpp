#include "idealforge/embed.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "idealforge/errors.hpp"

namespace idealforge {

struct CopyWitness::Memo {
  std::mutex mu;
  std::map<Point, std::vector<Nat>> columns;
};

CopyWitness::CopyWitness(Family target, std::size_t n)
    : target_(target), n_(n), memo_(std::make_shared<Memo>()) {}

Nat CopyWitness::apply(const Point& x) const {
  if (x.size() != n_ + 2) throw ArityError("sigma at level " + std::to_string(n_) + " takes points of omega^" + std::to_string(n_ + 2));
  const Point s(x.begin(), x.end() - 1);
  const auto k = static_cast<std::size_t>(x.back());
  std::lock_guard lock(memo_->mu);
  auto& column = memo_->columns[s];
  if (column.size() <= k) {
    column = enumerate_intersection(target_, {{n_, s}}, std::max(k + 1, 2 * column.size()));
  }
  return column[k];
}

Point CopyWitness::inverse(Nat m) const {
  Point s = cell_of(target_, m, n_);
  const auto below = intersection_below(target_, CellConstraints{{{n_, s}}, std::nullopt}, m);
  s.push_back(below.size() - 1);
  return s;
}

CopyWitness sigma_bijection(Family f, std::size_t n) { return CopyWitness(f, n); }

Point g_index(const CopyWitness& w, Nat i, std::size_t n) {
  if (w.level() != n) throw PreconditionError("copy witness has level " + std::to_string(w.level()) + ", asked for " + std::to_string(n));
  return cell_of(w.target(), i, n);
}

CellConstraints embedding_constraints(Family target, Nat i) {
  const Stack st = decode(permute(target, i));
  const std::size_t len = st.size();
  const std::size_t c = len == 0 ? 0 : static_cast<std::size_t>(st[0][0]);
  CellConstraints cons;
  for (std::size_t k = 0; k < len && k <= c; ++k) cons.cells.emplace(k, st[k]);
  if (c >= len) cons.zero_span = std::make_pair(len, c);
  return cons;
}

EmbeddingPrefix build_mc_embedding(Family source, Family target, std::size_t count) {
  if (count == 0) throw PreconditionError("embedding prefix length must be positive");
  EmbeddingPrefix out;
  out.source = source;
  out.target = target;
  std::unordered_set<Nat> used;
  for (Nat i = 0; i < count; ++i) {
    const CellConstraints cons = embedding_constraints(target, i);
    // Deep constraints admit only a few 64-bit codes, so search by bound
    // rather than asking for a fixed number of elements.
    std::optional<Nat> pick;
    for (Nat bound = 64; !pick; bound *= 2) {
      for (Nat x : intersection_below(source, cons, bound)) {
        if (!used.contains(x)) {
          pick = x;
          break;
        }
      }
      if (!pick && bound >= (Nat{1} << 62)) throw ResourceError("no unused admissible element below 2^62");
    }
    used.insert(*pick);
    out.values.push_back(*pick);
  }
  return out;
}

namespace {

constexpr std::size_t kMaxMessages = 10;

void note(EmbeddingReport& r, std::string msg) {
  if (r.messages.size() < kMaxMessages) r.messages.push_back(std::move(msg));
}

}  // namespace

EmbeddingReport verify_embedding_prefix(const EmbeddingPrefix& f, const std::vector<SampledGenerator>& generators,
                                        std::size_t observation_levels) {
  EmbeddingReport r;
  const auto& v = f.values;
  r.checked = v.size();

  std::map<Nat, Nat> first_seen;
  for (Nat i = 0; i < v.size(); ++i) {
    auto [it, fresh] = first_seen.emplace(v[i], i);
    if (!fresh) {
      ++r.injectivity;
      note(r, "f(" + std::to_string(it->second) + ") = f(" + std::to_string(i) + ") = " + std::to_string(v[i]));
    }
  }

  std::vector<std::size_t> carried(v.size());
  for (Nat i = 0; i < v.size(); ++i) {
    carried[i] = static_cast<std::size_t>(cell_of(f.target, i, 0)[0]);
    if (!satisfies(f.source, v[i], embedding_constraints(f.target, i))) {
      ++r.prescribed;
      note(r, "f(" + std::to_string(i) + ") = " + std::to_string(v[i]) + " misses its prescribed cells");
    }
    for (std::size_t n = 1; n <= observation_levels; ++n) {
      if (carried[i] >= n && cell_of(f.source, v[i], n) != cell_of(f.target, i, n)) {
        ++r.observation;
        note(r, "f(" + std::to_string(i) + ") not in X_{g_i(" + std::to_string(n) + ")}");
      }
    }
  }

  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& g = generators[gi];
    const std::size_t n = g.level;
    if (g.cells.level() != n + 1) throw LevelError("generator cells must be a level-(n+1) set");
    std::map<Point, std::size_t> column_load;
    for (Nat i = 0; i < v.size(); ++i) {
      const bool low = carried[i] < n;  // i in U_{j<n} h_0[{j} x omega]
      const Point target_cell = cell_of(f.target, i, n);
      if (contains(g.cells, cell_of(f.source, v[i], n)) && !low && !contains(g.cells, target_cell)) {
        ++r.containment;
        note(r, "generator " + std::to_string(gi) + ": f(" + std::to_string(i) + ") in A'' outside h_n[B x omega]");
      }
      if (g.finite.contains(v[i]) && !low) ++column_load[target_cell];
    }
    for (const auto& [s, load] : column_load) {
      const auto cap = static_cast<std::size_t>(std::count_if(g.finite.begin(), g.finite.end(), [&](Nat y) {
        return cell_of(f.source, y, n) == s;
      }));
      if (load > cap) {
        ++r.containment;
        note(r, "generator " + std::to_string(gi) + ": column overloaded in C");
      }
    }
  }
  return r;
}

MapExpr katetov_map(std::size_t n, std::optional<std::size_t> broken_level) {
  if (n == 0) throw LevelError("katetov map needs n >= 1");
  std::map<std::size_t, MapExpr> overrides;
  if (broken_level) {
    if (*broken_level < n + 1) throw LevelError("broken summand must be at level >= n + 1");
    overrides.emplace(*broken_level, MapExpr::first_proj(*broken_level, n + 1));
  }
  return MapExpr::sum_of_last_proj(n + 1, std::move(overrides));
}

KatetovReport katetov_quasihom_check(std::size_t n, const std::vector<SymbolicSet>& samples,
                                     std::optional<std::size_t> broken_level) {
  const MapExpr map = katetov_map(n, broken_level);
  KatetovReport r;
  r.n = n;

  std::map<std::size_t, SymbolicSet> low;
  for (std::size_t j = 1; j <= n; ++j) low.emplace(j, SymbolicSet::full(j));
  const SumSymbolicSet outside = SumSymbolicSet::make(std::move(low), 0, 0, SymbolicSet::empty(0), n + 1);
  r.domain_certificate = finomega_member(outside);
  r.domain_complement_small = r.domain_certificate && r.domain_certificate->index == n + 1 &&
                              r.domain_certificate->filter_set.is_full() &&
                              validate_finomega_certificate(outside, *r.domain_certificate);

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const SymbolicSet& a = samples[k];
    if (a.level() != n + 1 || !fin_member(a, n + 1)) {
      throw PreconditionError("katetov samples must be Fin^{n+1}-small sets at level n + 1");
    }
    ++r.samples;
    const auto pre = std::get<SumSymbolicSet>(map_preimage(map, a));
    if (auto cert = finomega_member(pre); cert && validate_finomega_certificate(pre, *cert)) ++r.certified;
    if (validate_finomega_certificate(pre, LimitCertificate{n + 1, complement(a)})) {
      ++r.expected;
    } else {
      r.failed_samples.push_back(k);
    }
  }
  return r;
}

}  // namespace idealforge
