#include "idealforge/oracles/crosscheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "idealforge/embed.hpp"
#include "idealforge/errors.hpp"
#include "idealforge/oracles/brute.hpp"
#include "idealforge/quasisys.hpp"
#include "idealforge/random.hpp"

namespace idealforge::oracle {

namespace {

constexpr std::size_t kKeptFailures = 8;

std::string show(const Point& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) out += (k ? "," : "") + std::to_string(p[k]);
  return out + ")";
}

class Tally {
 public:
  explicit Tally(SuiteReport& r) : r_(r) {}
  void expect(bool ok, const std::function<std::string()>& what) {
    ++r_.checks;
    if (ok) return;
    ++r_.mismatches;
    if (r_.failures.size() < kKeptFailures) r_.failures.push_back("trial " + std::to_string(trial) + ": " + what());
  }
  std::size_t trial = 0;

 private:
  SuiteReport& r_;
};

std::set<Point> to_set(const std::vector<Point>& v) { return {v.begin(), v.end()}; }

std::set<Point> core_members(const SymbolicSet& s, Nat bound) { return to_set(enumerate(s, bound)); }

template <class Op>
std::set<Point> merge(const std::set<Point>& a, const std::set<Point>& b, Op op) {
  std::set<Point> out;
  op(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// ---- symcore-enum

void symcore_enum(Rng& rng, Tally& t) {
  constexpr Nat bound = 12;
  const std::size_t n = 1 + rng.below(3);
  const SymbolicSet s = random_symbolic_set(rng, n);
  const SymbolicSet u = random_symbolic_set(rng, n);
  const auto ms = members(s, bound);
  const auto mu = members(u, bound);
  const auto all = to_set(grid(n, bound));

  auto same = [&](const char* what, const SymbolicSet& got, const std::set<Point>& want) {
    t.expect(core_members(got, bound) == want, [&] { return std::string(what) + " disagrees with enumeration"; });
  };
  same("enumerate", s, ms);
  same("union", unite(s, u), merge(ms, mu, [](auto... a) { return std::set_union(a...); }));
  same("intersection", intersect(s, u), merge(ms, mu, [](auto... a) { return std::set_intersection(a...); }));
  same("difference", difference(s, u), merge(ms, mu, [](auto... a) { return std::set_difference(a...); }));
  same("complement", complement(s), merge(all, ms, [](auto... a) { return std::set_difference(a...); }));

  const bool inc = std::includes(mu.begin(), mu.end(), ms.begin(), ms.end());
  t.expect(subset(s, u) == inc, [] { return std::string("subset"); });
  t.expect(is_empty(s) == ms.empty(), [] { return std::string("emptiness"); });
  t.expect(same_set(s, u) == (ms == mu), [] { return std::string("equality"); });
  const auto least = least_element(s);
  t.expect(least.has_value() != ms.empty() && (!least || *least == *ms.begin()),
           [] { return std::string("least element"); });

  if (n >= 2) {
    for (Nat v : {Nat{0}, Nat{1}, fresh_value(s)}) {
      t.expect(core_members(section_first(s, v), bound) == oracle::section_first(s, v, bound),
               [&] { return "section at " + std::to_string(v); });
    }
    for (std::size_t i = 1; i < n; ++i) {
      t.expect(core_members(project_last(s, i), bound) == oracle::project_last(s, i, bound),
               [&] { return "last-" + std::to_string(i) + " projection"; });
      t.expect(core_members(project_first(s, i), bound) == oracle::project_first(s, i, bound),
               [&] { return "first-" + std::to_string(i) + " projection"; });
    }
  }
  t.expect(core_members(lift_last(s, n + 1), bound) == oracle::lift_last(s, n + 1, bound),
           [] { return std::string("lift along the last coordinates"); });
  t.expect(core_members(lift_first(s, n + 1), bound) == oracle::lift_first(s, n + 1, bound),
           [] { return std::string("lift along the first coordinates"); });
}

// ---- fin-classifier

void fin_classifier(Rng& rng, Tally& t) {
  const std::size_t n = 1 + rng.below(4);
  SymbolicSet s;
  switch (rng.below(3)) {
    case 0: s = random_symbolic_set(rng, n); break;
    case 1: s = random_small_set(rng, n); break;
    default: s = complement(random_small_set(rng, n)); break;
  }
  const bool got = fin_member(s, n);
  t.expect(got == fin_generic_point(s), [&] { return "Fin^" + std::to_string(n) + " verdict"; });
  t.expect(fin_evidence(s).member == got, [] { return std::string("evidence disagrees with verdict"); });
  if (n == 2) t.expect(got == fin2_sections(s), [] { return std::string("Fin^2 section count"); });
}

// ---- finomega-lift

Nat sum_fresh(const SumSymbolicSet& m) {
  Nat v = fresh_value(m.pattern());
  for (const auto& [j, s] : m.exceptional()) v = std::max(v, fresh_value(s));
  return v;
}

/// Largest summand bound keeping the enumeration under ~2e5 points per summand.
std::size_t affordable_summands(std::size_t from, Nat bound) {
  std::size_t j = from;
  double points = 1;
  for (std::size_t k = 0; k < from; ++k) points *= static_cast<double>(bound);
  while (j < from + 3 && points * static_cast<double>(bound) <= 2e5) {
    points *= static_cast<double>(bound);
    ++j;
  }
  return j + 1;
}

void finomega_lift(Rng& rng, Tally& t) {
  const bool planted = t.trial % 2 == 0;
  const SumSymbolicSet m = planted ? random_finomega_member(rng) : random_sum_set(rng);
  const auto cert = finomega_member(m);
  if (planted) t.expect(cert.has_value(), [] { return std::string("planted member refused"); });
  if (!cert) return;

  const Nat bound = std::max(sum_fresh(m), fresh_value(cert->filter_set)) + 1;
  const std::size_t upto = affordable_summands(cert->index, bound);
  t.expect(validate_finomega_certificate(m, *cert), [] { return std::string("certificate does not re-validate"); });
  t.expect(limit_certificate_holds(m, *cert, upto, bound), [] { return std::string("oracle rejects certificate"); });

  const LimitCertificate up = lift_certificate(*cert);
  t.expect(up.index == cert->index + 1 && validate_finomega_certificate(m, up),
           [] { return std::string("lifted certificate does not re-validate"); });
  t.expect(limit_certificate_holds(m, up, affordable_summands(up.index, bound), bound),
           [] { return std::string("oracle rejects lifted certificate"); });

  t.expect(finpow_omega_member(m), [] { return std::string("Fin_omega member outside Fin^omega"); });
  const std::size_t horizon = m.threshold() + m.head_width() + m.tail_width() + 3;
  for (std::size_t j : large_summands(m, horizon)) {
    t.expect(j < m.threshold(), [&] { return "template summand " + std::to_string(j) + " is not small"; });
  }
}

// ---- partition-independence

void partition_independence(Rng& rng, Tally& t) {
  const Family f = t.trial % 2 == 0 ? Family::A : Family::B;
  CellConstraints c;
  const std::size_t levels = 1 + rng.below(4);
  for (std::size_t k = 0; k < levels; ++k) {
    const std::size_t n = rng.below(4);
    Point s(n + 1);
    for (auto& v : s) v = rng.below(8);
    c.cells[n] = s;
  }
  const auto out = enumerate_intersection(f, c, 50);
  t.expect(out.size() == 50, [] { return std::string("fewer than 50 elements"); });
  t.expect(std::adjacent_find(out.begin(), out.end(), std::greater_equal<>()) == out.end(),
           [] { return std::string("output not strictly ascending"); });
  for (Nat m : out) t.expect(meets(f, m, c), [&] { return std::to_string(m) + " is outside the cells"; });

  const Nat window = std::min<Nat>(4096, out.empty() ? 4096 : out.back() + 1);
  std::vector<Nat> head;
  std::copy_if(out.begin(), out.end(), std::back_inserter(head), [&](Nat m) { return m < window; });
  t.expect(head == filter_intersection(f, c, window), [] { return std::string("constructor and filter differ"); });

  for (int k = 0; k < 50; ++k) {
    const Nat m = rng.below(10000);
    t.expect(encode(decode(m)) == m && decode(m) == decode_stack(m),
             [&] { return "code " + std::to_string(m) + " does not round-trip"; });
    for (std::size_t n = 0; n <= 4; ++n) {
      t.expect(cell_of(f, m, n) == cell(f, m, n), [&] { return "cell of " + std::to_string(m); });
    }
  }
}

// ---- finprime-hierarchy

Point random_tuple(Rng& rng, std::size_t arity, Nat bound) {
  Point p(arity);
  for (auto& v : p) v = rng.below(bound);
  return p;
}

void finprime_hierarchy(Rng& rng, Tally& t) {
  const Family f = t.trial % 2 == 0 ? Family::A : Family::B;
  const CertifiedSet a = random_certified_set(rng, f, rng.below(3));
  const std::size_t top = a.max_level();

  std::vector<bool> in;
  for (std::size_t n = 0; n <= top + 2; ++n) in.push_back(jn_member(a, n));
  for (std::size_t n = 0; n + 1 < in.size(); ++n) {
    t.expect(!in[n] || in[n + 1], [&] { return "J_" + std::to_string(n) + " not inside J_" + std::to_string(n + 1); });
  }
  for (std::size_t n = top; n < in.size(); ++n) {
    t.expect(in[n] == in[top], [&] { return "hierarchy not stable at " + std::to_string(n); });
  }
  const auto cert = finprime_member(a);
  t.expect(cert.has_value() == in[top], [] { return std::string("certificate disagrees with J_n"); });

  for (int k = 0; k < 3; ++k) {
    std::vector<Point> s;
    for (std::size_t l = 0; l <= top; ++l) s.push_back(random_tuple(rng, l + 1, 6));
    t.expect(evaluate(phi(a, top), s) == meets_finitely(a, s), [] { return std::string("phi disagrees with enumeration"); });
  }
  if (!cert) return;

  t.expect(validate_rectangle(phi(a, cert->n), cert->rectangle), [] { return std::string("rectangle rejected"); });
  Nat tuple_bound = 3;
  for (const auto& b : cert->rectangle) {
    t.expect(fin_generic_point(b), [] { return std::string("rectangle side not small"); });
    tuple_bound = std::max(tuple_bound, fresh_value(b) + 3);
  }
  for (int k = 0; k < 4; ++k) {
    std::vector<Point> s;
    for (std::size_t l = 0; l <= cert->n; ++l) {
      Point p = random_tuple(rng, l + 1, tuple_bound);
      for (int tries = 0; tries < 64 && member(cert->rectangle[l], p); ++tries) p = random_tuple(rng, l + 1, tuple_bound);
      s.push_back(p);
    }
    bool outside = true;
    for (std::size_t l = 0; l < s.size(); ++l) outside = outside && !member(cert->rectangle[l], s[l]);
    if (outside) t.expect(meets_finitely(a, s), [] { return std::string("tuple outside rectangle meets A infinitely"); });
  }

  const Decomposition d = decomposition_certificate(a);
  t.expect(validate_decomposition(a, d, 10000), [] { return std::string("decomposition rejected"); });
  for (const auto& g : d.generators) t.expect(fin_generic_point(g.cells), [] { return std::string("generator not small"); });
  std::optional<Nat> escaped;
  for (Nat m = 0; m < 10000 && !escaped; ++m) {
    if (!certified_member(a, m) || d.remainder.contains(m)) continue;
    const bool covered = std::any_of(d.generators.begin(), d.generators.end(),
                                     [&](const Generator& g) { return member(g.cells, cell(f, m, g.level)); });
    if (!covered) escaped = m;
  }
  t.expect(!escaped, [&] { return std::to_string(*escaped) + " escapes the decomposition"; });
}

// ---- exindlim-refuter

bool in_union_of_complements(const SumPoint& p) { return p.summand == 1 || p.x.at(0) == 0; }

void exindlim_refuter_suite(Rng& rng, Tally& t) {
  static const QuasiHomSystem sys = builtin_system("exindlim");
  static const SumSymbolicSet target = sum_unite(sum_complement(exindlim_a()), sum_complement(exindlim_b()));
  for (std::size_t i = 1; i <= 6; ++i) {
    const SymbolicSet p = complement(random_small_set(rng, i));
    const SumPoint w = exindlim_refuter(i, p);
    const bool in_domain = i > 1 || w.summand == 1 || w.x.at(0) != 0;
    const bool in_bar = w.summand >= i && w.x.size() == w.summand &&
                        member(p, Point(w.x.end() - static_cast<std::ptrdiff_t>(i), w.x.end()));
    t.expect(in_domain && in_bar && in_union_of_complements(w),
             [&] { return "refuter point for i=" + std::to_string(i) + " misses P-bar or the union"; });
    t.expect(!validate_limit_certificate(sys, target, LimitCertificate{i, p}),
             [&] { return "candidate accepted at i=" + std::to_string(i); });
  }
}

// ---- katetov

void katetov_suite(Rng& rng, Tally& t) {
  const std::size_t n = 1 + t.trial % 4;
  const SymbolicSet a = random_small_set(rng, n + 1);
  const KatetovReport r = katetov_quasihom_check(n, {a}, std::nullopt);
  t.expect(r.ok(), [&] { return "reduction check failed at n=" + std::to_string(n); });

  const auto pre = std::get<SumSymbolicSet>(map_preimage(katetov_map(n, std::nullopt), a));
  const Nat bound = fresh_value(a) + 1;
  std::optional<Point> wrong;
  for (std::size_t j = 1; j <= n + 2 && !wrong; ++j) {
    for (const auto& x : grid(j, bound)) {
      const bool want = j > n && member(a, Point(x.end() - static_cast<std::ptrdiff_t>(n + 1), x.end()));
      if (sum_member(pre, SumPoint{j, x}) != want) {
        wrong = x;
        break;
      }
    }
  }
  t.expect(!wrong, [&] { return "preimage wrong at " + show(*wrong); });
  t.expect(limit_certificate_holds(pre, LimitCertificate{n + 1, complement(a)}, n + 3, bound),
           [] { return std::string("oracle rejects (n+1, complement)"); });
}

// ---- embed-mc

void embed_suite(std::size_t count, Rng& rng, Tally& t) {
  const EmbeddingPrefix f = build_mc_embedding(Family::A, Family::B, count);
  std::vector<SampledGenerator> gens;
  for (int k = 0; k < 50; ++k) {
    const std::size_t level = rng.below(3);
    gens.push_back({level, random_small_set(rng, level + 1), random_finite_set(rng, {3, 40, 6})});
  }
  const EmbeddingReport r = verify_embedding_prefix(f, gens, 3);
  t.expect(r.ok(), [&] { return r.messages.empty() ? std::string("violations") : r.messages.front(); });
  for (Nat i = 0; i < f.values.size(); ++i) {
    t.expect(meets(Family::A, f.values[i], embedding_constraints(Family::B, i)),
             [&] { return "f(" + std::to_string(i) + ") outside its cells"; });
  }
  // Swap f(0) with the last value that lies outside f(0)'s prescribed cells,
  // so the corruption is visible on the prefix.
  const CellConstraints first = embedding_constraints(Family::B, 0);
  for (std::size_t j = f.values.size(); j-- > 1;) {
    if (meets(Family::A, f.values[j], first)) continue;
    EmbeddingPrefix bad = f;
    std::swap(bad.values[0], bad.values[j]);
    t.expect(!verify_embedding_prefix(bad, gens, 3).ok(), [] { return std::string("corrupted prefix not flagged"); });
    break;
  }
}

using Trial = std::function<void(Rng&, Tally&)>;

const std::map<std::string, Trial>& suites() {
  static const std::map<std::string, Trial> table = {
      {"symcore-enum", symcore_enum},
      {"fin-classifier", fin_classifier},
      {"finomega-lift", finomega_lift},
      {"partition-independence", partition_independence},
      {"finprime-hierarchy", finprime_hierarchy},
      {"exindlim-refuter", exindlim_refuter_suite},
      {"katetov", katetov_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    out.emplace_back("embed-mc");
    std::sort(out.begin(), out.end());
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
  SuiteReport r;
  r.suite = name;
  r.seed = seed;
  r.trials = trials;
  Tally tally(r);
  const Rng root(seed);
  if (name == "embed-mc") {
    // One trial builds one prefix; `trials` is its length.
    Rng rng = root.split(0);
    if (trials > 0) embed_suite(trials, rng, tally);
    return r;
  }
  auto it = suites().find(name);
  if (it == suites().end()) throw PreconditionError("unknown oracle suite '" + name + "'");
  for (std::size_t k = 0; k < trials; ++k) {
    tally.trial = k;
    Rng rng = root.split(k);
    it->second(rng, tally);
  }
  return r;
}

}  // namespace idealforge::oracle
