// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "idealforge/cli/app.hpp"
#include "idealforge/embed.hpp"
#include "idealforge/oracles/brute.hpp"
#include "idealforge/oracles/crosscheck.hpp"
#include "idealforge/quasisys.hpp"
#include "idealforge/random.hpp"

namespace {

using namespace idealforge;

// Every criterion is exact: the tolerated number of mismatches is zero.
constexpr std::size_t kAllowedMismatches = 0;
constexpr double kRuntimeBudgetSeconds = 90.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string note;

  void expect(bool ok, const std::string& what = {}) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) note = what;
  }
  void absorb(const oracle::SuiteReport& r) {
    checks += r.checks;
    failures += r.mismatches;
    if (r.mismatches > 0 && note.empty()) note = r.suite + ": " + (r.failures.empty() ? "mismatch" : r.failures.front());
  }
};

SymbolicSet f_set(std::size_t i) { return SymbolicSet::atom(i, 0, Predicate::not_in({0})); }

Outcome symbolic_oracle_equivalence() {
  Outcome o;
  o.absorb(oracle::run_suite("symcore-enum", 500, kSeed));
  return o;
}

Outcome fin_decision() {
  Outcome o;
  Rng rng(kSeed);
  for (int k = 0; k < 300; ++k) {
    Rng r = rng.split(k);
    const std::size_t n = 1 + r.below(4);
    const SymbolicSet s = r.chance(1, 2) ? random_small_set(r, n) : random_symbolic_set(r, n);
    const SymbolicSet t = r.chance(1, 2) ? random_small_set(r, n) : random_symbolic_set(r, n);
    const bool ms = fin_member(s, n);
    const bool mt = fin_member(t, n);
    o.expect(!(ms && mt) || fin_member(unite(s, t), n), "union closure");
    o.expect(!ms || fin_member(intersect(s, t), n), "subset closure");
    o.expect(!(ms && fin_member(complement(s), n)), "duality");
    o.expect(!fin_member(SymbolicSet::full(n), n), "properness");
  }
  for (int k = 0; k < 300; ++k) {
    Rng r = rng.split(1000 + k);
    const SymbolicSet s = k % 3 == 0 ? random_small_set(r, 2) : random_symbolic_set(r, 2);
    o.expect(fin_member(s, 2) == oracle::fin2_sections(s), "n=2 classifier");
  }
  for (std::size_t i = 1; i <= 4; ++i) {
    o.expect(fin_member(complement(f_set(i)), i), "{0} x omega^(i-1) small");
    o.expect(!fin_member(f_set(i), i), "F_i not small");
  }
  return o;
}

Outcome example_limit_system() {
  Outcome o;
  const QuasiHomSystem ex = builtin_system("exindlim");
  const SumSymbolicSet ac = sum_complement(exindlim_a());
  const SumSymbolicSet bc = sum_complement(exindlim_b());
  const SumSymbolicSet both = sum_unite(ac, bc);

  const auto ca = limit_member(ex, ac);
  o.expect(ca && ca->index == 1 && ca->filter_set.is_full() && validate_limit_certificate(ex, ac, *ca), "A^c certificate");
  const auto cb = limit_member(ex, bc);
  o.expect(cb && cb->index == 2 && cb->filter_set.is_full() && validate_limit_certificate(ex, bc, *cb), "B^c certificate");
  o.expect(!limit_member(ex, both).has_value(), "union refused");

  Rng rng(kSeed);
  for (std::size_t i = 1; i <= 6; ++i) {
    for (std::uint64_t s = 0; s < 200; ++s) {
      Rng r = rng.split(i).split(s);
      const SymbolicSet p = complement(random_small_set(r, i));
      const SumPoint x = exindlim_refuter(i, p);
      o.expect(sum_contains(both, x) && sum_contains(SumSymbolicSet::overline(p), x), "refuter point");
      o.expect(!validate_limit_certificate(ex, both, {i, p}), "candidate survived");
    }
  }

  o.expect(check_condition_C(builtin_system("standard")).pass, "standard condition (C)");
  const ConditionCResult c = check_condition_C(ex);
  o.expect(!c.pass && c.violation && c.violation->i == 1 && c.violation->j == 2 && c.violation->k == 3 &&
               c.violation->witness == Point{0, 1, 0},
           "exindlim violation");
  o.expect(check_condition_C(extend_infinity(builtin_system("standard"))).pass, "extended condition (C)");
  return o;
}

Outcome increasing_union() {
  Outcome o;
  const QuasiHomSystem sys = builtin_system("standard");
  Rng rng(kSeed);
  for (int k = 0; k < 200; ++k) {
    Rng r = rng.split(k);
    const SumSymbolicSet a = random_finomega_member(r);
    const SumSymbolicSet b = random_finomega_member(r);
    const auto ca = limit_member(sys, a);
    o.expect(ca.has_value(), "planted member refused");
    if (!ca) continue;
    o.expect(validate_limit_certificate(sys, a, *ca), "certificate");
    o.expect(validate_limit_certificate(sys, a, lift_limit_certificate(sys, *ca)), "lifted certificate");
    o.expect(limit_member(sys, sum_unite(a, b)).has_value(), "union closure");
    o.expect(limit_member(sys, sum_intersect(a, random_sum_set(r))).has_value(), "subset closure");
  }
  return o;
}

Outcome limit_inside_katetov() {
  Outcome o;
  Rng rng(kSeed);
  for (int k = 0; k < 200; ++k) {
    Rng r = rng.split(k);
    const SumSymbolicSet m = random_finomega_member(r);
    const auto cert = finomega_member(m);
    o.expect(cert && validate_finomega_certificate(m, *cert), "member certificate");
    o.expect(finpow_omega_member(m), "Fin^omega membership");
  }
  return o;
}

Outcome partition_family() {
  Outcome o;
  o.absorb(oracle::run_suite("partition-independence", 200, kSeed));
  for (Nat m = 0; m < 10000; ++m) {
    o.expect(encode(decode(m)) == m, "round trip");
    for (Family f : {Family::A, Family::B}) {
      for (std::size_t n = 0; n <= 4; ++n) o.expect(cell_of(f, m, n) == oracle::cell(f, m, n), "cell");
    }
  }
  Rng rng(kSeed);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = rng.below(5);
    Point s(n + 1);
    for (Nat& v : s) v = rng.below(8);
    const Family f = k % 2 ? Family::B : Family::A;
    const std::vector<Nat> xs = enumerate_intersection(f, {{n, s}}, 50);
    bool good = xs.size() == 50;
    for (Nat m : xs) good = good && oracle::cell(f, m, n) == s;
    o.expect(good, "infinite cell");
  }
  return o;
}

Outcome jn_hierarchy() {
  Outcome o;
  o.absorb(oracle::run_suite("finprime-hierarchy", 300, kSeed));
  return o;
}

Outcome embedding() {
  Outcome o;
  const EmbeddingPrefix f = build_mc_embedding(Family::A, Family::B, 2000);
  o.expect(f.values.size() == 2000, "prefix length");
  o.expect(std::set<Nat>(f.values.begin(), f.values.end()).size() == f.values.size(), "injectivity");
  for (Nat i = 0; i < f.values.size(); ++i) {
    o.expect(oracle::meets(Family::A, f.values[i], embedding_constraints(Family::B, i)), "prescribed cells");
    const Nat c = oracle::cell(Family::B, i, 0)[0];
    for (std::size_t n = 0; n <= 3; ++n) {
      if (c >= n) o.expect(oracle::cell(Family::A, f.values[i], n) == oracle::cell(Family::B, i, n), "observation");
    }
  }
  o.absorb(oracle::run_suite("embed-mc", 2000, kSeed));
  return o;
}

Outcome katetov() {
  Outcome o;
  Rng rng(kSeed);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<SymbolicSet> samples;
    for (int k = 0; k < 100; ++k) samples.push_back(random_small_set(rng, n + 1));
    const KatetovReport r = katetov_quasihom_check(n, samples);
    o.expect(r.ok() && r.expected == samples.size(), "katetov n=" + std::to_string(n));
    const KatetovReport broken = katetov_quasihom_check(n, samples, n + 2);
    o.expect(!broken.ok(), "broken map passed at n=" + std::to_string(n));
  }
  o.absorb(oracle::run_suite("katetov", 40, kSeed));
  return o;
}

Outcome cli_reproducibility() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "idealforge-acceptance";
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  const std::string f2 = write("f2.setx", "level 2: x0 notin {0}\n");
  const std::string small = write("small.setx", "level 3: x0 in {0} | x2 in {1,2}\n");
  const std::string sumx = write("m.sumx", "sum:\n  summand 2 = all\n  tail(head=level 0: all; last=level 3: x0 in {0}; from=3)\n");
  const std::string cfx = write("a.cfx", "certified family A:\n  finite {0,1,2}\n  bundle 0: x0 in {5}\n");
  const std::string big = write("big.cfx", "certified family A:\n  bundle 1: x0 notin {0}\n");

  const std::vector<std::vector<std::string>> commands{
      {"member", "--ideal", "fin^2", "--set", f2},
      {"member", "--ideal", "fin^3", "--set", small},
      {"member", "--ideal", "finomega", "--set", sumx},
      {"member", "--ideal", "finpow-omega", "--set", sumx},
      {"member", "--ideal", "finprime:A", "--set", cfx},
      {"member", "--ideal", "finprime:A", "--set", big},
      {"system", "--name", "standard", "--check", "coherence"},
      {"system", "--name", "exindlim", "--check", "condition-c"},
      {"system", "--name", "standard", "--check", "condition-c", "--extend-infinity"},
      {"system", "--name", "exindlim", "--check", "limit-member", "--set", sumx},
      {"demo", "exindlim", "--max-i", "6", "--samples", "200", "--seed", "7"},
      {"embed", "mc", "--source", "A", "--target", "B", "--count", "2000", "--verify", "--levels", "3"},
      {"oracle", "crosscheck", "--suite", "partition-independence", "--trials", "20", "--seed", "3"},
  };
  for (const auto& cmd : commands) {
    std::ostringstream first, second, err;
    const int c1 = cli::run(cmd, first, err);
    const int c2 = cli::run(cmd, second, err);
    const std::string label = cmd[0] + " " + cmd[1] + " " + cmd[2];
    o.expect(c1 == c2 && first.str() == second.str(), "non-reproducible: " + label);
    o.expect(c1 == cli::kPass || c1 == cli::kFail, "exit code " + std::to_string(c1) + ": " + label);
    try {
      const cli::CheckOutcome chk = cli::check_document(cli::from_json(cli::Json::parse(first.str())));
      o.expect(chk.valid, "check rejected " + label + ": " + chk.reason);
    } catch (const std::exception& e) {
      o.expect(false, label + ": " + e.what());
    }
  }
  fs::remove_all(dir);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "symbolic operations match brute-force enumeration", symbolic_oracle_equivalence},
      {2, "Fin^n decision: axioms, n=2 classifier, F_i instances", fin_decision},
      {3, "inductive limit that is not an ideal, condition (C)", example_limit_system},
      {4, "standard limit is an ideal and certificates lift", increasing_union},
      {5, "Fin_omega members are Fin^omega members", limit_inside_katetov},
      {6, "independent partition family and coding", partition_family},
      {7, "J_n hierarchy and Fin'_omega certificates", jn_hierarchy},
      {8, "greedy embedding prefix N=2000", embedding},
      {9, "Katetov reductions toward Fin_omega", katetov},
      {10, "CLI reproducibility and document checks", cli_reproducibility},
  };

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures = 1;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.failures <= kAllowedMismatches;
    failed += pass ? 0 : 1;
    std::printf("[%s] %2d %s: %zu checks, %zu failures (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, o.checks,
                o.failures, secs, o.note.empty() ? "" : " first: ", o.note.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.2fs (budget %.0fs)%s\n", total, kRuntimeBudgetSeconds,
              total > kRuntimeBudgetSeconds ? " over budget" : "");
  return failed == 0 ? 0 : 1;
}
