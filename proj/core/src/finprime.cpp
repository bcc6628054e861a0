#include "idealforge/finprime.hpp"

#include <algorithm>
#include <string>

#include "idealforge/errors.hpp"

namespace idealforge {

// ---- certified sets ----

CertifiedSet CertifiedSet::finite(Family f, FiniteSet values) {
  CertifiedSet a;
  a.family = f;
  a.finite_part = std::move(values);
  return a;
}

CertifiedSet CertifiedSet::bundle(Family f, std::size_t level, SymbolicSet b) {
  CertifiedSet a;
  a.family = f;
  a.bundles.emplace(level, std::move(b));
  validate(a);
  return a;
}

CertifiedSet CertifiedSet::multicell(Family f, std::map<std::size_t, Point> cells) {
  CertifiedSet a;
  a.family = f;
  a.multicells.push_back(std::move(cells));
  validate(a);
  return a;
}

std::size_t CertifiedSet::max_level() const {
  std::size_t n = 0;
  if (!bundles.empty()) n = bundles.rbegin()->first;
  for (const auto& u : multicells) {
    if (!u.empty()) n = std::max(n, u.rbegin()->first);
  }
  return n;
}

void validate(const CertifiedSet& a) {
  for (const auto& [l, b] : a.bundles) {
    if (b.level() != l + 1) {
      throw LevelError("a level-" + std::to_string(l) + " bundle needs a set at level " + std::to_string(l + 1));
    }
  }
  for (const auto& u : a.multicells) {
    for (const auto& [l, t] : u) {
      if (t.size() != l + 1) throw ArityError("a level-" + std::to_string(l) + " cell is indexed by a tuple of length " + std::to_string(l + 1));
    }
  }
}

bool certified_contains(const CertifiedSet& a, Nat m) {
  if (a.finite_part.contains(m)) return true;
  if (a.bundles.empty() && a.multicells.empty()) return false;
  const Stack st = decode(permute(a.family, m));
  auto cell = [&](std::size_t l) { return l < st.size() ? st[l] : Point(l + 1, 0); };
  for (const auto& [l, b] : a.bundles) {
    if (contains(b, cell(l))) return true;
  }
  for (const auto& u : a.multicells) {
    if (std::all_of(u.begin(), u.end(), [&](const auto& e) { return cell(e.first) == e.second; })) return true;
  }
  return false;
}

CertifiedSet certified_union(const CertifiedSet& a, const CertifiedSet& b) {
  if (a.family != b.family) throw PreconditionError("certified sets over different partition families");
  CertifiedSet out = a;
  out.finite_part = a.finite_part.unite(b.finite_part);
  for (const auto& [l, s] : b.bundles) {
    auto [it, fresh] = out.bundles.emplace(l, s);
    if (!fresh) it->second = unite(it->second, s);
  }
  for (const auto& u : b.multicells) {
    if (std::find(out.multicells.begin(), out.multicells.end(), u) == out.multicells.end()) out.multicells.push_back(u);
  }
  return out;
}

std::vector<Nat> certified_enumerate(const CertifiedSet& a, Nat bound) {
  std::vector<Nat> out;
  for (Nat m = 0; m < bound; ++m) {
    if (certified_contains(a, m)) out.push_back(m);
  }
  return out;
}

// ---- block formulas ----

struct BlockFormula::Node {
  Kind kind = Kind::True;
  std::size_t level = 0;
  SymbolicSet q;
  std::vector<BlockFormula> kids;
};

BlockFormula BlockFormula::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = value ? Kind::True : Kind::False;
  return BlockFormula(std::move(n));
}

BlockFormula BlockFormula::atom(std::size_t level, SymbolicSet q) {
  if (q.level() != level + 1) throw LevelError("a level-" + std::to_string(level) + " atom needs a set at level " + std::to_string(level + 1));
  if (q.is_empty()) return constant(false);
  if (q.is_full()) return constant(true);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->level = level;
  n->q = std::move(q);
  return BlockFormula(std::move(n));
}

BlockFormula BlockFormula::negation(BlockFormula f) {
  switch (f.kind()) {
    case Kind::True: return constant(false);
    case Kind::False: return constant(true);
    case Kind::Not: return f.children().front();
    default: break;
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->kids.push_back(std::move(f));
  return BlockFormula(std::move(n));
}

namespace {

BlockFormula junction(BlockFormula::Kind kind, std::vector<BlockFormula> fs) {
  using Kind = BlockFormula::Kind;
  const Kind unit = kind == Kind::And ? Kind::True : Kind::False;
  const Kind absorbing = kind == Kind::And ? Kind::False : Kind::True;
  std::vector<BlockFormula> kept;
  for (auto& f : fs) {
    if (f.kind() == absorbing) return BlockFormula::constant(absorbing == Kind::True);
    if (f.kind() == unit) continue;
    if (f.kind() == kind) {
      kept.insert(kept.end(), f.children().begin(), f.children().end());
    } else {
      kept.push_back(std::move(f));
    }
  }
  if (kept.empty()) return BlockFormula::constant(unit == Kind::True);
  if (kept.size() == 1) return kept.front();
  return kind == Kind::And ? BlockFormula::conjunction(std::move(kept)) : BlockFormula::disjunction(std::move(kept));
}

}  // namespace

BlockFormula BlockFormula::conjunction(std::vector<BlockFormula> fs) {
  const bool flat = fs.size() >= 2 && std::none_of(fs.begin(), fs.end(), [](const BlockFormula& f) {
    return f.kind() == Kind::True || f.kind() == Kind::False || f.kind() == Kind::And;
  });
  if (!flat) return junction(Kind::And, std::move(fs));
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->kids = std::move(fs);
  return BlockFormula(std::move(n));
}

BlockFormula BlockFormula::disjunction(std::vector<BlockFormula> fs) {
  const bool flat = fs.size() >= 2 && std::none_of(fs.begin(), fs.end(), [](const BlockFormula& f) {
    return f.kind() == Kind::True || f.kind() == Kind::False || f.kind() == Kind::Or;
  });
  if (!flat) return junction(Kind::Or, std::move(fs));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->kids = std::move(fs);
  return BlockFormula(std::move(n));
}

BlockFormula::Kind BlockFormula::kind() const { return node_->kind; }
std::size_t BlockFormula::atom_level() const { return node_->level; }
const SymbolicSet& BlockFormula::atom_set() const { return node_->q; }
const std::vector<BlockFormula>& BlockFormula::children() const { return node_->kids; }

std::optional<std::size_t> BlockFormula::max_level() const {
  if (kind() == Kind::Atom) return atom_level();
  std::optional<std::size_t> out;
  for (const auto& c : children()) {
    if (auto l = c.max_level()) out = std::max(out.value_or(0), *l);
  }
  return out;
}

bool evaluate(const BlockFormula& f, const std::vector<Point>& s) {
  using Kind = BlockFormula::Kind;
  switch (f.kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom:
      if (f.atom_level() >= s.size()) throw LevelError("index tuple too short for the formula");
      return contains(f.atom_set(), s[f.atom_level()]);
    case Kind::Not: return !evaluate(f.children().front(), s);
    case Kind::And:
      return std::all_of(f.children().begin(), f.children().end(), [&](const auto& c) { return evaluate(c, s); });
    case Kind::Or:
      return std::any_of(f.children().begin(), f.children().end(), [&](const auto& c) { return evaluate(c, s); });
  }
  return false;
}

namespace {

void collect_atoms(const BlockFormula& f, std::size_t level, std::vector<SymbolicSet>& out) {
  if (f.kind() == BlockFormula::Kind::Atom) {
    if (f.atom_level() == level && std::find(out.begin(), out.end(), f.atom_set()) == out.end()) {
      out.push_back(f.atom_set());
    }
    return;
  }
  for (const auto& c : f.children()) collect_atoms(c, level, out);
}

BlockFormula substitute(const BlockFormula& f, std::size_t level, const std::vector<SymbolicSet>& atoms,
                        const std::vector<bool>& truth) {
  using Kind = BlockFormula::Kind;
  switch (f.kind()) {
    case Kind::True:
    case Kind::False: return f;
    case Kind::Atom: {
      if (f.atom_level() != level) return f;
      const auto idx = static_cast<std::size_t>(std::find(atoms.begin(), atoms.end(), f.atom_set()) - atoms.begin());
      return BlockFormula::constant(truth[idx]);
    }
    case Kind::Not: return BlockFormula::negation(substitute(f.children().front(), level, atoms, truth));
    case Kind::And:
    case Kind::Or: {
      std::vector<BlockFormula> kids;
      for (const auto& c : f.children()) kids.push_back(substitute(c, level, atoms, truth));
      return f.kind() == Kind::And ? BlockFormula::conjunction(std::move(kids))
                                   : BlockFormula::disjunction(std::move(kids));
    }
  }
  return f;
}

struct Region {
  SymbolicSet set;
  std::vector<bool> truth;
};

/// The non-empty cells of the boolean algebra generated by `atoms` in omega^{level+1}.
std::vector<Region> regions(std::size_t level, const std::vector<SymbolicSet>& atoms) {
  std::vector<Region> out{{SymbolicSet::full(level + 1), {}}};
  for (const auto& q : atoms) {
    std::vector<Region> next;
    for (auto& r : out) {
      SymbolicSet inside = intersect(r.set, q);
      SymbolicSet outside = difference(r.set, q);
      if (!inside.is_empty()) {
        auto t = r.truth;
        t.push_back(true);
        next.push_back({std::move(inside), std::move(t)});
      }
      if (!outside.is_empty()) {
        auto t = r.truth;
        t.push_back(false);
        next.push_back({std::move(outside), std::move(t)});
      }
    }
    if (next.size() > resource_caps().regions) {
      throw ResourceError("block formula splits into more than " + std::to_string(resource_caps().regions) +
                          " regions at level " + std::to_string(level));
    }
    out = std::move(next);
  }
  return out;
}

void check_levels(const BlockFormula& f, std::size_t n) {
  if (auto l = f.max_level(); l && *l > n) {
    throw LevelError("formula mentions level " + std::to_string(*l) + " beyond n = " + std::to_string(n));
  }
}

std::optional<Rectangle> upfamily_from(const BlockFormula& f, std::size_t level, std::size_t n) {
  using Kind = BlockFormula::Kind;
  if (f.kind() == Kind::False) return std::nullopt;
  if (f.kind() == Kind::True) {
    Rectangle r;
    for (std::size_t l = level; l <= n; ++l) r.push_back(SymbolicSet::empty(l + 1));
    return r;
  }
  std::vector<SymbolicSet> atoms;
  collect_atoms(f, level, atoms);
  SymbolicSet good = SymbolicSet::empty(level + 1);
  Rectangle higher;
  for (std::size_t l = level + 1; l <= n; ++l) higher.push_back(SymbolicSet::empty(l + 1));
  for (const auto& region : regions(level, atoms)) {
    auto sub = upfamily_from(substitute(f, level, atoms, region.truth), level + 1, n);
    if (!sub) continue;
    good = unite(good, region.set);
    for (std::size_t k = 0; k < higher.size(); ++k) higher[k] = unite(higher[k], (*sub)[k]);
  }
  // Any witness B_l leaves every region meeting its complement good, so the
  // bad part complement(good) is the least candidate for B'_l.
  SymbolicSet bad = complement(good);
  if (!fin_member(bad, level + 1)) return std::nullopt;
  Rectangle out{std::move(bad)};
  out.insert(out.end(), higher.begin(), higher.end());
  return out;
}

bool satisfiable_from(const BlockFormula& f, std::size_t level, std::size_t n) {
  using Kind = BlockFormula::Kind;
  if (f.kind() == Kind::True) return true;
  if (f.kind() == Kind::False || level > n) return false;
  std::vector<SymbolicSet> atoms;
  collect_atoms(f, level, atoms);
  for (const auto& region : regions(level, atoms)) {
    if (satisfiable_from(substitute(f, level, atoms, region.truth), level + 1, n)) return true;
  }
  return false;
}

BlockFormula cells_atom(const std::map<std::size_t, Point>& u, std::size_t n) {
  std::vector<BlockFormula> parts;
  for (const auto& [l, t] : u) {
    if (l <= n) parts.push_back(BlockFormula::atom(l, SymbolicSet::singleton(t)));
  }
  return BlockFormula::conjunction(std::move(parts));
}

/// Index tuples whose full cell intersection lies inside the structural part of `a`.
BlockFormula structural(const CertifiedSet& a) {
  std::vector<BlockFormula> parts;
  for (const auto& [l, b] : a.bundles) parts.push_back(BlockFormula::atom(l, b));
  for (const auto& u : a.multicells) parts.push_back(cells_atom(u, a.max_level()));
  return BlockFormula::disjunction(std::move(parts));
}

}  // namespace

BlockFormula phi_truncated(const CertifiedSet& a, std::size_t n) {
  validate(a);
  std::vector<BlockFormula> parts;
  for (const auto& [l, b] : a.bundles) {
    if (l <= n) {
      parts.push_back(BlockFormula::negation(BlockFormula::atom(l, b)));
    } else if (!b.is_empty()) {
      return BlockFormula::constant(false);
    }
  }
  for (const auto& u : a.multicells) parts.push_back(BlockFormula::negation(cells_atom(u, n)));
  return BlockFormula::conjunction(std::move(parts));
}

BlockFormula phi(const CertifiedSet& a, std::size_t n) {
  if (n < a.max_level()) {
    throw PreconditionError("phi_n needs n >= " + std::to_string(a.max_level()) + ", got " + std::to_string(n));
  }
  return phi_truncated(a, n);
}

std::optional<Rectangle> upfamily_member(const BlockFormula& f, std::size_t n) {
  check_levels(f, n);
  return upfamily_from(f, 0, n);
}

bool block_satisfiable(const BlockFormula& f, std::size_t n) {
  check_levels(f, n);
  return satisfiable_from(f, 0, n);
}

bool validate_rectangle(const BlockFormula& f, const Rectangle& r) {
  if (r.empty()) return false;
  const std::size_t n = r.size() - 1;
  std::vector<BlockFormula> parts{BlockFormula::negation(f)};
  for (std::size_t l = 0; l <= n; ++l) {
    if (r[l].level() != l + 1 || !fin_member(r[l], l + 1)) return false;
    parts.push_back(BlockFormula::negation(BlockFormula::atom(l, r[l])));
  }
  if (auto l = f.max_level(); l && *l > n) return false;
  return !block_satisfiable(BlockFormula::conjunction(std::move(parts)), n);
}

bool jn_member(const CertifiedSet& a, std::size_t n) { return upfamily_member(phi_truncated(a, n), n).has_value(); }

std::optional<FinPrimeCertificate> finprime_member(const CertifiedSet& a) {
  const std::size_t n = a.max_level();
  auto r = upfamily_member(phi(a, n), n);
  if (!r) return std::nullopt;
  return FinPrimeCertificate{n, std::move(*r)};
}

bool certified_almost_subset(const CertifiedSet& a, const CertifiedSet& b) {
  if (a.family != b.family) throw PreconditionError("certified sets over different partition families");
  validate(a);
  validate(b);
  const std::size_t n = std::max(a.max_level(), b.max_level());
  const BlockFormula outside =
      BlockFormula::conjunction({structural(a), BlockFormula::negation(structural(b))});
  return !block_satisfiable(outside, n);
}

bool certified_subset(const CertifiedSet& a, const CertifiedSet& b) {
  if (!certified_almost_subset(a, b)) return false;
  return std::all_of(a.finite_part.begin(), a.finite_part.end(), [&](Nat x) { return certified_contains(b, x); });
}

bool generator_contains(Family f, const Generator& g, Nat m) { return contains(g.cells, cell_of(f, m, g.level)); }

Decomposition decomposition_certificate(const CertifiedSet& a) {
  auto cert = finprime_member(a);
  if (!cert) throw PreconditionError("decomposition requested for a set outside Fin'_omega");
  Decomposition d;
  for (std::size_t l = 0; l < cert->rectangle.size(); ++l) {
    if (!cert->rectangle[l].is_empty()) d.generators.push_back({l, cert->rectangle[l]});
  }
  std::vector<Nat> rest;
  for (Nat x : a.finite_part) {
    const bool covered = std::any_of(d.generators.begin(), d.generators.end(),
                                     [&](const Generator& g) { return generator_contains(a.family, g, x); });
    if (!covered) rest.push_back(x);
  }
  d.remainder = FiniteSet(std::move(rest));
  return d;
}

bool validate_decomposition(const CertifiedSet& a, const Decomposition& d, Nat prefix) {
  CertifiedSet cover = CertifiedSet::finite(a.family, d.remainder);
  for (const auto& g : d.generators) {
    if (g.cells.level() != g.level + 1 || !fin_member(g.cells, g.level + 1)) return false;
    cover = certified_union(cover, CertifiedSet::bundle(a.family, g.level, g.cells));
  }
  if (!certified_almost_subset(a, cover)) return false;
  for (Nat x : a.finite_part) {
    if (!certified_contains(cover, x)) return false;
  }
  for (Nat m = 0; m < prefix; ++m) {
    if (certified_contains(a, m) && !certified_contains(cover, m)) return false;
  }
  return true;
}

// ---- C/D splitting ----

namespace {

Nat interleave(const std::vector<Nat>& coords) {
  const std::size_t k = coords.size();
  Nat out = 0;
  for (std::size_t r = 0; r < k; ++r) {
    Nat v = coords[r];
    for (std::size_t b = 0; v != 0; ++b, v >>= 1) {
      if ((v & 1) == 0) continue;
      const std::size_t pos = b * k + r;
      if (pos >= 64) throw ResourceError("index tuple too large for a 64-bit index");
      out |= Nat{1} << pos;
    }
  }
  return out;
}

}  // namespace

Nat default_tuple_index(const Point& t) { return interleave(t); }

Nat default_stack_index(const std::vector<Point>& s) {
  std::vector<Nat> flat;
  for (const auto& t : s) flat.insert(flat.end(), t.begin(), t.end());
  return interleave(flat);
}

SplitResult split_small(Family f, const std::vector<Nat>& prefix, std::size_t n, const TupleIndex& h_inv,
                        const StackIndex& g_inv) {
  SplitResult out;
  for (Nat x : prefix) {
    std::vector<Point> lower;
    for (std::size_t l = 0; l < n; ++l) lower.push_back(cell_of(f, x, l));
    const Nat k = h_inv(cell_of(f, x, n));
    const Nat j = g_inv(lower);
    (k >= j ? out.c : out.d).push_back(x);
  }
  return out;
}

}  // namespace idealforge
