#include "idealforge/sumspace.hpp"

#include <algorithm>
#include <string>

#include "idealforge/errors.hpp"

namespace idealforge {

namespace {

std::vector<std::size_t> pattern_positions(std::size_t head, std::size_t tail, std::size_t gap) {
  std::vector<std::size_t> pos(head + tail);
  for (std::size_t k = 0; k < head; ++k) pos[k] = k;
  for (std::size_t k = head; k < head + tail; ++k) pos[k] = k + gap;
  return pos;
}

}  // namespace

SumSymbolicSet::SumSymbolicSet() : pattern_(SymbolicSet::empty(0)) {}

SumSymbolicSet SumSymbolicSet::empty() { return SumSymbolicSet(); }

SumSymbolicSet SumSymbolicSet::full() {
  SumSymbolicSet m;
  m.pattern_ = SymbolicSet::full(0);
  return m;
}

SumSymbolicSet SumSymbolicSet::make(std::map<std::size_t, SymbolicSet> exceptional, std::size_t head_width,
                                    std::size_t tail_width, SymbolicSet pattern, std::size_t threshold) {
  if (pattern.level() != head_width + tail_width) {
    throw LevelError("sum set pattern must have level head + tail");
  }
  if (threshold < std::max<std::size_t>(head_width + tail_width, 1)) {
    throw LevelError("sum set threshold below head + tail width");
  }
  SumSymbolicSet m;
  m.threshold_ = threshold;
  m.head_width_ = head_width;
  m.tail_width_ = tail_width;
  m.pattern_ = std::move(pattern);
  for (auto& [j, s] : exceptional) {
    if (j == 0 || j >= threshold) {
      throw LevelError("exceptional summand " + std::to_string(j) + " outside [1, threshold)");
    }
    if (s.level() != j) throw LevelError("summand " + std::to_string(j) + " must be a level-j set");
    if (!s.is_empty()) m.exceptional_.emplace(j, std::move(s));
  }
  return m;
}

SumSymbolicSet SumSymbolicSet::from_template(const SymbolicSet& head, const SymbolicSet& tail, std::size_t from) {
  const std::size_t h = head.level();
  const std::size_t t = tail.level();
  SymbolicSet pattern =
      intersect(lift_first(head, h + t), lift_last(tail, h + t));
  return make({}, h, t, std::move(pattern), std::max<std::size_t>({from, h + t, 1}))
      .from_summand(from);
}

SumSymbolicSet SumSymbolicSet::single_summand(std::size_t j, const SymbolicSet& s) {
  if (j == 0) throw LevelError("summands are indexed from 1");
  std::map<std::size_t, SymbolicSet> ex;
  ex.emplace(j, s);
  return make(std::move(ex), 0, 0, SymbolicSet::empty(0), j + 1);
}

SumSymbolicSet SumSymbolicSet::overline(const SymbolicSet& p) {
  const std::size_t i = p.level();
  if (i == 0) throw LevelError("overline needs a set of level >= 1");
  return make({}, 0, i, p, i);
}

std::vector<TemplateConjunct> SumSymbolicSet::template_conjuncts() const {
  std::vector<TemplateConjunct> out;
  for (const auto& c : pattern_.conjuncts()) {
    Conjunct head;
    Conjunct tail;
    for (const auto& [coord, pred] : c) {
      if (coord < head_width_) {
        head.emplace(coord, pred);
      } else {
        tail.emplace(coord - head_width_, pred);
      }
    }
    out.push_back({SymbolicSet::from_conjuncts(head_width_, {head}),
                   SymbolicSet::from_conjuncts(tail_width_, {tail})});
  }
  return out;
}

SumSymbolicSet SumSymbolicSet::realigned(std::size_t head_width, std::size_t tail_width,
                                         std::size_t threshold) const {
  if (head_width < head_width_ || tail_width < tail_width_) {
    throw PreconditionError("realigned: blocks can only widen");
  }
  threshold = std::max({threshold, threshold_, head_width + tail_width, std::size_t{1}});
  SumSymbolicSet m;
  m.threshold_ = threshold;
  m.head_width_ = head_width;
  m.tail_width_ = tail_width;
  m.exceptional_ = exceptional_;
  for (std::size_t j = threshold_; j < threshold; ++j) {
    SymbolicSet s = instantiate_pattern(*this, j);
    if (!s.is_empty()) m.exceptional_.emplace(j, std::move(s));
  }
  // Pad: new head coordinates sit right after the old head, new tail
  // coordinates right before the old tail.
  const std::size_t gap = (head_width - head_width_) + (tail_width - tail_width_);
  m.pattern_ = reposition(pattern_, head_width + tail_width, pattern_positions(head_width_, tail_width_, gap));
  return m;
}

SumSymbolicSet SumSymbolicSet::with_summand(std::size_t j, const SymbolicSet& s) const {
  if (j == 0) throw LevelError("summands are indexed from 1");
  if (s.level() != j) throw LevelError("summand " + std::to_string(j) + " must be a level-j set");
  SumSymbolicSet m = j >= threshold_ ? realigned(head_width_, tail_width_, j + 1) : *this;
  m.exceptional_.erase(j);
  if (!s.is_empty()) m.exceptional_.emplace(j, s);
  return m;
}

SumSymbolicSet SumSymbolicSet::from_summand(std::size_t from) const {
  SumSymbolicSet m = from > threshold_ ? realigned(head_width_, tail_width_, from) : *this;
  for (auto it = m.exceptional_.begin(); it != m.exceptional_.end();) {
    it = it->first < from ? m.exceptional_.erase(it) : std::next(it);
  }
  return m;
}

SymbolicSet instantiate_pattern(const SumSymbolicSet& m, std::size_t j) {
  const std::size_t h = m.head_width();
  const std::size_t t = m.tail_width();
  if (j < h + t) throw LevelError("pattern instantiated below its width");
  return reposition(m.pattern(), j, pattern_positions(h, t, j - h - t));
}

SymbolicSet summand_slice(const SumSymbolicSet& m, std::size_t j) {
  if (j == 0) throw LevelError("summands are indexed from 1");
  if (j < m.threshold()) {
    auto it = m.exceptional().find(j);
    return it == m.exceptional().end() ? SymbolicSet::empty(j) : it->second;
  }
  return instantiate_pattern(m, j);
}

bool sum_contains(const SumSymbolicSet& m, const SumPoint& p) {
  if (p.x.size() != p.summand) throw ArityError("sum point (j, x) needs |x| = j");
  return contains(summand_slice(m, p.summand), p.x);
}

namespace {

std::pair<SumSymbolicSet, SumSymbolicSet> align(const SumSymbolicSet& m, const SumSymbolicSet& n) {
  const std::size_t h = std::max(m.head_width(), n.head_width());
  const std::size_t t = std::max(m.tail_width(), n.tail_width());
  const std::size_t j0 = std::max({m.threshold(), n.threshold(), h + t, std::size_t{1}});
  return {m.realigned(h, t, j0), n.realigned(h, t, j0)};
}

}  // namespace

SumSymbolicSet sum_combine(SetOp op, const SumSymbolicSet& m, const SumSymbolicSet* n) {
  if (op == SetOp::Complement) return sum_complement(m);
  if (n == nullptr) throw PreconditionError("binary sum-set operation needs two operands");
  auto [a, b] = align(m, *n);
  std::map<std::size_t, SymbolicSet> ex;
  for (std::size_t j = 1; j < a.threshold(); ++j) {
    SymbolicSet sa = summand_slice(a, j);
    SymbolicSet sb = summand_slice(b, j);
    ex.emplace(j, combine(op, sa, &sb));
  }
  SymbolicSet pattern = combine(op, a.pattern(), &b.pattern());
  return SumSymbolicSet::make(std::move(ex), a.head_width(), a.tail_width(), std::move(pattern), a.threshold());
}

SumSymbolicSet sum_unite(const SumSymbolicSet& m, const SumSymbolicSet& n) {
  return sum_combine(SetOp::Union, m, &n);
}
SumSymbolicSet sum_intersect(const SumSymbolicSet& m, const SumSymbolicSet& n) {
  return sum_combine(SetOp::Intersection, m, &n);
}
SumSymbolicSet sum_difference(const SumSymbolicSet& m, const SumSymbolicSet& n) {
  return sum_combine(SetOp::Difference, m, &n);
}

SumSymbolicSet sum_complement(const SumSymbolicSet& m) {
  std::map<std::size_t, SymbolicSet> ex;
  for (std::size_t j = 1; j < m.threshold(); ++j) ex.emplace(j, complement(summand_slice(m, j)));
  return SumSymbolicSet::make(std::move(ex), m.head_width(), m.tail_width(), complement(m.pattern()),
                              m.threshold());
}

bool sum_is_empty(const SumSymbolicSet& m) { return m.exceptional().empty() && m.pattern().is_empty(); }

bool sum_subset(const SumSymbolicSet& m, const SumSymbolicSet& n) { return sum_is_empty(sum_difference(m, n)); }

bool sum_same_set(const SumSymbolicSet& m, const SumSymbolicSet& n) { return sum_subset(m, n) && sum_subset(n, m); }

std::optional<SumPoint> sum_least_element(const SumSymbolicSet& m) {
  if (!m.exceptional().empty()) {
    const auto& [j, s] = *m.exceptional().begin();
    return SumPoint{j, *least_element(s)};
  }
  if (m.pattern().is_empty()) return std::nullopt;
  const std::size_t j = m.threshold();
  return SumPoint{j, *least_element(instantiate_pattern(m, j))};
}

std::vector<SumPoint> sum_enumerate(const SumSymbolicSet& m, std::size_t summand_bound, Nat coord_bound) {
  std::vector<SumPoint> out;
  for (std::size_t j = 1; j < summand_bound; ++j) {
    for (auto& p : enumerate(summand_slice(m, j), coord_bound)) out.push_back({j, std::move(p)});
  }
  return out;
}

SymbolicSet stable_tail_image(const SumSymbolicSet& m, std::size_t i) {
  const std::size_t h = m.head_width();
  const std::size_t t = m.tail_width();
  std::vector<Conjunct> out;
  for (const auto& c : m.pattern().conjuncts()) {
    // Head coordinates fall outside the last i coordinates; tail coordinate
    // k lands at i - t + (k - h) when that is non-negative.
    Conjunct kept;
    for (const auto& [coord, pred] : c) {
      if (coord < h) continue;
      const std::size_t from_end = h + t - coord;  // 1-based distance from the last coordinate
      if (from_end <= i) kept.emplace(i - from_end, pred);
    }
    out.push_back(std::move(kept));
  }
  return SymbolicSet::from_conjuncts(i, std::move(out));
}

SymbolicSet tail_union_projection(const SumSymbolicSet& m, std::size_t i) {
  if (i == 0) throw LevelError("tail_union_projection needs i >= 1");
  const std::size_t stable_from = std::max(m.threshold(), m.head_width() + i);
  SymbolicSet acc = SymbolicSet::empty(i);
  for (std::size_t j = i; j < stable_from; ++j) acc = unite(acc, project_last(summand_slice(m, j), i));
  return unite(acc, stable_tail_image(m, i));
}

std::size_t finomega_search_bound(const SumSymbolicSet& m) {
  // Certificates lift from i to i + 1, and once i >= max(j0, H + T) every U_i is
  // the instantiation of one fixed pattern whose Fin^i verdict no longer
  // depends on i; the bound leaves slack past both.
  return m.threshold() + m.head_width() + m.tail_width() + 2;
}

std::optional<LimitCertificate> finomega_member(const SumSymbolicSet& m) {
  const std::size_t bound = finomega_search_bound(m);
  for (std::size_t i = 1; i <= bound; ++i) {
    SymbolicSet u = tail_union_projection(m, i);
    if (fin_member(u, i)) return LimitCertificate{i, complement(u)};
  }
  return std::nullopt;
}

bool validate_finomega_certificate(const SumSymbolicSet& m, const LimitCertificate& cert) {
  const std::size_t i = cert.index;
  if (i == 0 || cert.filter_set.level() != i) return false;
  if (!fin_member(complement(cert.filter_set), i)) return false;
  // Past max(j0, H + i) the head block no longer meets the lifted filter set, so
  // emptiness of M_j cap pi^{-1}[P] is the same for every larger j.
  const std::size_t last = std::max(m.threshold(), m.head_width() + i);
  for (std::size_t j = i; j <= last; ++j) {
    if (!intersect(summand_slice(m, j), lift_last(cert.filter_set, j)).is_empty()) return false;
  }
  return true;
}

LimitCertificate lift_certificate(const LimitCertificate& cert) {
  return {cert.index + 1, lift_last(cert.filter_set, cert.index + 1)};
}

FinPowOmegaReport finpow_omega_report(const SumSymbolicSet& m) {
  FinPowOmegaReport r;
  for (const auto& [j, s] : m.exceptional()) {
    if (!fin_member(s, j)) r.large_exceptional.push_back(j);
  }
  // Free middle coordinates leave every generic section unchanged, so one
  // instantiation decides all summands j >= j0.
  r.template_small = m.pattern().is_empty() || fin_member(instantiate_pattern(m, m.threshold()), m.threshold());
  r.member = r.template_small;
  return r;
}

bool finpow_omega_member(const SumSymbolicSet& m) { return finpow_omega_report(m).member; }

}  // namespace idealforge
