#include "latbounds/dist.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "latbounds/errors.hpp"

namespace latbounds {

StepDistribution StepDistribution::from_weights(std::vector<double> values, std::vector<double> weights) {
  if (values.size() != weights.size() || values.empty())
    throw Error("distribution needs matching, nonempty value and weight lists");
  std::map<double, double> merged;
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(weights[i] >= 0.0)) throw Error("distribution weights must be nonnegative");
    if (weights[i] == 0.0) continue;
    merged[values[i]] += weights[i];
    total += weights[i];
  }
  if (total <= 0.0) throw Error("distribution weights sum to zero");
  StepDistribution d;
  double run = 0.0;
  for (const auto& [v, w] : merged) {
    d.support_.push_back(v);
    d.probs_.push_back(w / total);
    run += w;
    d.cum_.push_back(run / total);
  }
  d.cum_.back() = 1.0;
  return d;
}

StepDistribution StepDistribution::from_samples(const std::vector<double>& samples) {
  return from_weights(samples, std::vector<double>(samples.size(), 1.0));
}

double StepDistribution::cdf(double u) const {
  auto it = std::upper_bound(support_.begin(), support_.end(), u);
  return it == support_.begin() ? 0.0 : cum_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

double StepDistribution::cdf_before(double u) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), u);
  return it == support_.begin() ? 0.0 : cum_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

double StepDistribution::quantile(double q) const {
  auto it = std::partition_point(cum_.begin(), cum_.end(), [&](double c) { return c < q - kProbTolerance; });
  return it == cum_.end() ? support_.back() : support_[static_cast<std::size_t>(it - cum_.begin())];
}

double StepDistribution::quantile_right(double q) const {
  auto it = std::partition_point(cum_.begin(), cum_.end(), [&](double c) { return c <= q + kProbTolerance; });
  return it == cum_.end() ? support_.back() : support_[static_cast<std::size_t>(it - cum_.begin())];
}

CdfBounds wd_cdf_bounds(const StepDistribution& F1, const StepDistribution& F2, double w) {
  const auto& a = F1.support();
  const auto& cum1 = F1.cumulative();
  const auto& c = F2.support();
  const auto& p2 = F2.probs();
  // Both envelopes only move at the atoms u of F1; for each one take
  // P(Y2 < u - w) written as P(u - Y2 > w), so the comparison matches the
  // event Y1 - Y2 <= w exactly.
  double sup = 0.0, inf = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double below = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (a[i] - c[j] > w) below += p2[j];
    double at = cum1[i], before = i == 0 ? 0.0 : cum1[i - 1];
    sup = std::max(sup, at - below);
    inf = std::min(inf, before - below);
  }
  return {std::min(1.0, sup), std::max(0.0, 1.0 + inf)};
}

BoundInterval wd_quantile_bounds(const StepDistribution& F1, const StepDistribution& F2, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw QOutOfRange("quantile level must lie in [0,1], got " + std::to_string(q));
  if (q == 0.0) {
    double v = F1.min() - F2.max();
    return BoundInterval::make(v, v);
  }
  if (q == 1.0) {
    double v = F1.max() - F2.min();
    return BoundInterval::make(v, v);
  }
  // lower = sup over u in (0,q] of Q1(u) - Q2(1-q+u); both are left-continuous,
  // so the sup sits at a right end of a constant piece.
  double lower = F1.quantile(q) - F2.quantile(1.0);
  for (double l1 : F1.cumulative())
    if (l1 < q) lower = std::max(lower, F1.quantile(l1) - F2.quantile(1.0 - q + l1));
  for (double l2 : F2.cumulative()) {
    double u = l2 - (1.0 - q);
    if (u > kProbTolerance && u < q) lower = std::max(lower, F1.quantile(u) - F2.quantile(l2));
  }
  // upper = inf over u in [q,1] of Q1(u) - Q2+(u-q); Q1 is left- and Q2+ right-
  // continuous, so the inf sits at a breakpoint of either.
  double upper = F1.quantile(q) - F2.quantile_right(0.0);
  upper = std::min(upper, F1.quantile(1.0) - F2.quantile_right(1.0 - q));
  for (double l1 : F1.cumulative())
    if (l1 >= q) upper = std::min(upper, F1.quantile(l1) - F2.quantile_right(l1 - q));
  for (double l2 : F2.cumulative())
    if (l2 < 1.0 - q) upper = std::min(upper, F1.quantile(q + l2) - F2.quantile_right(l2));
  return BoundInterval::make(lower, upper);
}

std::vector<double> default_quantile_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 99; ++i) g.push_back(i / 100.0);
  return g;
}

QuantileBoundCurve wd_quantile_curve(const StepDistribution& F1, const StepDistribution& F2,
                                     const std::vector<double>& grid) {
  QuantileBoundCurve c;
  c.q = grid;
  for (double q : grid) {
    auto b = wd_quantile_bounds(F1, F2, q);
    c.lower.push_back(b.lower);
    c.upper.push_back(b.upper);
  }
  return c;
}

namespace {

struct EdgeRelation {
  std::size_t hi, lo;  // effect y(hi) - y(lo)
};

// For a flagged diamond, the pairs (dominated, dominating) of edge effects.
std::vector<std::pair<EdgeRelation, EdgeRelation>> dominances(const Sublattice4& s, bool spm, bool sbm) {
  std::vector<std::pair<EdgeRelation, EdgeRelation>> out;
  EdgeRelation tl{s.top, s.left}, tr{s.top, s.right}, lb{s.left, s.bottom}, rb{s.right, s.bottom};
  if (spm) {
    out.push_back({rb, tl});
    out.push_back({lb, tr});
  }
  if (sbm) {
    out.push_back({tl, rb});
    out.push_back({tr, lb});
  }
  return out;
}

RefinedBounds refine(const std::vector<std::pair<const Sublattice4*, const SublatticeFlags*>>& flagged,
                     const std::vector<StepDistribution>& m, std::size_t t1, std::size_t t2, double q) {
  RefinedBounds out;
  out.bounds = wd_quantile_bounds(m.at(t1), m.at(t2), q);
  double lo = out.bounds.lower, hi = out.bounds.upper;
  for (const auto& [s, f] : flagged) {
    for (const auto& [small, large] : dominances(*s, f->spm, f->sbm)) {
      if (large.hi == t1 && large.lo == t2) {
        lo = std::max(lo, wd_quantile_bounds(m.at(small.hi), m.at(small.lo), q).lower);
        ++out.relations_used;
      }
      if (small.hi == t1 && small.lo == t2) {
        hi = std::min(hi, wd_quantile_bounds(m.at(large.hi), m.at(large.lo), q).upper);
        ++out.relations_used;
      }
    }
  }
  out.bounds = BoundInterval::make(lo, hi);
  return out;
}

}  // namespace

std::vector<DiamondEffect> spm_refined_quantile_bounds(const Sublattice4& diamond,
                                                       const std::vector<StepDistribution>& marginals, double q,
                                                       bool spm, bool sbm) {
  SublatticeFlags f{diamond.id, spm, sbm};
  std::vector<std::pair<const Sublattice4*, const SublatticeFlags*>> flagged{{&diamond, &f}};
  std::vector<DiamondEffect> out;
  for (auto [a, b] : {std::pair{diamond.top, diamond.left}, std::pair{diamond.top, diamond.right},
                      std::pair{diamond.left, diamond.bottom}, std::pair{diamond.right, diamond.bottom}})
    out.push_back({a, b, refine(flagged, marginals, a, b, q).bounds});
  return out;
}

RefinedBounds dominance_refined_quantile_bounds(const std::vector<Sublattice4>& subs,
                                                const std::vector<SublatticeFlags>& flags,
                                                const std::vector<StepDistribution>& marginals, std::size_t t1,
                                                std::size_t t2, double q) {
  std::vector<std::pair<const Sublattice4*, const SublatticeFlags*>> flagged;
  for (const auto& s : subs) {
    const auto& f = flags.at(s.id);
    if ((f.spm || f.sbm) && s.contains(t1) && s.contains(t2)) flagged.push_back({&s, &f});
  }
  return refine(flagged, marginals, t1, t2, q);
}

IvResult qspmiv_quantile_bounds(const LevelMarginals& levels, double q, std::size_t target, IvDirection direction) {
  std::vector<std::optional<BoundInterval>> per_level(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l)
    if (levels[l]) per_level[l] = wd_quantile_bounds(levels[l]->first, levels[l]->second, q);
  return monotone_envelope(per_level, target, direction);
}

}  // namespace latbounds
