#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latbounds/bounds.hpp"
#include "latbounds/iv.hpp"
#include "latbounds/lattice.hpp"
#include "latbounds/partition.hpp"

namespace latbounds {

// Probability comparisons inside quantile lookups use this slack, so that
// levels equal in exact arithmetic compare equal after floating-point sums.
inline constexpr double kProbTolerance = 1e-12;

class StepDistribution {
 public:
  StepDistribution() = default;
  // Weights must be nonnegative with a positive sum; duplicates are merged.
  static StepDistribution from_weights(std::vector<double> values, std::vector<double> weights);
  static StepDistribution from_samples(const std::vector<double>& samples);

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<double>& cumulative() const { return cum_; }
  double min() const { return support_.front(); }
  double max() const { return support_.back(); }

  double cdf(double u) const;         // P(Y <= u)
  double cdf_before(double u) const;  // P(Y < u)
  // inf{u : F(u) >= q}; q = 0 maps to the smallest support point.
  double quantile(double q) const;
  // inf{u : F(u) > q}; q = 1 maps to the largest support point.
  double quantile_right(double q) const;

 private:
  std::vector<double> support_, probs_, cum_;
};

struct CdfBounds {
  double lower = 0.0;
  double upper = 1.0;
};

// Pointwise bounds on P(Y1 - Y2 <= w) over all couplings of the marginals.
CdfBounds wd_cdf_bounds(const StepDistribution& F1, const StepDistribution& F2, double w);

// Pointwise bounds on the q-quantile of Y1 - Y2 (generalized inverse).
// At q = 0 and q = 1 both ends collapse to the extreme support differences.
// Throws QOutOfRange outside [0,1].
BoundInterval wd_quantile_bounds(const StepDistribution& F1, const StepDistribution& F2, double q);

struct QuantileBoundCurve {
  std::vector<double> q;
  std::vector<double> lower, upper;
};

std::vector<double> default_quantile_grid();

QuantileBoundCurve wd_quantile_curve(const StepDistribution& F1, const StepDistribution& F2,
                                     const std::vector<double>& grid);

// Effect y(a) - y(b) between two points of a diamond.
struct DiamondEffect {
  std::size_t a = 0, b = 0;
  BoundInterval bounds;
};

// Refinement on one diamond through the dominance of effects along parallel
// edges. spm: y(top)-y(left) dominates y(right)-y(bottom) and y(top)-y(right)
// dominates y(left)-y(bottom); sbm reverses both. Returns the four edge
// effects (top,left), (top,right), (left,bottom), (right,bottom).
std::vector<DiamondEffect> spm_refined_quantile_bounds(const Sublattice4& diamond,
                                                       const std::vector<StepDistribution>& marginals, double q,
                                                       bool spm, bool sbm);

struct RefinedBounds {
  BoundInterval bounds;
  std::size_t relations_used = 0;  // number of dominance statements that entered
  bool sharp_known = false;        // only the single-diamond case is a known sharp result
};

// General-lattice pass: every flagged diamond having (t2 -> t1) as an edge
// contributes the WD bound of its parallel edge. Valid; sharpness unknown.
RefinedBounds dominance_refined_quantile_bounds(const std::vector<Sublattice4>& subs,
                                                const std::vector<SublatticeFlags>& flags,
                                                const std::vector<StepDistribution>& marginals, std::size_t t1,
                                                std::size_t t2, double q);

// Per instrument level the pair (F_t1, F_t2) within the cell, or nullopt.
using LevelMarginals = std::vector<std::optional<std::pair<StepDistribution, StepDistribution>>>;

IvResult qspmiv_quantile_bounds(const LevelMarginals& levels, double q, std::size_t target, IvDirection direction);

}  // namespace latbounds
