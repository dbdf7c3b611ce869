#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latbounds/lattice.hpp"
#include "latbounds/partition.hpp"

namespace latbounds {

// Gap by which lower may exceed upper before an interval counts as empty.
// Absorbs rounding when a max and a min are built from the same quantities.
inline constexpr double kEmptyTolerance = 1e-12;

struct BoundInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool empty = false;

  static BoundInterval make(double lo, double hi) { return {lo, hi, lo > hi + kEmptyTolerance}; }
  double width() const { return upper - lower; }
  bool contains(double v, double tol = 0.0) const { return lower - tol <= v && v <= upper + tol; }
  bool within(const BoundInterval& outer, double tol = 0.0) const {
    return outer.lower - tol <= lower && upper <= outer.upper + tol;
  }
};

struct OutcomeBounds {
  double k_lo = 0.0;
  double k_hi = 1.0;
};

// Per lattice point: P(z=t) and E[y|z=t]. The mean of a zero-probability cell
// is never read.
struct CellStats {
  std::vector<double> prob;
  std::vector<double> mean;
};

BoundInterval no_assumption_po_bounds(std::size_t t, const CellStats& stats, OutcomeBounds K);

// [lower(t1) - upper(t2), upper(t1) - lower(t2)] from the potential-outcome bounds.
BoundInterval no_assumption_effect_bounds(std::size_t t1, std::size_t t2, const CellStats& stats, OutcomeBounds K);

// Where the realized treatment z sits relative to the target pair.
struct StratumKey {
  Label label = Label::L13;
  bool below_t2 = false;  // z <= t2
  bool above_t1 = false;  // z >= t1
};

StratumKey stratum_key(const TreatmentLattice& T, const LambdaPartition& part, std::size_t z);

// Identification region for y(t1) - y(t2) of one individual with y(z) = y_obs.
BoundInterval pointwise_region(const StratumKey& key, double y_obs, OutcomeBounds K, bool smtr);

// Probability-weighted aggregate of pointwise_region over the strata z = t3.
BoundInterval ate_bounds(const TreatmentLattice& T, const CellStats& stats, const LambdaPartition& part,
                         OutcomeBounds K, bool smtr);

// The lattice and its sublattice flags as seen by the bound formulas. With a
// sign vector the coordinates are flipped so that monotone response is always
// increasing; flags are carried over (a flip of one spanning dimension turns
// the diamond's SPM inequality into an SBM one).
struct ShapeView {
  TreatmentLattice lattice;
  std::vector<Sublattice4> sublattices;
  std::vector<SublatticeFlags> declared;  // in view coordinates
  std::vector<SublatticeFlags> flags;     // declared plus implied
  std::vector<std::size_t> from_original;

  static ShapeView make(const TreatmentLattice& original, const std::vector<SublatticeFlags>& declared,
                        const std::vector<int>& signs = {});

  CellStats remap(const CellStats& original) const;
};

struct EffectBounds {
  BoundInterval interval;
  std::vector<std::string> notes;
};

// Any distinct pair in view indices: ordered pairs go through ate_bounds
// (swapping and negating when t1 < t2), incomparable pairs fall back to the
// no-assumption difference bounds with a note. Throws SameTreatment.
EffectBounds effect_bounds_any_pair(const ShapeView& view, std::size_t t1, std::size_t t2, const CellStats& stats,
                                    OutcomeBounds K, bool use_flags, bool smtr);

}  // namespace latbounds
