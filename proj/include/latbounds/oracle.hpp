#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latbounds/bounds.hpp"
#include "latbounds/estimate.hpp"
#include "latbounds/lattice.hpp"
#include "latbounds/partition.hpp"

namespace latbounds {

inline constexpr std::size_t kOracleMaxPoints = 10;
inline constexpr std::size_t kOracleMaxGrid = 8;

// Brute-force reference: response functions are enumerated on a finite
// outcome grid and filtered by the declared restrictions. Flags are used as
// declared, without closure.
struct OracleInstance {
  TreatmentLattice lattice;
  std::vector<Sublattice4> sublattices;
  std::vector<SublatticeFlags> flags;
  bool smtr = false;
  OutcomeBounds K;
  // Every stratum grid holds k_lo, k_hi, y_obs and its reflection k_lo+k_hi-y_obs
  // (a modular diamond can force that value); extra points are added on top.
  std::vector<double> extra_grid;

  static OracleInstance make(TreatmentLattice T, std::vector<SublatticeFlags> flags, bool smtr, OutcomeBounds K,
                             std::vector<double> extra_grid = {});
};

struct Extrema {
  double min = 0.0;
  double max = 0.0;
  bool feasible = true;
};

// Extrema of y(t1) - y(t2) over completions with y(z) = y_obs.
// Throws BudgetExceeded.
Extrema stratum_extrema(const OracleInstance& inst, std::size_t t1, std::size_t t2, std::size_t z, double y_obs);

// Probability-weighted sum of stratum extrema, with y_obs the cell mean.
Extrema population_extrema(const OracleInstance& inst, std::size_t t1, std::size_t t2, const CellStats& stats);

enum class SynthKind { Supermodular, Submodular, Smtr, Mixed };

std::optional<SynthKind> parse_synth_kind(const std::string& name);

struct SynthSpec {
  SynthKind kind = SynthKind::Mixed;
  std::size_t size = 1000;
  std::uint64_t seed = 1;
  std::size_t outcome_levels = 10;              // outcomes on {0, 1/m, ..., 1}; the mixed kind is binary
  std::optional<TreatmentLattice> lattice;      // Smtr kind only; defaults to the 2x2 grid
};

struct Population {
  Dataset data;
  std::vector<std::vector<double>> responses;  // responses[i][t], t a lattice index
};

// Supermodular / Submodular: 2x2 grid. Mixed: the {0,1}x{1..4} zoning replica
// with submodular, monotone binary responses and a covariate "pct_nonwhite" in
// [0,1] under which conditional effects increase.
Population synth_population(const SynthSpec& spec);

}  // namespace latbounds
