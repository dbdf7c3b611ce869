#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latbounds/bounds.hpp"
#include "latbounds/estimate.hpp"

namespace latbounds {

enum class IvDirection { Supermodular, Submodular, Modular };

// x^k is covariate `column`; the cell covariates x^{-k} are held fixed and
// matched exactly. With bin edges e1 < ... < em the instrument has m+1 levels
// (-inf,e1), [e1,e2), ..., [em,inf); without edges each distinct value is a level.
struct InstrumentSpec {
  std::size_t column = 0;
  IvDirection direction = IvDirection::Supermodular;
  std::vector<std::size_t> cell_columns;
  std::vector<double> bin_edges;
};

struct TargetCell {
  double instrument_value = 0.0;
  std::vector<double> fixed;  // values of the cell columns, in cell_columns order
};

// Row indices grouped by x^{-k} value and instrument level.
struct InstrumentCells {
  std::vector<double> level_values;  // distinct values, or bin lower edges (first is -inf)
  std::map<std::vector<double>, std::vector<std::vector<std::size_t>>> groups;

  std::size_t level_of(const InstrumentSpec& spec, double x) const;
};

InstrumentCells build_cells(const Dataset& data, const InstrumentSpec& spec);

struct IvResult {
  BoundInterval interval;
  std::vector<std::string> warnings;
};

// Max of lowers / min of uppers over the instrument levels the direction
// links to `target`. Levels without data are skipped with a warning; a missing
// target level throws EmptyCell.
IvResult monotone_envelope(const std::vector<std::optional<BoundInterval>>& per_level, std::size_t target,
                           IvDirection direction);

// B_lo/B_hi: within-cell no-assumption bounds on E[y(t)|x].
std::pair<double, double> conditional_B(std::size_t t, const CellStats& cell, OutcomeBounds K);

using LevelStats = std::vector<std::optional<CellStats>>;

// Per-level statistics of the target's x^{-k} group (nullopt where a level has
// no rows with positive weight), plus the target's level index.
std::pair<LevelStats, std::size_t> level_stats(const Dataset& data, const InstrumentSpec& spec,
                                               const InstrumentCells& cells, const TargetCell& target);

IvResult spmiv_ate_bounds(std::size_t t1, std::size_t t2, const LevelStats& levels, std::size_t target,
                          IvDirection direction, OutcomeBounds K);

// Bounds on E[y(which)|x] for which in {t1, t2}, combining the cell's own
// no-assumption bounds with the envelope of the effect bounds.
IvResult spmiv_po_bounds(std::size_t t1, std::size_t t2, std::size_t which, const LevelStats& levels,
                         std::size_t target, IvDirection direction, OutcomeBounds K);

// Within-cell shape (and optionally monotone response) bounds combined across
// levels. t1, t2 and the statistics use original lattice indices.
IvResult combined_spmiv_shape_bounds(const ShapeView& view, std::size_t t1, std::size_t t2, const LevelStats& levels,
                                     std::size_t target, IvDirection direction, OutcomeBounds K, bool use_flags,
                                     bool smtr);

// Treatment selection variant: the realized treatment acts as the instrument,
// with the stratum z=t2 below the stratum z=t1 and all other strata unlinked.
// Returns bounds on the unconditional E[y(t1)-y(t2)].
IvResult spmts_bounds(std::size_t t1, std::size_t t2, const CellStats& stats, OutcomeBounds K);

}  // namespace latbounds
