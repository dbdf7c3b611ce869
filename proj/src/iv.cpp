#include "latbounds/iv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "latbounds/errors.hpp"

namespace latbounds {

std::size_t InstrumentCells::level_of(const InstrumentSpec& spec, double x) const {
  if (!spec.bin_edges.empty())
    return static_cast<std::size_t>(std::upper_bound(spec.bin_edges.begin(), spec.bin_edges.end(), x) -
                                    spec.bin_edges.begin());
  auto it = std::lower_bound(level_values.begin(), level_values.end(), x);
  if (it == level_values.end() || *it != x)
    throw EmptyCell("instrument value " + std::to_string(x) + " is not in the observed support");
  return static_cast<std::size_t>(it - level_values.begin());
}

InstrumentCells build_cells(const Dataset& data, const InstrumentSpec& spec) {
  if (!std::is_sorted(spec.bin_edges.begin(), spec.bin_edges.end()) ||
      std::adjacent_find(spec.bin_edges.begin(), spec.bin_edges.end()) != spec.bin_edges.end())
    throw Error("instrument bin edges must be strictly increasing");
  InstrumentCells cells;
  if (spec.bin_edges.empty()) {
    std::set<double> values;
    for (std::size_t i = 0; i < data.size(); ++i) values.insert(data.row(i).x.at(spec.column));
    cells.level_values.assign(values.begin(), values.end());
  } else {
    cells.level_values.push_back(-std::numeric_limits<double>::infinity());
    cells.level_values.insert(cells.level_values.end(), spec.bin_edges.begin(), spec.bin_edges.end());
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Row& r = data.row(i);
    std::vector<double> key;
    for (std::size_t c : spec.cell_columns) key.push_back(r.x.at(c));
    auto& g = cells.groups[key];
    if (g.empty()) g.resize(cells.level_values.size());
    g[cells.level_of(spec, r.x.at(spec.column))].push_back(i);
  }
  return cells;
}

IvResult monotone_envelope(const std::vector<std::optional<BoundInterval>>& per_level, std::size_t target,
                           IvDirection direction) {
  if (target >= per_level.size() || !per_level[target])
    throw EmptyCell("target instrument cell has no data");
  IvResult out;
  double lo = per_level[target]->lower, hi = per_level[target]->upper;
  for (std::size_t l = 0; l < per_level.size(); ++l) {
    if (l == target) continue;
    bool below = l < target;
    bool feeds_lower = direction == IvDirection::Modular || (direction == IvDirection::Supermodular) == below;
    bool feeds_upper = direction == IvDirection::Modular || (direction == IvDirection::Supermodular) != below;
    if (!per_level[l]) {
      out.warnings.push_back("instrument level " + std::to_string(l) + " has no data in this cell; skipped");
      continue;
    }
    if (feeds_lower) lo = std::max(lo, per_level[l]->lower);
    if (feeds_upper) hi = std::min(hi, per_level[l]->upper);
  }
  out.interval = BoundInterval::make(lo, hi);
  return out;
}

std::pair<double, double> conditional_B(std::size_t t, const CellStats& cell, OutcomeBounds K) {
  auto b = no_assumption_po_bounds(t, cell, K);
  return {b.lower, b.upper};
}

std::pair<LevelStats, std::size_t> level_stats(const Dataset& data, const InstrumentSpec& spec,
                                               const InstrumentCells& cells, const TargetCell& target) {
  if (target.fixed.size() != spec.cell_columns.size())
    throw Error("target cell must give one value per cell covariate");
  auto it = cells.groups.find(target.fixed);
  if (it == cells.groups.end()) throw EmptyCell("target covariate cell has no data");
  std::size_t level = cells.level_of(spec, target.instrument_value);
  LevelStats out(cells.level_values.size());
  for (std::size_t l = 0; l < out.size(); ++l) {
    double mass = 0.0;
    for (std::size_t i : it->second[l]) mass += data.weight(i);
    if (mass > 0.0) out[l] = cell_stats(data, it->second[l]);
  }
  return {std::move(out), level};
}

namespace {

std::vector<std::optional<BoundInterval>> effect_per_level(std::size_t t1, std::size_t t2, const LevelStats& levels,
                                                           OutcomeBounds K) {
  std::vector<std::optional<BoundInterval>> out(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l)
    if (levels[l]) out[l] = no_assumption_effect_bounds(t1, t2, *levels[l], K);
  return out;
}

}  // namespace

IvResult spmiv_ate_bounds(std::size_t t1, std::size_t t2, const LevelStats& levels, std::size_t target,
                          IvDirection direction, OutcomeBounds K) {
  if (t1 == t2) throw SameTreatment("effect needs two distinct treatments");
  return monotone_envelope(effect_per_level(t1, t2, levels, K), target, direction);
}

IvResult spmiv_po_bounds(std::size_t t1, std::size_t t2, std::size_t which, const LevelStats& levels,
                         std::size_t target, IvDirection direction, OutcomeBounds K) {
  if (which != t1 && which != t2) throw Error("potential outcome must be one of the effect's treatments");
  IvResult delta = spmiv_ate_bounds(t1, t2, levels, target, direction, K);
  const CellStats& cell = *levels[target];
  auto [lo1, hi1] = conditional_B(t1, cell, K);
  auto [lo2, hi2] = conditional_B(t2, cell, K);
  const double dlo = delta.interval.lower, dhi = delta.interval.upper;
  IvResult out;
  out.warnings = std::move(delta.warnings);
  if (which == t1)
    out.interval = BoundInterval::make(std::max(lo1, dlo + lo2), std::min(hi1, dhi + hi2));
  else
    out.interval = BoundInterval::make(std::max(lo2, lo1 - dhi), std::min(hi2, hi1 - dlo));
  return out;
}

IvResult combined_spmiv_shape_bounds(const ShapeView& view, std::size_t t1, std::size_t t2, const LevelStats& levels,
                                     std::size_t target, IvDirection direction, OutcomeBounds K, bool use_flags,
                                     bool smtr) {
  std::vector<std::optional<BoundInterval>> per_level(levels.size());
  std::vector<std::string> notes;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (!levels[l]) continue;
    auto e = effect_bounds_any_pair(view, view.from_original[t1], view.from_original[t2], view.remap(*levels[l]), K,
                                    use_flags, smtr);
    per_level[l] = e.interval;
    if (l == target) notes = std::move(e.notes);
  }
  IvResult out = monotone_envelope(per_level, target, direction);
  out.warnings.insert(out.warnings.end(), notes.begin(), notes.end());
  return out;
}

IvResult spmts_bounds(std::size_t t1, std::size_t t2, const CellStats& stats, OutcomeBounds K) {
  if (t1 == t2) throw SameTreatment("effect needs two distinct treatments");
  // Level 0 is the stratum z=t2, level 1 the stratum z=t1; inside a stratum
  // the realized treatment has probability one.
  LevelStats levels(2);
  for (std::size_t l = 0; l < 2; ++l) {
    std::size_t t = l == 0 ? t2 : t1;
    if (stats.prob[t] == 0.0) continue;
    CellStats c;
    c.prob.assign(stats.prob.size(), 0.0);
    c.mean.assign(stats.prob.size(), 0.0);
    c.prob[t] = 1.0;
    c.mean[t] = stats.mean[t];
    levels[l] = c;
  }
  IvResult out;
  out.warnings.push_back(
      "treatment-selection bounds use the instrument formula by analogy; sharpness is not established");
  double lower = 0.0, upper = 0.0;
  for (std::size_t z = 0; z < stats.prob.size(); ++z) {
    double p = stats.prob[z];
    if (p == 0.0) continue;
    BoundInterval b;
    if (z == t1 || z == t2) {
      b = spmiv_ate_bounds(t1, t2, levels, z == t1 ? 1 : 0, IvDirection::Supermodular, K).interval;
    } else {
      b = BoundInterval::make(K.k_lo - K.k_hi, K.k_hi - K.k_lo);
    }
    lower += p * b.lower;
    upper += p * b.upper;
  }
  out.interval = BoundInterval::make(lower, upper);
  return out;
}

}  // namespace latbounds
