#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "latbounds/bounds.hpp"
#include "latbounds/lattice.hpp"

namespace latbounds {

struct Row {
  double y = 0.0;
  std::size_t z = 0;  // index into the dataset's lattice
  std::vector<double> x;
};

// Rows are shared between copies; a bootstrap replicate only swaps the weight
// vector (row multiplicities).
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::shared_ptr<const TreatmentLattice> lattice, std::vector<std::string> covariate_names,
          std::vector<Row> rows);

  std::size_t size() const { return rows_ ? rows_->size() : 0; }
  const Row& row(std::size_t i) const { return (*rows_)[i]; }
  double weight(std::size_t i) const { return weights_.empty() ? 1.0 : weights_[i]; }
  const TreatmentLattice& lattice() const { return *lattice_; }
  std::shared_ptr<const TreatmentLattice> lattice_ptr() const { return lattice_; }
  const std::vector<std::string>& covariate_names() const { return *names_; }
  // Throws DataError for unknown names.
  std::size_t covariate_index(const std::string& name) const;

  Dataset reweighted(std::vector<double> weights) const;

 private:
  std::shared_ptr<const TreatmentLattice> lattice_;
  std::shared_ptr<const std::vector<std::string>> names_;
  std::shared_ptr<const std::vector<Row>> rows_;
  std::vector<double> weights_;
};

using RowFilter = std::function<bool(const Row&)>;

// Empirical treatment frequencies and within-treatment means. Throws
// EmptyDataset when no row (with positive weight) passes the filter.
CellStats cell_stats(const Dataset& data, const RowFilter& filter = {});

// Same over an explicit row subset.
CellStats cell_stats(const Dataset& data, const std::vector<std::size_t>& rows);

struct BoundWithCI {
  BoundInterval point;
  double ci_lo = 0.0;  // (1-level)/2 percentile of replicate lower bounds
  double ci_hi = 0.0;  // (1+level)/2 percentile of replicate upper bounds
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  std::size_t empty_replicates = 0;
  std::size_t undefined_replicates = 0;  // resample lost a cell the procedure needs
};

using BoundProcedure = std::function<std::vector<BoundInterval>(const Dataset&)>;

// Percentile bootstrap over row resamples. Replicate r draws from an engine
// seeded with (seed, r), so results do not depend on evaluation order.
std::vector<BoundWithCI> bootstrap_bounds(const BoundProcedure& procedure, const Dataset& data,
                                          std::size_t replicates, std::uint64_t seed, double level = 0.95);

BoundWithCI bootstrap_bounds(const std::function<BoundInterval(const Dataset&)>& procedure, const Dataset& data,
                             std::size_t replicates, std::uint64_t seed, double level = 0.95);

// Linear-interpolation sample quantile (Hyndman-Fan type 7) of unsorted values.
double percentile(std::vector<double> values, double p);

}  // namespace latbounds
