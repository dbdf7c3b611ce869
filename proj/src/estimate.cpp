#include "latbounds/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "latbounds/errors.hpp"

namespace latbounds {

Dataset::Dataset(std::shared_ptr<const TreatmentLattice> lattice, std::vector<std::string> covariate_names,
                 std::vector<Row> rows)
    : lattice_(std::move(lattice)),
      names_(std::make_shared<const std::vector<std::string>>(std::move(covariate_names))),
      rows_(std::make_shared<const std::vector<Row>>(std::move(rows))) {
  for (const auto& r : *rows_) {
    if (r.z >= lattice_->size()) throw DataError("row treatment index out of range");
    if (r.x.size() != names_->size()) throw DataError("row covariate count does not match the schema");
  }
}

std::size_t Dataset::covariate_index(const std::string& name) const {
  for (std::size_t k = 0; k < names_->size(); ++k)
    if ((*names_)[k] == name) return k;
  throw DataError("unknown covariate column '" + name + "'");
}

Dataset Dataset::reweighted(std::vector<double> weights) const {
  if (weights.size() != size()) throw DataError("weight vector length does not match the dataset");
  Dataset d = *this;
  d.weights_ = std::move(weights);
  return d;
}

namespace {

struct Accumulator {
  std::vector<double> mass, sum;
  double total = 0.0;
  explicit Accumulator(std::size_t n) : mass(n, 0.0), sum(n, 0.0) {}
  void add(const Row& r, double w) {
    mass[r.z] += w;
    sum[r.z] += w * r.y;
    total += w;
  }
  CellStats finish() const;
};

CellStats Accumulator::finish() const {
  if (total == 0.0) throw EmptyDataset();
  const std::size_t n = mass.size();
  CellStats s;
  s.prob.resize(n);
  s.mean.assign(n, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    s.prob[t] = mass[t] / total;
    if (mass[t] > 0.0) s.mean[t] = sum[t] / mass[t];
  }
  return s;
}

}  // namespace

CellStats cell_stats(const Dataset& data, const RowFilter& filter) {
  Accumulator acc(data.lattice().size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Row& r = data.row(i);
    double w = data.weight(i);
    if (w == 0.0 || (filter && !filter(r))) continue;
    acc.add(r, w);
  }
  return acc.finish();
}

CellStats cell_stats(const Dataset& data, const std::vector<std::size_t>& rows) {
  Accumulator acc(data.lattice().size());
  for (std::size_t i : rows) {
    double w = data.weight(i);
    if (w != 0.0) acc.add(data.row(i), w);
  }
  return acc.finish();
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) throw Error("percentile of an empty sample");
  std::sort(values.begin(), values.end());
  double h = (static_cast<double>(values.size()) - 1.0) * p;
  auto lo = static_cast<std::size_t>(std::floor(h));
  std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::vector<BoundWithCI> bootstrap_bounds(const BoundProcedure& procedure, const Dataset& data,
                                          std::size_t replicates, std::uint64_t seed, double level) {
  if (replicates == 0) throw Error("bootstrap needs at least one replicate");
  if (!(level > 0.0 && level < 1.0)) throw Error("bootstrap level must lie in (0,1)");
  if (data.size() == 0) throw EmptyDataset();

  const auto point = procedure(data);
  const std::size_t m = point.size();
  std::vector<std::vector<double>> lows(m), highs(m);
  std::vector<std::size_t> empties(m, 0), undefined(m, 0);
  for (auto& v : lows) v.reserve(replicates);
  for (auto& v : highs) v.reserve(replicates);

  const std::size_t n = data.size();
  std::vector<double> w(n);
  for (std::size_t r = 0; r < replicates; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) w[pick(rng)] += 1.0;
    std::vector<BoundInterval> rep;
    try {
      rep = procedure(data.reweighted(w));
    } catch (const EmptyCell&) {
      // A resample can lose a cell the full sample has; count it as uninformative.
      rep.assign(m, BoundInterval{std::nan(""), std::nan(""), false});
    }
    if (rep.size() != m) throw Error("bound procedure returned a different number of intervals on a replicate");
    for (std::size_t j = 0; j < m; ++j) {
      if (rep[j].empty) ++empties[j];
      if (std::isnan(rep[j].lower) || std::isnan(rep[j].upper)) {
        ++undefined[j];
        continue;
      }
      lows[j].push_back(rep[j].lower);
      highs[j].push_back(rep[j].upper);
    }
  }

  std::vector<BoundWithCI> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    out[j].point = point[j];
    out[j].replicates = replicates;
    out[j].seed = seed;
    out[j].empty_replicates = empties[j];
    out[j].undefined_replicates = undefined[j];
    if (lows[j].empty()) {
      out[j].ci_lo = out[j].ci_hi = std::nan("");
    } else {
      out[j].ci_lo = percentile(lows[j], (1.0 - level) / 2.0);
      out[j].ci_hi = percentile(highs[j], (1.0 + level) / 2.0);
    }
  }
  return out;
}

BoundWithCI bootstrap_bounds(const std::function<BoundInterval(const Dataset&)>& procedure, const Dataset& data,
                             std::size_t replicates, std::uint64_t seed, double level) {
  BoundProcedure wrapped = [&](const Dataset& d) { return std::vector<BoundInterval>{procedure(d)}; };
  return bootstrap_bounds(wrapped, data, replicates, seed, level).front();
}

}  // namespace latbounds
