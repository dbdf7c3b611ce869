#include <doctest.h>

#include <cmath>

#include "latbounds/errors.hpp"
#include "latbounds/estimate.hpp"
#include "latbounds/iv.hpp"
#include "support.hpp"

using namespace latbounds;
using doctest::Approx;

namespace {

std::shared_ptr<const TreatmentLattice> lattice2x2() {
  return std::make_shared<const TreatmentLattice>(testgen::grid2x2());
}

// z with probabilities 0.1..0.4, y ~ Bernoulli(0.2 + 0.2 t) given z = t.
Dataset known_dgp(std::size_t n, std::uint64_t seed) {
  testgen::Rng rng(seed);
  std::discrete_distribution<int> zd({0.1, 0.2, 0.3, 0.4});
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i) {
    auto z = static_cast<std::size_t>(zd(rng));
    double y = testgen::uniform01(rng) < 0.2 + 0.2 * z ? 1.0 : 0.0;
    rows.push_back({y, z, {}});
  }
  return Dataset(lattice2x2(), {}, rows);
}

}  // namespace

TEST_CASE("cell statistics") {
  Dataset one_each(lattice2x2(), {}, {{0.1, 0, {}}, {0.2, 1, {}}, {0.3, 2, {}}, {0.4, 3, {}}});
  auto s = cell_stats(one_each);
  for (std::size_t t = 0; t < 4; ++t) {
    CHECK(s.prob[t] == 0.25);
    CHECK(s.mean[t] == Approx(0.1 * (t + 1)));
  }
  Dataset all_one(lattice2x2(), {}, {{0.5, 2, {}}, {0.7, 2, {}}});
  auto a = cell_stats(all_one);
  CHECK(a.prob[2] == 1.0);
  CHECK(a.prob[0] == 0.0);
  CHECK(a.mean[2] == Approx(0.6));
  CHECK_THROWS_AS(cell_stats(Dataset(lattice2x2(), {}, {})), EmptyDataset);
  CHECK_THROWS_AS(cell_stats(one_each, [](const Row&) { return false; }), EmptyDataset);
  auto w = cell_stats(one_each.reweighted({3.0, 1.0, 0.0, 0.0}));
  CHECK(w.prob[0] == 0.75);
  CHECK(w.prob[2] == 0.0);
}

TEST_CASE("cell statistics recover a known design") {
  auto d = known_dgp(10000, 71);
  auto s = cell_stats(d);
  const double p[] = {0.1, 0.2, 0.3, 0.4};
  for (std::size_t t = 0; t < 4; ++t) {
    double se_p = std::sqrt(p[t] * (1 - p[t]) / 10000.0);
    CHECK(std::fabs(s.prob[t] - p[t]) < 3 * se_p);
    double mu = 0.2 + 0.2 * t, se_m = std::sqrt(mu * (1 - mu) / (10000.0 * p[t]));
    CHECK(std::fabs(s.mean[t] - mu) < 3 * se_m);
  }
}

TEST_CASE("percentile interpolation") {
  CHECK(percentile({4, 1, 3, 2}, 0.5) == 2.5);
  CHECK(percentile({4, 1, 3, 2}, 0.0) == 1.0);
  CHECK(percentile({4, 1, 3, 2}, 1.0) == 4.0);
  CHECK(percentile({7}, 0.3) == 7.0);
}

TEST_CASE("bootstrap with one replicate reports that replicate") {
  auto d = known_dgp(500, 72);
  std::vector<BoundInterval> seen;
  auto proc = [&](const Dataset& x) {
    auto b = no_assumption_effect_bounds(3, 0, cell_stats(x), {});
    seen.push_back(b);
    return b;
  };
  auto r = bootstrap_bounds(proc, d, 1, 5);
  REQUIRE(seen.size() == 2);
  CHECK(r.ci_lo == seen[1].lower);
  CHECK(r.ci_hi == seen[1].upper);
  CHECK(r.point.lower == seen[0].lower);
  CHECK(r.replicates == 1);
  CHECK(r.seed == 5);
}

TEST_CASE("bootstrap is deterministic and the point ignores the seed") {
  auto d = known_dgp(2000, 73);
  auto proc = [](const Dataset& x) { return no_assumption_effect_bounds(3, 1, cell_stats(x), {}); };
  auto a = bootstrap_bounds(proc, d, 199, 42), b = bootstrap_bounds(proc, d, 199, 42);
  CHECK(a.ci_lo == b.ci_lo);
  CHECK(a.ci_hi == b.ci_hi);
  auto c = bootstrap_bounds(proc, d, 99, 43);
  CHECK(c.point.lower == a.point.lower);
  CHECK(c.point.upper == a.point.upper);
  CHECK(c.ci_lo != a.ci_lo);
  CHECK(a.ci_lo <= a.point.lower);
  CHECK(a.point.upper <= a.ci_hi);
  CHECK_THROWS_AS(bootstrap_bounds(proc, d, 0, 1), Error);
  CHECK_THROWS_AS(bootstrap_bounds(proc, d, 10, 1, 1.0), Error);
}

TEST_CASE("bootstrap intervals shrink for a point-identified quantity") {
  auto width = [](std::size_t n) {
    std::vector<Row> rows;
    testgen::Rng rng(74);
    for (std::size_t i = 0; i < n; ++i) rows.push_back({testgen::uniform01(rng), 0, {}});
    Dataset d(lattice2x2(), {}, rows);
    auto r = bootstrap_bounds([](const Dataset& x) { return no_assumption_po_bounds(0, cell_stats(x), {}); }, d, 199, 3);
    CHECK(r.point.width() == 0.0);
    return r.ci_hi - r.ci_lo;
  };
  double w1 = width(100), w2 = width(10000);
  CHECK(w2 < w1 / 5);
}

TEST_CASE("bootstrap diagnostics count empty and undefined replicates") {
  auto d = known_dgp(300, 75);
  int calls = 0;
  auto proc = [&](const Dataset&) -> BoundInterval {
    ++calls;
    if (calls == 1) return BoundInterval::make(0.0, 1.0);
    if (calls % 3 == 0) throw EmptyCell("lost a cell");
    if (calls % 3 == 1) return BoundInterval::make(0.5, 0.2);
    return BoundInterval::make(0.0, 1.0);
  };
  auto r = bootstrap_bounds(proc, d, 30, 1);
  CHECK(r.undefined_replicates == 10);
  CHECK(r.empty_replicates == 10);
}

TEST_CASE("plug-in instrument bounds are narrower than the population interval on average") {
  // Three instrument levels with identical cells: the max and min over noisy
  // plug-ins move inward.
  auto T = std::make_shared<const TreatmentLattice>(testgen::grid2x2());
  InstrumentSpec spec{0, IvDirection::Supermodular, {}, {}};
  double mean_width = 0.0;
  const int samples = 200;
  testgen::Rng rng(76);
  for (int s = 0; s < samples; ++s) {
    std::vector<Row> rows;
    for (int i = 0; i < 300; ++i) {
      std::size_t z = testgen::coin(rng) ? 3 : 0;
      double p = z == 3 ? 0.6 : 0.4;
      rows.push_back({testgen::coin(rng, p) ? 1.0 : 0.0, z, {double(i % 3)}});
    }
    Dataset d(T, {"x"}, rows);
    auto cells = build_cells(d, spec);
    auto [lv, target] = level_stats(d, spec, cells, {1.0, {}});
    mean_width += spmiv_ate_bounds(3, 0, lv, target, IvDirection::Supermodular, {}).interval.width() / samples;
  }
  // Population cell: P(z=3)=P(z=0)=0.5, means 0.6 and 0.4.
  const double lower = 0.5 * 0.6 - (0.5 * 0.4 + 0.5), upper = (0.5 * 0.6 + 0.5) - 0.5 * 0.4;
  CHECK(mean_width <= upper - lower);
}
