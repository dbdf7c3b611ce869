#include "latbounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>

#include "latbounds/errors.hpp"

namespace latbounds {

namespace {

constexpr double kConstraintSlack = 1e-12;

struct Constraint {
  // a + b >= c + d when kind == Sum; a <= b when kind == Monotone.
  enum Kind { Sum, Monotone } kind;
  std::size_t a, b, c, d;
  std::size_t ready;  // largest index involved
};

std::vector<Constraint> constraints_of(const OracleInstance& inst) {
  std::vector<Constraint> out;
  for (const auto& s : inst.sublattices) {
    const auto& f = inst.flags[s.id];
    std::size_t ready = std::max({s.bottom, s.left, s.right, s.top});
    if (f.spm) out.push_back({Constraint::Sum, s.top, s.bottom, s.left, s.right, ready});
    if (f.sbm) out.push_back({Constraint::Sum, s.left, s.right, s.top, s.bottom, ready});
  }
  if (inst.smtr) {
    const auto& T = inst.lattice;
    for (std::size_t a = 0; a < T.size(); ++a)
      for (std::size_t b = 0; b < T.size(); ++b)
        if (T.less(a, b)) out.push_back({Constraint::Monotone, a, b, 0, 0, std::max(a, b)});
  }
  return out;
}

bool satisfied(const Constraint& c, const std::vector<double>& y) {
  if (c.kind == Constraint::Monotone) return y[c.a] <= y[c.b] + kConstraintSlack;
  return y[c.a] + y[c.b] + kConstraintSlack >= y[c.c] + y[c.d];
}

struct Search {
  const std::vector<double>& grid;
  std::vector<std::vector<const Constraint*>> by_ready;
  std::size_t t1, t2, z;
  double y_obs;
  std::vector<double> y;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void run(std::size_t i) {
    if (i == y.size()) {
      double d = y[t1] - y[t2];
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      return;
    }
    auto try_value = [&](double v) {
      y[i] = v;
      for (const auto* c : by_ready[i])
        if (!satisfied(*c, y)) return;
      run(i + 1);
    };
    if (i == z) {
      try_value(y_obs);
    } else {
      for (double v : grid) try_value(v);
    }
  }
};

}  // namespace

OracleInstance OracleInstance::make(TreatmentLattice T, std::vector<SublatticeFlags> flags, bool smtr,
                                    OutcomeBounds K, std::vector<double> extra_grid) {
  if (T.size() > kOracleMaxPoints) throw BudgetExceeded(T.size(), 2 + extra_grid.size());
  OracleInstance inst;
  inst.sublattices = enumerate_sublattices4(T);
  inst.flags = uniform_flags(inst.sublattices, false, false);
  for (const auto& f : flags) {
    if (f.sublattice_id >= inst.flags.size()) throw Error("flag refers to unknown sublattice");
    inst.flags[f.sublattice_id].spm = inst.flags[f.sublattice_id].spm || f.spm;
    inst.flags[f.sublattice_id].sbm = inst.flags[f.sublattice_id].sbm || f.sbm;
  }
  inst.lattice = std::move(T);
  inst.smtr = smtr;
  inst.K = K;
  inst.extra_grid = std::move(extra_grid);
  return inst;
}

Extrema stratum_extrema(const OracleInstance& inst, std::size_t t1, std::size_t t2, std::size_t z, double y_obs) {
  std::vector<double> grid = {inst.K.k_lo, inst.K.k_hi, y_obs, inst.K.k_lo + inst.K.k_hi - y_obs};
  for (double g : inst.extra_grid)
    if (g >= inst.K.k_lo && g <= inst.K.k_hi) grid.push_back(g);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (inst.lattice.size() > kOracleMaxPoints || grid.size() > kOracleMaxGrid)
    throw BudgetExceeded(inst.lattice.size(), grid.size());

  auto cons = constraints_of(inst);
  Search s{grid, std::vector<std::vector<const Constraint*>>(inst.lattice.size()), t1, t2, z, y_obs,
           std::vector<double>(inst.lattice.size(), 0.0)};
  for (const auto& c : cons) s.by_ready[c.ready].push_back(&c);
  s.run(0);
  if (s.lo > s.hi) return {0.0, 0.0, false};
  return {s.lo, s.hi, true};
}

Extrema population_extrema(const OracleInstance& inst, std::size_t t1, std::size_t t2, const CellStats& stats) {
  Extrema out;
  for (std::size_t z = 0; z < inst.lattice.size(); ++z) {
    double p = stats.prob[z];
    if (p == 0.0) continue;
    auto e = stratum_extrema(inst, t1, t2, z, stats.mean[z]);
    if (!e.feasible) return {0.0, 0.0, false};
    out.min += p * e.min;
    out.max += p * e.max;
  }
  return out;
}

std::optional<SynthKind> parse_synth_kind(const std::string& name) {
  if (name == "supermodular") return SynthKind::Supermodular;
  if (name == "submodular") return SynthKind::Submodular;
  if (name == "smtr") return SynthKind::Smtr;
  if (name == "mixed") return SynthKind::Mixed;
  return std::nullopt;
}

namespace {

// Draws a 2x2 response (indices follow the sorted grid: (0,0),(0,1),(1,0),(1,1)).
std::vector<double> draw_square(std::mt19937_64& rng, std::size_t m, bool super) {
  std::uniform_int_distribution<int> level(0, static_cast<int>(m));
  for (;;) {
    int y00 = level(rng), y01 = level(rng), y10 = level(rng);
    int bound = y10 + y01 - y00;
    int lo = super ? std::max(0, bound) : 0;
    int hi = super ? static_cast<int>(m) : std::min(static_cast<int>(m), bound);
    if (lo > hi) continue;
    int y11 = std::uniform_int_distribution<int>(lo, hi)(rng);
    double s = static_cast<double>(m);
    return {y00 / s, y01 / s, y10 / s, y11 / s};
  }
}

std::size_t draw_index(std::mt19937_64& rng, const std::vector<double>& weights) {
  std::discrete_distribution<std::size_t> d(weights.begin(), weights.end());
  return d(rng);
}

}  // namespace

Population synth_population(const SynthSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Population pop;
  std::vector<Row> rows;
  rows.reserve(spec.size);
  std::shared_ptr<const TreatmentLattice> T;
  std::vector<std::string> names;

  switch (spec.kind) {
    case SynthKind::Supermodular:
    case SynthKind::Submodular: {
      T = std::make_shared<const TreatmentLattice>(TreatmentLattice::grid({{0, 1}, {0, 1}}));
      bool super = spec.kind == SynthKind::Supermodular;
      for (std::size_t i = 0; i < spec.size; ++i) {
        auto y = draw_square(rng, spec.outcome_levels, super);
        // Selection leans toward treatments with high own response.
        std::vector<double> w(4);
        for (std::size_t t = 0; t < 4; ++t) w[t] = 1.0 + y[t];
        std::size_t z = draw_index(rng, w);
        rows.push_back({y[z], z, {}});
        pop.responses.push_back(std::move(y));
      }
      break;
    }
    case SynthKind::Smtr: {
      T = std::make_shared<const TreatmentLattice>(spec.lattice ? *spec.lattice
                                                                : TreatmentLattice::grid({{0, 1}, {0, 1}}));
      const std::size_t L = T->dimension();
      std::vector<int> lo(L), hi(L);
      for (std::size_t k = 0; k < L; ++k) {
        lo[k] = hi[k] = T->at(0)[k];
        for (const auto& p : T->points()) {
          lo[k] = std::min(lo[k], p[k]);
          hi[k] = std::max(hi[k], p[k]);
        }
      }
      const double m = static_cast<double>(spec.outcome_levels);
      for (std::size_t i = 0; i < spec.size; ++i) {
        std::vector<double> wk(L);
        double base = unit(rng), total = 0.0;
        for (auto& v : wk) total += (v = unit(rng));
        std::vector<double> y(T->size());
        for (std::size_t t = 0; t < T->size(); ++t) {
          double s = base;
          for (std::size_t k = 0; k < L; ++k)
            if (hi[k] > lo[k])
              s += (1.0 - base) * wk[k] / total * (T->at(t)[k] - lo[k]) / static_cast<double>(hi[k] - lo[k]);
          y[t] = std::floor(std::min(1.0, s) * m) / m;
        }
        std::vector<double> w(T->size());
        for (std::size_t t = 0; t < T->size(); ++t) w[t] = 1.0 + y[t];
        std::size_t z = draw_index(rng, w);
        rows.push_back({y[z], z, {}});
        pop.responses.push_back(std::move(y));
      }
      break;
    }
    case SynthKind::Mixed: {
      T = std::make_shared<const TreatmentLattice>(TreatmentLattice::grid({{0, 1}, {1, 2, 3, 4}}));
      names = {"pct_nonwhite"};
      std::uniform_int_distribution<int> threshold(1, 5);
      std::uniform_int_distribution<int> late_threshold(2, 5);
      for (std::size_t i = 0; i < spec.size; ++i) {
        double x = unit(rng);
        // Type A: commercial zoning forces commercial use at every density and
        // residential zoning does so from density c0 on. Type B: zoning is
        // irrelevant and use starts at density c. Both are submodular and monotone.
        bool type_a = unit(rng) < 0.15 + 0.6 * x;
        int c = type_a ? late_threshold(rng) : threshold(rng);
        std::vector<double> y(T->size());
        for (std::size_t t = 0; t < T->size(); ++t) {
          int commercial = T->at(t)[0], density = T->at(t)[1];
          y[t] = (type_a && commercial == 1) || density >= c ? 1.0 : 0.0;
        }
        int commercial = unit(rng) < (type_a ? 0.55 : 0.25) ? 1 : 0;
        std::binomial_distribution<int> extra(3, 0.3 + 0.4 * x);
        int density = 1 + extra(rng);
        std::size_t z = T->index_of(TreatmentPoint{commercial, density});
        rows.push_back({y[z], z, {x}});
        pop.responses.push_back(std::move(y));
      }
      break;
    }
  }
  pop.data = Dataset(T, names, std::move(rows));
  return pop;
}

}  // namespace latbounds
