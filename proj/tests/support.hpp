#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "latbounds/bounds.hpp"
#include "latbounds/lattice.hpp"
#include "latbounds/partition.hpp"

namespace testgen {

using Rng = std::mt19937_64;
using namespace latbounds;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return uniform01(rng) < p; }

// Random meet/join-closed point set inside a small grid, at most max_points
// points. Starts from a few random seeds and closes them.
inline TreatmentLattice random_lattice(Rng& rng, std::size_t max_points, int max_dim = 3, int max_level = 3) {
  for (;;) {
    int dim = uniform_int(rng, 1, max_dim);
    int seeds = uniform_int(rng, 1, 5);
    std::set<TreatmentPoint> pts;
    for (int s = 0; s < seeds; ++s) {
      std::vector<int> c(dim);
      for (auto& v : c) v = uniform_int(rng, 0, max_level);
      pts.insert(TreatmentPoint{c});
    }
    bool grew = true;
    while (grew && pts.size() <= max_points) {
      grew = false;
      std::vector<TreatmentPoint> v(pts.begin(), pts.end());
      for (const auto& a : v)
        for (const auto& b : v) {
          grew |= pts.insert(meet(a, b)).second;
          grew |= pts.insert(join(a, b)).second;
        }
    }
    if (pts.size() <= max_points) return TreatmentLattice::validate({pts.begin(), pts.end()});
  }
}

inline std::vector<SublatticeFlags> random_flags(Rng& rng, const std::vector<Sublattice4>& subs, double p = 0.4) {
  auto f = uniform_flags(subs, false, false);
  for (auto& x : f) {
    x.spm = coin(rng, p);
    x.sbm = coin(rng, p);
  }
  return f;
}

// Means on a grid of `steps` intervals of [k_lo, k_hi]; probabilities from a
// random composition of `units` equal masses.
inline CellStats random_stats(Rng& rng, std::size_t n, OutcomeBounds K = {}, int steps = 4, int units = 8) {
  CellStats s;
  s.prob.assign(n, 0.0);
  s.mean.assign(n, 0.0);
  for (int u = 0; u < units; ++u) s.prob[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1))] += 1.0;
  for (std::size_t t = 0; t < n; ++t) {
    s.prob[t] /= units;
    s.mean[t] = K.k_lo + (K.k_hi - K.k_lo) * uniform_int(rng, 0, steps) / steps;
  }
  return s;
}

// Every probability vector on a simplex with the given number of units.
inline void for_each_composition(std::size_t n, int units, const std::function<void(const std::vector<double>&)>& f) {
  std::vector<int> c(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      c[i] = left;
      std::vector<double> p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<double>(c[k]) / units;
      f(p);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, units);
}

inline std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(const TreatmentLattice& T) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < T.size(); ++a)
    for (std::size_t b = 0; b < T.size(); ++b)
      if (T.less(b, a)) out.push_back({a, b});
  return out;
}

inline TreatmentLattice grid2x2() { return TreatmentLattice::grid({{0, 1}, {0, 1}}); }
inline TreatmentLattice zoning() { return TreatmentLattice::grid({{0, 1}, {1, 2, 3, 4}}); }

}  // namespace testgen
