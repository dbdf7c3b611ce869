#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "support.hpp"

namespace testgen {

// Marginal with integer masses out of `units`.
struct UnitMarginal {
  std::vector<double> values;
  std::vector<int> mass;
};

inline UnitMarginal random_marginal(Rng& rng, int max_points, int units, bool integer_values) {
  int k = uniform_int(rng, 1, max_points);
  std::map<double, int> m;
  for (int u = 0; u < units; ++u) {
    double v = integer_values ? uniform_int(rng, 0, 4) * 0.5 : std::round(uniform01(rng) * 1000.0) / 1000.0;
    if (static_cast<int>(m.size()) >= k && !m.count(v)) v = m.begin()->first;
    ++m[v];
  }
  UnitMarginal out;
  for (auto [v, c] : m) {
    out.values.push_back(v);
    out.mass.push_back(c);
  }
  return out;
}

// Visits every coupling with integer cell masses; the callback receives the
// difference atoms (value, mass).
inline void for_each_coupling(const UnitMarginal& a, const UnitMarginal& b,
                              const std::function<void(const std::vector<std::pair<double, int>>&)>& f) {
  const std::size_t n = a.values.size(), m = b.values.size();
  std::vector<int> row = a.mass, col = b.mass;
  std::vector<std::vector<int>> cell(n, std::vector<int>(m, 0));
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == n) {
      std::vector<std::pair<double, int>> atoms;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c)
          if (cell[r][c] > 0) atoms.push_back({a.values[r] - b.values[c], cell[r][c]});
      std::sort(atoms.begin(), atoms.end());
      f(atoms);
      return;
    }
    if (j == m - 1) {
      int v = row[i];
      if (v > col[j]) return;
      cell[i][j] = v;
      row[i] -= v;
      col[j] -= v;
      rec(i + 1, 0);
      row[i] += v;
      col[j] += v;
      cell[i][j] = 0;
      return;
    }
    for (int v = 0; v <= std::min(row[i], col[j]); ++v) {
      cell[i][j] = v;
      row[i] -= v;
      col[j] -= v;
      rec(i, j + 1);
      row[i] += v;
      col[j] += v;
    }
    cell[i][j] = 0;
  };
  rec(0, 0);
}

inline double atoms_cdf(const std::vector<std::pair<double, int>>& atoms, int units, double w) {
  int c = 0;
  for (auto [v, k] : atoms)
    if (v <= w) c += k;
  return static_cast<double>(c) / units;
}

inline double atoms_quantile(const std::vector<std::pair<double, int>>& atoms, int units, double q) {
  int c = 0;
  for (auto [v, k] : atoms) {
    c += k;
    if (c >= q * units - 1e-9) return v;
  }
  return atoms.back().first;
}

}  // namespace testgen
