#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latbounds/bounds.hpp"
#include "latbounds/iv.hpp"
#include "latbounds/lattice.hpp"

namespace latbounds {

struct DiamondRef {
  TreatmentPoint bottom, top;
  std::optional<TreatmentPoint> left;
  int line = -1, column = -1;
};

struct FlagDecl {
  enum class Mode { None, All, List };
  Mode mode = Mode::None;
  std::vector<DiamondRef> diamonds;
  bool any() const { return mode != Mode::None; }
};

struct EffectPair {
  TreatmentPoint t1, t2;
};

struct InstrumentConfig {
  std::string column;
  IvDirection direction = IvDirection::Supermodular;
  std::vector<std::string> cell_covariates;
  std::vector<double> bin_edges;
  double target_value = 0.0;
  std::vector<double> target_covariates;
};

struct DistributionConfig {
  bool si = true;
  std::vector<double> quantiles;
  std::vector<EffectPair> effects;
};

struct BootstrapConfig {
  std::size_t replicates = 999;
  std::uint64_t seed = 1;
  double level = 0.95;
};

struct OutputConfig {
  std::string report = "report.json";
  std::string plot = "plot.csv";
};

struct AnalysisConfig {
  std::vector<std::string> dimensions;
  std::vector<std::vector<int>> levels;
  std::optional<std::vector<TreatmentPoint>> points;
  std::string outcome_column;
  OutcomeBounds K;
  std::optional<std::vector<int>> smtr;  // direction signs, one per dimension
  FlagDecl spm, sbm;
  std::vector<EffectPair> effects;
  std::optional<InstrumentConfig> instrument;
  std::optional<DistributionConfig> distribution;
  BootstrapConfig bootstrap;
  OutputConfig output;

  TreatmentLattice lattice() const;
};

AnalysisConfig parse_config(const std::string& text);
AnalysisConfig load_config(const std::string& path);

// Declared flags resolved against the enumerated diamonds of T.
std::vector<SublatticeFlags> resolve_flags(const AnalysisConfig& cfg, const TreatmentLattice& T,
                                           const std::vector<Sublattice4>& subs);

std::string read_file(const std::string& path);

}  // namespace latbounds
