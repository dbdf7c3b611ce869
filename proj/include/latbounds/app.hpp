#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latbounds/config.hpp"
#include "latbounds/estimate.hpp"
#include "latbounds/oracle.hpp"

namespace latbounds {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;
inline constexpr double kVerifyTolerance = 1e-9;

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitFalsified = 2, kExitDisagreement = 3 };

Dataset parse_dataset(const AnalysisConfig& cfg, std::shared_ptr<const TreatmentLattice> T, const std::string& csv);

// Formats with six significant digits and parses the text back, so the report
// and the plot CSV carry the same value.
double round6(double v);
std::string format6(double v);

std::string sha256_hex(const std::string& bytes);

class AnalysisPlan {
 public:
  AnalysisPlan(AnalysisConfig cfg, std::shared_ptr<const TreatmentLattice> T);

  const AnalysisConfig& config() const { return cfg_; }
  const TreatmentLattice& lattice() const { return *T_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& effects() const { return effects_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& dist_effects() const { return dist_effects_; }
  const std::vector<double>& quantiles() const { return quantiles_; }
  const std::vector<std::string>& dist_kinds() const { return dist_kinds_; }
  const ShapeView& plain_view() const { return plain_; }
  const ShapeView& directed_view() const { return directed_; }
  const std::vector<SublatticeFlags>& declared() const { return declared_; }

  // Ladder intervals in effect-major, column-minor order, then per
  // distribution effect and quantile one interval per distribution kind.
  // Slots that cannot be evaluated on this sample hold NaN endpoints.
  std::vector<BoundInterval> evaluate(const Dataset& data, std::vector<std::vector<std::string>>* notes = nullptr,
                                      std::vector<std::string>* warnings = nullptr) const;

  void bind_instrument(const Dataset& data);

 private:
  AnalysisConfig cfg_;
  std::shared_ptr<const TreatmentLattice> T_;
  std::vector<Sublattice4> subs_;
  std::vector<SublatticeFlags> declared_;
  ShapeView plain_, directed_;
  std::vector<std::string> columns_;
  std::vector<std::pair<std::size_t, std::size_t>> effects_, dist_effects_;
  std::vector<double> quantiles_;
  std::vector<std::string> dist_kinds_;
  std::optional<InstrumentSpec> iv_;
  std::optional<InstrumentCells> cells_;
  TargetCell target_;
};

struct RunOptions {
  std::string config_path, data_path, out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> replicates;
  bool quiet = false;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string report_path, plot_path;
  std::size_t empty_intervals = 0;
};

RunResult run_analysis(const RunOptions& opt);

struct VerifyOptions {
  std::string config_path, data_path, out_dir = ".";
  bool quiet = false;
  double perturb = 0.0;  // added to every closed-form lower bound; harness self-test only
};

int run_verify(const VerifyOptions& opt);

struct SynthOptions {
  SynthKind kind = SynthKind::Mixed;
  std::size_t rows = 10000;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
};

void run_synth(const SynthOptions& opt);

}  // namespace latbounds
