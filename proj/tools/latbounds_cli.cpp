#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "latbounds/app.hpp"
#include "latbounds/errors.hpp"

int main(int argc, char** argv) {
  using namespace latbounds;
  CLI::App app{"Bounds on treatment effects over a lattice of multidimensional treatments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunOptions run_opt;
  std::uint64_t seed = 0;
  std::size_t replicates = 0;
  auto* run = app.add_subcommand("run", "Compute the bound ladder, bootstrap it, and write the report and plot data");
  run->add_option("--config", run_opt.config_path, "Analysis config (YAML)")->required()->check(CLI::ExistingFile);
  run->add_option("--data", run_opt.data_path, "Data CSV")->required()->check(CLI::ExistingFile);
  run->add_option("--out-dir", run_opt.out_dir, "Output directory");
  auto* seed_opt = run->add_option("--seed", seed, "Bootstrap seed (overrides the config)");
  auto* rep_opt = run->add_option("--replicates", replicates, "Bootstrap replicates (overrides the config)")
                      ->check(CLI::PositiveNumber);
  run->add_flag("--quiet", run_opt.quiet, "Suppress the summary table");

  VerifyOptions ver_opt;
  auto* verify = app.add_subcommand("verify", "Compare closed-form bounds with brute-force extrema");
  verify->add_option("--config", ver_opt.config_path, "Analysis config (YAML)")->required()->check(CLI::ExistingFile);
  verify->add_option("--data", ver_opt.data_path, "Data CSV")->required()->check(CLI::ExistingFile);
  verify->add_option("--out-dir", ver_opt.out_dir, "Output directory");
  verify->add_flag("--quiet", ver_opt.quiet, "Suppress the comparison table");
  verify->add_option("--perturb-closed-form", ver_opt.perturb)->group("");

  SynthOptions syn_opt;
  std::string kind = "mixed";
  auto* synth = app.add_subcommand("synth", "Write a synthetic dataset and a matching config");
  synth->add_option("--kind", kind, "supermodular | submodular | smtr | mixed");
  synth->add_option("--rows", syn_opt.rows, "Number of rows")->check(CLI::PositiveNumber);
  synth->add_option("--seed", syn_opt.seed, "Generator seed");
  synth->add_option("--out-dir", syn_opt.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*run) {
      if (*seed_opt) run_opt.seed = seed;
      if (*rep_opt) run_opt.replicates = replicates;
      auto res = run_analysis(run_opt);
      if (res.exit_code == kExitFalsified)
        std::cerr << "falsified: " << res.empty_intervals << " empty interval(s)\n";
      return res.exit_code;
    }
    if (*verify) {
      int code = run_verify(ver_opt);
      if (code == kExitDisagreement) std::cerr << "verify: closed form and oracle disagree\n";
      return code;
    }
    if (*synth) {
      auto k = parse_synth_kind(kind);
      if (!k) throw Error("unknown synth kind '" + kind + "'");
      syn_opt.kind = *k;
      run_synth(syn_opt);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
