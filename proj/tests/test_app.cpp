#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "latbounds/app.hpp"
#include "latbounds/errors.hpp"
#include "support.hpp"

using namespace latbounds;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("latbounds_app_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

const char* kMinimal = R"(lattice:
  dimensions: [a, b]
  levels: [[0, 1], [0, 1]]
outcome:
  column: y
effects:
  - {t1: [1, 0], t2: [0, 0]}
bootstrap:
  replicates: 50
  seed: 3
)";

// Ten rows per cell with means 0.2, 0.6, 0.3, 0.8 at (0,0), (1,0), (0,1), (1,1).
std::string worked_data() {
  std::ostringstream s;
  s << "a,b,y\n";
  auto cell = [&](int a, int b, int ones) {
    for (int i = 0; i < 10; ++i) s << a << ',' << b << ',' << (i < ones ? 1 : 0) << '\n';
  };
  cell(0, 0, 2);
  cell(1, 0, 6);
  cell(0, 1, 3);
  cell(1, 1, 8);
  return s.str();
}

int run_cli(const std::string& args) {
  int rc = std::system((std::string(LATBOUNDS_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("config parsing") {
  auto c = parse_config(kMinimal);
  CHECK(c.dimensions == std::vector<std::string>{"a", "b"});
  CHECK(c.K.k_lo == 0.0);
  CHECK(c.K.k_hi == 1.0);
  CHECK_FALSE(c.smtr);
  CHECK_FALSE(c.spm.any());
  CHECK(c.effects.size() == 1);
  CHECK(c.bootstrap.replicates == 50);
  CHECK(c.lattice().size() == 4);

  auto full = parse_config(R"(lattice:
  dimensions: [c, d]
  points: [[0, 1], [0, 2], [1, 1], [1, 2]]
outcome: {column: y, k_lo: -1, k_hi: 2}
assumptions:
  smtr: [1, -1]
  spm: [{bottom: [0, 1], top: [1, 2]}]
  sbm: none
effects: [{t1: [1, 2], t2: [0, 2]}]
instrument:
  column: x
  direction: sbm
  cell_covariates: [g]
  bin_edges: [0.5]
  target: {value: 0.7, covariates: [1]}
distribution: {si: true, quantiles: [0.5]}
output: {report: r.json, plot: p.csv}
)");
  CHECK(full.points->size() == 4);
  CHECK(full.K.k_lo == -1.0);
  CHECK(*full.smtr == std::vector<int>{1, -1});
  CHECK(full.spm.diamonds.size() == 1);
  CHECK(full.instrument->direction == IvDirection::Submodular);
  CHECK(full.instrument->target_covariates == std::vector<double>{1.0});
  CHECK(full.output.report == "r.json");
}

TEST_CASE("config errors carry line and column") {
  try {
    parse_config(std::string(kMinimal) + "extra: 1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 11);
    CHECK(e.column() == 1);
    CHECK(std::string(e.what()).find("unknown key 'extra'") != std::string::npos);
  }
  try {
    parse_config("lattice:\n  dimensions: [a]\n  levels: [[0, 1]]\noutcome:\n  colum: y\neffects: []\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_config("lattice: [\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(""), ConfigError);
  std::string same = kMinimal;
  same.replace(same.find("t2: [0, 0]"), 10, "t2: [1, 0]");
  CHECK_THROWS_AS(parse_config(same), ConfigError);
  std::string bad_smtr = std::string(kMinimal) + "assumptions: {smtr: [1, 2]}\n";
  CHECK_THROWS_AS(parse_config(bad_smtr), ConfigError);
}

TEST_CASE("declared diamonds resolve against the lattice") {
  auto cube = std::string(R"(lattice:
  dimensions: [a, b, c]
  levels: [[0, 1], [0, 1], [0, 1]]
outcome: {column: y}
effects: [{t1: [1, 0, 0], t2: [0, 0, 0]}]
assumptions:
  spm:
)");
  auto T = TreatmentLattice::grid({{0, 1}, {0, 1}, {0, 1}});
  auto subs = enumerate_sublattices4(T);
  auto ambiguous = parse_config(cube + "    - {bottom: [0, 0, 0], top: [1, 1, 1]}\n");
  CHECK_THROWS_AS(resolve_flags(ambiguous, T, subs), ConfigError);
  auto picked = parse_config(cube + "    - {bottom: [0, 0, 0], top: [1, 1, 1], left: [0, 1, 1]}\n");
  auto f = resolve_flags(picked, T, subs);
  int on = 0;
  for (const auto& x : f) on += x.spm;
  CHECK(on == 1);
  auto missing = parse_config(cube + "    - {bottom: [0, 0, 0], top: [1, 0, 0]}\n");
  CHECK_THROWS_AS(resolve_flags(missing, T, subs), ConfigError);
}

TEST_CASE("data ingestion") {
  auto cfg = parse_config(kMinimal);
  auto T = std::make_shared<const TreatmentLattice>(cfg.lattice());
  auto d = parse_dataset(cfg, T, "a,b,y\n0,0,1\n1,1,0.5\r\n\n");
  CHECK(d.size() == 2);
  CHECK(d.row(1).z == T->index_of({1, 1}));
  CHECK_THROWS_AS(parse_dataset(cfg, T, "a,b,y\n0,2,1\n"), DataError);
  CHECK_THROWS_AS(parse_dataset(cfg, T, "a,b,y\n0,0,1.5\n"), DataError);
  CHECK_THROWS_AS(parse_dataset(cfg, T, "a,y\n0,1\n"), DataError);
  CHECK_THROWS_AS(parse_dataset(cfg, T, "a,b,y\n0,0,x\n"), DataError);
  CHECK_THROWS_AS(parse_dataset(cfg, T, "a,b,y\n0,0\n"), DataError);
  CHECK_THROWS_AS(parse_dataset(cfg, T, "a,b,y\n0.5,0,1\n"), DataError);
  CHECK_THROWS_AS(parse_dataset(cfg, T, "a,b,y\n"), EmptyDataset);
}

TEST_CASE("six-digit formatting round-trips") {
  CHECK(format6(0.725) == "0.725");
  CHECK(format6(-0.0) == "0");
  CHECK(format6(1.0 / 3.0) == "0.333333");
  CHECK(round6(1.0 / 3.0) == 0.333333);
  CHECK(format6(1234567.0) == "1.23457e+06");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("run writes a deterministic report whose plot rows match it") {
  TempDir dir;
  auto cfg = dir.write("c.yaml", kMinimal);
  auto data = dir.write("d.csv", worked_data());
  RunOptions o{cfg, data, (dir.path / "o1").string(), std::nullopt, std::nullopt};
  o.quiet = true;
  auto r1 = run_analysis(o);
  CHECK(r1.exit_code == kExitOk);
  o.out_dir = (dir.path / "o2").string();
  auto r2 = run_analysis(o);
  CHECK(read_file(r1.report_path) == read_file(r2.report_path));
  CHECK(read_file(r1.plot_path) == read_file(r2.plot_path));

  auto rep = nlohmann::json::parse(read_file(r1.report_path));
  CHECK(rep["assumption_sets"] == nlohmann::json::array({"none"}));
  CHECK(rep["effects"].size() == 1);
  CHECK(rep["effects"][0]["bounds"]["none"]["lower"] == -0.65);
  CHECK(rep["effects"][0]["bounds"]["none"]["upper"] == 0.85);

  std::istringstream plot(read_file(r1.plot_path));
  std::string line;
  std::getline(plot, line);
  CHECK(line == "effect_t1,effect_t2,assumption_set,lower,upper,ci_lo,ci_hi");
  std::getline(plot, line);
  auto pos = line.find(",none,");
  REQUIRE(pos != std::string::npos);
  std::istringstream nums(line.substr(pos + 6));
  std::string f;
  const char* keys[] = {"lower", "upper", "ci_lo", "ci_hi"};
  for (const char* k : keys) {
    std::getline(nums, f, ',');
    CHECK(std::stod(f) == rep["effects"][0]["bounds"]["none"][k].get<double>());
  }

  o.seed = 4;
  o.out_dir = (dir.path / "o3").string();
  auto r3 = run_analysis(o);
  auto rep3 = nlohmann::json::parse(read_file(r3.report_path));
  CHECK(rep3["effects"][0]["bounds"]["none"]["lower"] == rep["effects"][0]["bounds"]["none"]["lower"]);
  CHECK(rep3["provenance"]["seed"] == 4);
}

TEST_CASE("run reports falsification through a modular quantile instrument") {
  TempDir dir;
  auto cfg = dir.write("c.yaml", R"(lattice:
  dimensions: [a, b]
  levels: [[0, 1], [0, 1]]
outcome: {column: y}
effects: [{t1: [1, 0], t2: [0, 0]}]
instrument:
  column: x
  direction: mod
  target: {value: 0}
distribution: {si: true, quantiles: [0.5]}
bootstrap: {replicates: 20, seed: 1}
)");
  std::ostringstream s;
  s << "a,b,y,x\n";
  for (int i = 0; i < 5; ++i) s << "1,0,0,0\n0,0,1,0\n1,0,1,1\n0,0,0,1\n";
  auto data = dir.write("d.csv", s.str());
  RunOptions o{cfg, data, dir.path.string(), std::nullopt, std::nullopt};
  o.quiet = true;
  auto r = run_analysis(o);
  CHECK(r.exit_code == kExitFalsified);
  CHECK(r.empty_intervals > 0);
  auto rep = nlohmann::json::parse(read_file(r.report_path));
  CHECK(rep["diagnostics"]["falsified"] == true);
  CHECK(rep["effects"][0]["bounds"]["iv"]["empty"] == false);
  CHECK(run_cli("run --config " + cfg + " --data " + data + " --out-dir " + dir.path.string() + " --quiet") == 2);
}

TEST_CASE("verify agrees on the worked instance and flags a corrupted bound") {
  TempDir dir;
  auto cfg = dir.write("c.yaml", std::string(kMinimal) + "assumptions: {spm: all, smtr: [1, 1]}\n");
  auto data = dir.write("d.csv", worked_data());
  VerifyOptions v{cfg, data, dir.path.string(), true, 0.0};
  CHECK(run_verify(v) == kExitOk);
  auto out = nlohmann::json::parse(read_file((dir.path / "verify.json").string()));
  CHECK(out["comparisons"].size() == 4);
  for (const auto& c : out["comparisons"]) CHECK(c["status"] == "agree");
  v.perturb = 1e-6;
  CHECK(run_verify(v) == kExitDisagreement);
  CHECK(run_cli("verify --config " + cfg + " --data " + data + " --out-dir " + dir.path.string() +
                " --quiet --perturb-closed-form 1e-6") == 3);
}

TEST_CASE("verify on data that contradicts increasing responses") {
  // Observed means fall along the chain (0,0) < (1,0) < (1,1) from one to zero;
  // individual-level monotonicity still admits constant responses, so both
  // sides agree on a nonempty interval.
  TempDir dir;
  auto cfg = dir.write("c.yaml", R"(lattice:
  dimensions: [a, b]
  levels: [[0, 1], [0, 1]]
outcome: {column: y}
assumptions: {smtr: [1, 1]}
effects: [{t1: [1, 1], t2: [0, 0]}, {t1: [1, 0], t2: [0, 0]}]
bootstrap: {replicates: 10}
)");
  auto data = dir.write("d.csv", "a,b,y\n0,0,1\n0,0,1\n1,0,0.5\n1,1,0\n1,1,0\n");
  VerifyOptions v{cfg, data, dir.path.string(), true, 0.0};
  CHECK(run_verify(v) == kExitOk);
  auto out = nlohmann::json::parse(read_file((dir.path / "verify.json").string()));
  for (const auto& c : out["comparisons"]) {
    CHECK(c["status"] == "agree");
    CHECK(c["closed_form"]["empty"] == false);
  }
}

TEST_CASE("command-line error paths") {
  TempDir dir;
  auto data = dir.write("d.csv", worked_data());
  std::string missing = kMinimal;
  missing.replace(missing.find("column: y"), 9, "column: q");
  auto cfg = dir.write("c.yaml", missing);
  CHECK(run_cli("run --config " + cfg + " --data " + data + " --out-dir " + dir.path.string()) == 1);
  auto bad = dir.write("b.yaml", std::string(kMinimal) + "bogus: 1\n");
  CHECK(run_cli("run --config " + bad + " --data " + data) == 1);
  CHECK(run_cli("frobnicate") == 1);
  CHECK(run_cli("synth --kind nope --out-dir " + dir.path.string()) == 1);
}

TEST_CASE("synth writes a dataset and a config that run end to end") {
  TempDir dir;
  for (auto kind : {SynthKind::Mixed, SynthKind::Supermodular, SynthKind::Submodular, SynthKind::Smtr}) {
    SynthOptions s{kind, 400, 11, dir.path.string()};
    run_synth(s);
    RunOptions o{(dir.path / "config.yaml").string(), (dir.path / "data.csv").string(), dir.path.string(),
                 std::nullopt, std::nullopt};
    o.quiet = true;
    o.replicates = 5;
    auto r = run_analysis(o);
    CHECK(r.exit_code == kExitOk);
  }
}
