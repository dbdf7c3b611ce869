#include "latbounds/app.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "latbounds/dist.hpp"
#include "latbounds/errors.hpp"
#include "latbounds/partition.hpp"

namespace latbounds {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split_csv_line(const std::string& line, std::size_t lineno) {
  if (line.find('"') != std::string::npos) throw DataError("data:" + std::to_string(lineno) + ": quoted fields are not supported");
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  for (auto& f : out) {
    auto b = f.find_first_not_of(" \t"), e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
  }
  return out;
}

double parse_double(const std::string& s, std::size_t lineno, const std::string& col) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(v))
    throw DataError("data:" + std::to_string(lineno) + ": column '" + col + "' is not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s, std::size_t lineno, const std::string& col) {
  double v = parse_double(s, lineno, col);
  if (v != std::floor(v) || std::fabs(v) > 1e9)
    throw DataError("data:" + std::to_string(lineno) + ": column '" + col + "' must hold integers, got '" + s + "'");
  return static_cast<int>(v);
}

std::string point_label(const TreatmentLattice& T, std::size_t i) { return to_string(T.at(i)); }

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

json number(double v) {
  if (std::isnan(v)) return nullptr;
  return round6(v);
}

std::size_t resolve_point(const TreatmentLattice& T, const TreatmentPoint& p) {
  if (!T.contains(p)) throw ConfigError("effect treatment " + to_string(p) + " is not a lattice point");
  return T.index_of(p);
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::vector<std::string> dedupe(const std::vector<std::string>& v) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  for (const auto& s : v)
    if (seen.insert(s).second) out.push_back(s);
  return out;
}

}  // namespace

double round6(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(format6(v));
}

std::string format6(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr)) throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

Dataset parse_dataset(const AnalysisConfig& cfg, std::shared_ptr<const TreatmentLattice> T, const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw DataError("data: missing header row");
  ++lineno;
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  auto header = split_csv_line(line, lineno);
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < header.size(); ++i) pos[header[i]] = i;
  auto col = [&](const std::string& name) {
    auto it = pos.find(name);
    if (it == pos.end()) throw DataError("data: missing column '" + name + "'");
    return it->second;
  };
  std::vector<std::size_t> dim_cols;
  for (const auto& d : cfg.dimensions) dim_cols.push_back(col(d));
  std::size_t ycol = col(cfg.outcome_column);
  std::vector<std::string> cov_names;
  if (cfg.instrument) {
    cov_names.push_back(cfg.instrument->column);
    for (const auto& c : cfg.instrument->cell_covariates)
      if (c != cfg.instrument->column) cov_names.push_back(c);
  }
  std::vector<std::size_t> cov_cols;
  for (const auto& c : cov_names) cov_cols.push_back(col(c));

  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto f = split_csv_line(line, lineno);
    if (f.size() != header.size())
      throw DataError("data:" + std::to_string(lineno) + ": expected " + std::to_string(header.size()) + " fields, got " +
                      std::to_string(f.size()));
    TreatmentPoint p;
    for (std::size_t d = 0; d < dim_cols.size(); ++d) p.coords.push_back(parse_int(f[dim_cols[d]], lineno, cfg.dimensions[d]));
    if (!T->contains(p))
      throw DataError("data:" + std::to_string(lineno) + ": treatment " + to_string(p) + " is not in the lattice");
    Row r;
    r.z = T->index_of(p);
    r.y = parse_double(f[ycol], lineno, cfg.outcome_column);
    if (r.y < cfg.K.k_lo || r.y > cfg.K.k_hi)
      throw DataError("data:" + std::to_string(lineno) + ": outcome " + f[ycol] + " lies outside [k_lo, k_hi]");
    for (std::size_t c = 0; c < cov_cols.size(); ++c) r.x.push_back(parse_double(f[cov_cols[c]], lineno, cov_names[c]));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw EmptyDataset();
  return Dataset(std::move(T), std::move(cov_names), std::move(rows));
}

AnalysisPlan::AnalysisPlan(AnalysisConfig cfg, std::shared_ptr<const TreatmentLattice> T)
    : cfg_(std::move(cfg)), T_(std::move(T)) {
  subs_ = enumerate_sublattices4(*T_);
  declared_ = resolve_flags(cfg_, *T_, subs_);
  plain_ = ShapeView::make(*T_, declared_);
  directed_ = cfg_.smtr ? ShapeView::make(*T_, declared_, *cfg_.smtr) : plain_;
  const bool shape = cfg_.spm.any() || cfg_.sbm.any();
  columns_.push_back("none");
  if (shape) columns_.push_back("shape");
  if (cfg_.smtr) columns_.push_back("smtr");
  if (shape && cfg_.smtr) columns_.push_back("shape_smtr");
  if (cfg_.instrument) columns_.push_back("iv");
  for (const auto& e : cfg_.effects) effects_.push_back({resolve_point(*T_, e.t1), resolve_point(*T_, e.t2)});
  if (cfg_.distribution && cfg_.distribution->si) {
    const auto& d = *cfg_.distribution;
    std::set<double> qs;
    for (double q : default_quantile_grid()) qs.insert(q);
    qs.insert(d.quantiles.begin(), d.quantiles.end());
    quantiles_.assign(qs.begin(), qs.end());
    if (d.effects.empty()) {
      dist_effects_ = effects_;
    } else {
      for (const auto& e : d.effects) dist_effects_.push_back({resolve_point(*T_, e.t1), resolve_point(*T_, e.t2)});
    }
    dist_kinds_ = {"wd", "refined"};
    if (cfg_.instrument) dist_kinds_.push_back("qspmiv");
  }
}

void AnalysisPlan::bind_instrument(const Dataset& data) {
  if (!cfg_.instrument) return;
  const auto& ic = *cfg_.instrument;
  InstrumentSpec s;
  s.column = data.covariate_index(ic.column);
  s.direction = ic.direction;
  for (const auto& c : ic.cell_covariates) s.cell_columns.push_back(data.covariate_index(c));
  s.bin_edges = ic.bin_edges;
  cells_ = build_cells(data, s);
  iv_ = s;
  target_ = TargetCell{ic.target_value, ic.target_covariates};
}

std::vector<BoundInterval> AnalysisPlan::evaluate(const Dataset& data, std::vector<std::vector<std::string>>* notes,
                                                  std::vector<std::string>* warnings) const {
  const double nan = std::nan("");
  const BoundInterval undefined{nan, nan, false};
  auto warn = [&](const std::string& w) {
    if (warnings) warnings->push_back(w);
  };
  if (notes) notes->assign(effects_.size(), {});
  std::vector<BoundInterval> out;
  const CellStats stats = cell_stats(data);
  const CellStats directed_stats = directed_.remap(stats);
  const bool shape = cfg_.spm.any() || cfg_.sbm.any();

  std::optional<std::pair<LevelStats, std::size_t>> levels;
  if (iv_) {
    try {
      levels = level_stats(data, *iv_, *cells_, target_);
    } catch (const EmptyCell& e) {
      warn(std::string("instrument: ") + e.what());
    }
  }

  for (std::size_t e = 0; e < effects_.size(); ++e) {
    auto [t1, t2] = effects_[e];
    const std::string label = point_label(*T_, t1) + " vs " + point_label(*T_, t2);
    for (const auto& col : columns_) {
      if (col == "iv") {
        if (!levels) {
          out.push_back(undefined);
          continue;
        }
        const ShapeView& v = cfg_.smtr ? directed_ : plain_;
        try {
          auto r = combined_spmiv_shape_bounds(v, t1, t2, levels->first, levels->second, iv_->direction, cfg_.K, shape,
                                               cfg_.smtr.has_value());
          out.push_back(r.interval);
          for (const auto& w : r.warnings) warn(label + ": " + w);
        } catch (const EmptyCell& ex) {
          out.push_back(undefined);
          warn(label + ": " + ex.what());
        }
        continue;
      }
      const bool use_smtr = col == "smtr" || col == "shape_smtr";
      const bool use_flags = col == "shape" || col == "shape_smtr";
      const ShapeView& v = use_smtr ? directed_ : plain_;
      auto r = effect_bounds_any_pair(v, v.from_original[t1], v.from_original[t2], use_smtr ? directed_stats : stats,
                                      cfg_.K, use_flags, use_smtr);
      out.push_back(r.interval);
      if (notes && col == "none") (*notes)[e] = r.notes;
    }
  }

  if (dist_effects_.empty()) return out;

  std::vector<std::vector<double>> vals(T_->size()), wts(T_->size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data.weight(i) <= 0.0) continue;
    vals[data.row(i).z].push_back(data.row(i).y);
    wts[data.row(i).z].push_back(data.weight(i));
  }
  std::vector<StepDistribution> marginals(T_->size());
  std::vector<bool> have(T_->size(), false);
  for (std::size_t t = 0; t < T_->size(); ++t) {
    if (vals[t].empty()) continue;
    marginals[t] = StepDistribution::from_weights(vals[t], wts[t]);
    have[t] = true;
  }
  const bool all_cells = std::all_of(have.begin(), have.end(), [](bool b) { return b; });

  const std::vector<std::vector<std::size_t>>* groups = nullptr;
  if (iv_) {
    auto it = cells_->groups.find(target_.fixed);
    if (it != cells_->groups.end()) groups = &it->second;
  }

  for (auto [t1, t2] : dist_effects_) {
    const std::string label = point_label(*T_, t1) + " vs " + point_label(*T_, t2);
    LevelMarginals lm;
    std::size_t target_level = 0;
    if (groups) {
      target_level = cells_->level_of(*iv_, target_.instrument_value);
      for (const auto& g : *groups) {
        std::vector<double> v1, w1, v2, w2;
        for (std::size_t i : g) {
          double w = data.weight(i);
          if (w <= 0.0) continue;
          const Row& r = data.row(i);
          if (r.z == t1) v1.push_back(r.y), w1.push_back(w);
          if (r.z == t2) v2.push_back(r.y), w2.push_back(w);
        }
        if (v1.empty() || v2.empty()) lm.emplace_back();
        else lm.emplace_back(std::pair{StepDistribution::from_weights(v1, w1), StepDistribution::from_weights(v2, w2)});
      }
    }
    if (!have[t1] || !have[t2]) warn(label + ": a treatment cell is empty; distribution bounds undefined");
    else if (!all_cells) warn(label + ": some treatment cell is empty; refined quantile bounds undefined");
    for (double q : quantiles_) {
      if (have[t1] && have[t2]) {
        out.push_back(wd_quantile_bounds(marginals[t1], marginals[t2], q));
        out.push_back(all_cells ? dominance_refined_quantile_bounds(plain_.sublattices, plain_.flags, marginals, t1, t2, q).bounds
                                : undefined);
      } else {
        out.push_back(undefined);
        out.push_back(undefined);
      }
      if (iv_) {
        if (lm.empty()) {
          out.push_back(undefined);
          continue;
        }
        try {
          auto r = qspmiv_quantile_bounds(lm, q, target_level, iv_->direction);
          out.push_back(r.interval);
          for (const auto& w : r.warnings) warn(label + " quantiles: " + w);
        } catch (const EmptyCell& ex) {
          out.push_back(undefined);
          warn(label + " quantiles: " + ex.what());
        }
      }
    }
  }
  return out;
}

RunResult run_analysis(const RunOptions& opt) {
  const std::string cfg_text = read_file(opt.config_path);
  AnalysisConfig cfg = parse_config(cfg_text);
  if (opt.seed) cfg.bootstrap.seed = *opt.seed;
  if (opt.replicates) {
    if (*opt.replicates == 0) throw Error("replicates must be at least 1");
    cfg.bootstrap.replicates = *opt.replicates;
  }
  auto T = std::make_shared<const TreatmentLattice>(cfg.lattice());
  AnalysisPlan plan(cfg, T);
  const std::string data_text = read_file(opt.data_path);
  Dataset data = parse_dataset(cfg, T, data_text);
  plan.bind_instrument(data);

  std::vector<std::vector<std::string>> notes;
  std::vector<std::string> warnings;
  if (cfg.distribution && !cfg.distribution->si) warnings.push_back("distribution block skipped: si is false");
  plan.evaluate(data, &notes, &warnings);
  BoundProcedure proc = [&plan](const Dataset& d) { return plan.evaluate(d); };
  auto cis = bootstrap_bounds(proc, data, cfg.bootstrap.replicates, cfg.bootstrap.seed, cfg.bootstrap.level);

  std::size_t empty = 0;
  for (const auto& c : cis)
    if (c.point.empty) ++empty;

  auto interval_json = [](const BoundWithCI& c) {
    json j;
    j["lower"] = number(c.point.lower);
    j["upper"] = number(c.point.upper);
    j["empty"] = c.point.empty;
    j["ci_lo"] = number(c.ci_lo);
    j["ci_hi"] = number(c.ci_hi);
    j["empty_replicates"] = c.empty_replicates;
    j["undefined_replicates"] = c.undefined_replicates;
    return j;
  };

  json r;
  r["schema_version"] = kReportSchemaVersion;
  r["provenance"] = {{"version", kVersion},
                     {"config_sha256", sha256_hex(cfg_text)},
                     {"data_sha256", sha256_hex(data_text)},
                     {"seed", cfg.bootstrap.seed},
                     {"replicates", cfg.bootstrap.replicates},
                     {"level", cfg.bootstrap.level},
                     {"rows", data.size()}};
  json pts = json::array();
  for (const auto& p : T->points()) pts.push_back(to_string(p));
  r["lattice"] = {{"dimensions", cfg.dimensions}, {"points", pts}, {"diamonds", plan.plain_view().sublattices.size()}};
  auto count = [](const std::vector<SublatticeFlags>& f, bool spm) {
    std::size_t n = 0;
    for (const auto& x : f) n += spm ? x.spm : x.sbm;
    return n;
  };
  json a;
  a["smtr"] = cfg.smtr ? json(*cfg.smtr) : json(nullptr);
  a["spm_declared"] = count(plan.declared(), true);
  a["sbm_declared"] = count(plan.declared(), false);
  a["spm_implied"] = count(plan.plain_view().flags, true);
  a["sbm_implied"] = count(plan.plain_view().flags, false);
  r["assumptions"] = a;
  r["assumption_sets"] = plan.columns();

  const auto& cols = plan.columns();
  std::ostringstream plot;
  plot << "effect_t1,effect_t2,assumption_set,lower,upper,ci_lo,ci_hi\n";
  json effects = json::array();
  std::size_t k = 0;
  for (std::size_t e = 0; e < plan.effects().size(); ++e) {
    auto [t1, t2] = plan.effects()[e];
    json ej;
    ej["t1"] = point_label(*T, t1);
    ej["t2"] = point_label(*T, t2);
    ej["notes"] = notes[e];
    json b;
    for (const auto& col : cols) {
      const auto& c = cis[k++];
      b[col] = interval_json(c);
      plot << csv_field(point_label(*T, t1)) << ',' << csv_field(point_label(*T, t2)) << ',' << col << ','
           << format6(c.point.lower) << ',' << format6(c.point.upper) << ',' << format6(c.ci_lo) << ','
           << format6(c.ci_hi) << '\n';
    }
    ej["bounds"] = b;
    effects.push_back(ej);
  }
  r["effects"] = effects;

  if (!plan.dist_effects().empty()) {
    json d;
    d["quantiles"] = plan.quantiles();
    d["kinds"] = plan.dist_kinds();
    json de = json::array();
    for (auto [t1, t2] : plan.dist_effects()) {
      json ej;
      ej["t1"] = point_label(*T, t1);
      ej["t2"] = point_label(*T, t2);
      std::vector<json> kinds(plan.dist_kinds().size());
      for (auto& kj : kinds)
        for (const char* f : {"lower", "upper", "ci_lo", "ci_hi"}) kj[f] = json::array();
      for (std::size_t qi = 0; qi < plan.quantiles().size(); ++qi) {
        for (std::size_t kk = 0; kk < kinds.size(); ++kk) {
          const auto& c = cis[k++];
          kinds[kk]["lower"].push_back(number(c.point.lower));
          kinds[kk]["upper"].push_back(number(c.point.upper));
          kinds[kk]["ci_lo"].push_back(number(c.ci_lo));
          kinds[kk]["ci_hi"].push_back(number(c.ci_hi));
        }
      }
      json kobj;
      for (std::size_t kk = 0; kk < kinds.size(); ++kk) kobj[plan.dist_kinds()[kk]] = kinds[kk];
      ej["bounds"] = kobj;
      de.push_back(ej);
    }
    d["effects"] = de;
    r["distribution"] = d;
  }

  r["diagnostics"] = {{"falsified", empty > 0}, {"empty_intervals", empty}, {"warnings", dedupe(warnings)}};

  RunResult res;
  res.report_path = (fs::path(opt.out_dir) / cfg.output.report).string();
  res.plot_path = (fs::path(opt.out_dir) / cfg.output.plot).string();
  write_text(res.report_path, r.dump(2) + "\n");
  write_text(res.plot_path, plot.str());
  res.empty_intervals = empty;
  res.exit_code = empty > 0 ? kExitFalsified : kExitOk;

  if (!opt.quiet) {
    k = 0;
    for (auto [t1, t2] : plan.effects()) {
      std::cout << point_label(*T, t1) << " - " << point_label(*T, t2) << '\n';
      for (const auto& col : cols) {
        const auto& c = cis[k++];
        std::cout << "  " << col << ": [" << format6(c.point.lower) << ", " << format6(c.point.upper) << "]  ci ["
                  << format6(c.ci_lo) << ", " << format6(c.ci_hi) << "]" << (c.point.empty ? "  EMPTY" : "") << '\n';
      }
    }
    for (const auto& w : dedupe(warnings)) std::cerr << "warning: " << w << '\n';
    std::cout << "report: " << res.report_path << "\nplot data: " << res.plot_path << '\n';
  }
  return res;
}

int run_verify(const VerifyOptions& opt) {
  AnalysisConfig cfg = load_config(opt.config_path);
  auto T = std::make_shared<const TreatmentLattice>(cfg.lattice());
  if (T->size() > kOracleMaxPoints) throw BudgetExceeded(T->size(), 0);
  cfg.distribution.reset();
  cfg.instrument.reset();
  AnalysisPlan plan(cfg, T);
  Dataset data = parse_dataset(cfg, T, read_file(opt.data_path));
  const CellStats stats = cell_stats(data);
  auto closed = plan.evaluate(data);

  json out;
  out["tolerance"] = kVerifyTolerance;
  json rows = json::array();
  bool disagree = false;
  std::size_t k = 0;
  const auto no_flags = uniform_flags(plan.plain_view().sublattices, false, false);
  for (auto [t1, t2] : plan.effects()) {
    for (const auto& col : plan.columns()) {
      BoundInterval cf = closed[k++];
      cf.lower += opt.perturb;
      cf.empty = cf.lower > cf.upper + kEmptyTolerance;
      json row;
      row["t1"] = point_label(*T, t1);
      row["t2"] = point_label(*T, t2);
      row["assumption_set"] = col;
      row["closed_form"] = {{"lower", cf.lower}, {"upper", cf.upper}, {"empty", cf.empty}};
      const bool use_smtr = col == "smtr" || col == "shape_smtr";
      const bool use_flags = col == "shape" || col == "shape_smtr";
      const ShapeView& v = use_smtr ? plan.directed_view() : plan.plain_view();
      std::size_t a = v.from_original[t1], b = v.from_original[t2];
      if (v.lattice.order(a, b) == Order::Incomparable) {
        row["status"] = "not_checked";
        row["reason"] = "incomparable treatments";
        rows.push_back(row);
        continue;
      }
      auto inst = OracleInstance::make(v.lattice, use_flags ? v.declared : no_flags, use_smtr, cfg.K);
      auto ex = population_extrema(inst, a, b, use_smtr ? v.remap(stats) : stats);
      row["oracle"] = {{"lower", ex.min}, {"upper", ex.max}, {"feasible", ex.feasible}};
      bool ok = ex.feasible ? (!cf.empty && std::fabs(cf.lower - ex.min) <= kVerifyTolerance &&
                               std::fabs(cf.upper - ex.max) <= kVerifyTolerance)
                            : cf.empty;
      row["status"] = ok ? "agree" : "disagree";
      disagree = disagree || !ok;
      rows.push_back(row);
      if (!opt.quiet)
        std::cout << point_label(*T, t1) << " - " << point_label(*T, t2) << " " << col << ": closed ["
                  << cf.lower << ", " << cf.upper << "] oracle [" << ex.min << ", " << ex.max << "] "
                  << (ok ? "agree" : "DISAGREE") << '\n';
    }
  }
  out["comparisons"] = rows;
  out["agree"] = !disagree;
  write_text(fs::path(opt.out_dir) / "verify.json", out.dump(2) + "\n");
  return disagree ? kExitDisagreement : kExitOk;
}

void run_synth(const SynthOptions& opt) {
  SynthSpec spec;
  spec.kind = opt.kind;
  spec.size = opt.rows;
  spec.seed = opt.seed;
  Population pop = synth_population(spec);
  const Dataset& d = pop.data;
  const TreatmentLattice& T = d.lattice();
  const bool zoning = opt.kind == SynthKind::Mixed;
  std::vector<std::string> dims = zoning ? std::vector<std::string>{"commercial", "density"}
                                         : std::vector<std::string>{"d1", "d2"};

  std::ostringstream csv;
  for (const auto& n : dims) csv << n << ',';
  csv << 'y';
  for (const auto& n : d.covariate_names()) csv << ',' << n;
  csv << '\n';
  char buf[40];
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Row& r = d.row(i);
    for (int c : T.at(r.z).coords) csv << c << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.y);
    csv << buf;
    for (double x : r.x) {
      std::snprintf(buf, sizeof buf, "%.17g", x);
      csv << ',' << buf;
    }
    csv << '\n';
  }

  std::ostringstream y;
  y << "lattice:\n  dimensions: [" << dims[0] << ", " << dims[1] << "]\n";
  if (zoning) {
    y << "  levels: [[0, 1], [1, 2, 3, 4]]\n";
  } else {
    y << "  levels: [[0, 1], [0, 1]]\n";
  }
  y << "outcome:\n  column: y\n  k_lo: 0\n  k_hi: 1\n";
  y << "assumptions:\n";
  switch (opt.kind) {
    case SynthKind::Mixed: y << "  smtr: [1, 1]\n  sbm: all\n"; break;
    case SynthKind::Supermodular: y << "  spm: all\n"; break;
    case SynthKind::Submodular: y << "  sbm: all\n"; break;
    case SynthKind::Smtr: y << "  smtr: [1, 1]\n"; break;
  }
  y << "effects:\n";
  if (zoning) {
    for (int dens = 1; dens <= 4; ++dens) y << "  - {t1: [1, " << dens << "], t2: [0, " << dens << "]}\n";
    y << "instrument:\n  column: pct_nonwhite\n  direction: spm\n  bin_edges: [0.25, 0.5, 0.75]\n"
         "  target: {value: 0.5}\n";
  } else {
    y << "  - {t1: [1, 0], t2: [0, 0]}\n  - {t1: [1, 1], t2: [0, 1]}\n  - {t1: [1, 1], t2: [0, 0]}\n";
    y << "distribution:\n  si: true\n  quantiles: [0.1, 0.25, 0.5, 0.75, 0.9]\n";
  }
  y << "bootstrap:\n  replicates: 999\n  seed: " << opt.seed << "\n  level: 0.95\n";
  y << "output:\n  report: report.json\n  plot: plot.csv\n";

  write_text(fs::path(opt.out_dir) / "data.csv", csv.str());
  write_text(fs::path(opt.out_dir) / "config.yaml", y.str());
}

}  // namespace latbounds
