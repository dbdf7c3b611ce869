#include "latbounds/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "latbounds/errors.hpp"
#include "latbounds/partition.hpp"

namespace latbounds {

namespace {

[[noreturn]] void fail(const YAML::Node& n, const std::string& msg) {
  auto m = n.Mark();
  if (m.is_null()) throw ConfigError(msg);
  throw ConfigError(msg, m.line + 1, m.column + 1);
}

void check_keys(const YAML::Node& n, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!n.IsMap()) fail(n, where + " must be a mapping");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& kv : n) {
    auto key = kv.first.as<std::string>();
    if (!ok.count(key)) fail(kv.first, "unknown key '" + key + "' in " + where);
  }
}

YAML::Node require(const YAML::Node& n, const char* key, const std::string& where) {
  auto v = n[key];
  if (!v) fail(n, "missing key '" + std::string(key) + "' in " + where);
  return v;
}

template <class T>
T scalar(const YAML::Node& n, const std::string& what) {
  if (!n.IsScalar()) fail(n, what + " must be a scalar");
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    fail(n, "cannot read " + what);
  }
}

template <class T>
std::vector<T> list(const YAML::Node& n, const std::string& what) {
  if (!n.IsSequence()) fail(n, what + " must be a list");
  std::vector<T> out;
  for (const auto& e : n) out.push_back(scalar<T>(e, what + " entry"));
  return out;
}

TreatmentPoint point(const YAML::Node& n, std::size_t dim, const std::string& what) {
  auto v = list<int>(n, what);
  if (v.size() != dim) fail(n, what + " has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(dim));
  return TreatmentPoint{std::move(v)};
}

FlagDecl flag_decl(const YAML::Node& n, std::size_t dim, const std::string& where) {
  FlagDecl d;
  if (n.IsScalar()) {
    auto s = n.as<std::string>();
    if (s == "all") d.mode = FlagDecl::Mode::All;
    else if (s == "none") d.mode = FlagDecl::Mode::None;
    else fail(n, where + " must be 'all', 'none' or a list of diamonds");
    return d;
  }
  if (!n.IsSequence()) fail(n, where + " must be 'all', 'none' or a list of diamonds");
  d.mode = FlagDecl::Mode::List;
  for (const auto& e : n) {
    check_keys(e, where + " entry", {"bottom", "top", "left"});
    DiamondRef r;
    r.bottom = point(require(e, "bottom", where), dim, "bottom");
    r.top = point(require(e, "top", where), dim, "top");
    if (e["left"]) r.left = point(e["left"], dim, "left");
    r.line = e.Mark().line + 1;
    r.column = e.Mark().column + 1;
    d.diamonds.push_back(std::move(r));
  }
  return d;
}

std::vector<EffectPair> effects(const YAML::Node& n, std::size_t dim) {
  if (!n.IsSequence()) fail(n, "effects must be a list");
  std::vector<EffectPair> out;
  for (const auto& e : n) {
    check_keys(e, "effect", {"t1", "t2"});
    EffectPair p{point(require(e, "t1", "effect"), dim, "t1"), point(require(e, "t2", "effect"), dim, "t2")};
    if (p.t1 == p.t2) fail(e, "effect treatments must differ");
    out.push_back(std::move(p));
  }
  return out;
}

IvDirection direction(const YAML::Node& n) {
  auto s = scalar<std::string>(n, "instrument direction");
  if (s == "spm" || s == "supermodular") return IvDirection::Supermodular;
  if (s == "sbm" || s == "submodular") return IvDirection::Submodular;
  if (s == "mod" || s == "modular") return IvDirection::Modular;
  fail(n, "instrument direction must be spm, sbm or mod");
}

AnalysisConfig build(const YAML::Node& root) {
  if (!root || root.IsNull()) throw ConfigError("empty document");
  check_keys(root, "top level",
             {"lattice", "outcome", "assumptions", "effects", "instrument", "distribution", "bootstrap", "output"});
  AnalysisConfig c;

  auto lat = require(root, "lattice", "top level");
  check_keys(lat, "lattice", {"dimensions", "levels", "points"});
  c.dimensions = list<std::string>(require(lat, "dimensions", "lattice"), "dimensions");
  if (c.dimensions.empty()) fail(lat, "lattice needs at least one dimension");
  const std::size_t dim = c.dimensions.size();
  if (lat["levels"]) {
    auto lv = lat["levels"];
    if (!lv.IsSequence() || lv.size() != dim) fail(lv, "levels must list one level set per dimension");
    for (const auto& l : lv) c.levels.push_back(list<int>(l, "levels"));
  }
  if (lat["points"]) {
    auto pts = lat["points"];
    if (!pts.IsSequence()) fail(pts, "points must be a list");
    c.points.emplace();
    for (const auto& p : pts) c.points->push_back(point(p, dim, "point"));
  }
  if (c.levels.empty() && !c.points) fail(lat, "lattice needs levels or points");

  auto out = require(root, "outcome", "top level");
  check_keys(out, "outcome", {"column", "k_lo", "k_hi"});
  c.outcome_column = scalar<std::string>(require(out, "column", "outcome"), "outcome column");
  if (out["k_lo"]) c.K.k_lo = scalar<double>(out["k_lo"], "k_lo");
  if (out["k_hi"]) c.K.k_hi = scalar<double>(out["k_hi"], "k_hi");
  if (!(c.K.k_lo < c.K.k_hi)) fail(out, "k_lo must be below k_hi");

  if (auto a = root["assumptions"]) {
    check_keys(a, "assumptions", {"smtr", "spm", "sbm"});
    if (auto s = a["smtr"]) {
      if (s.IsScalar()) {
        auto v = s.as<std::string>();
        if (v != "off") fail(s, "smtr must be 'off' or a direction vector");
      } else {
        auto signs = list<int>(s, "smtr direction");
        if (signs.size() != dim) fail(s, "smtr direction needs one sign per dimension");
        for (int v : signs)
          if (v != 1 && v != -1) fail(s, "smtr direction entries must be 1 or -1");
        c.smtr = signs;
      }
    }
    if (a["spm"]) c.spm = flag_decl(a["spm"], dim, "spm");
    if (a["sbm"]) c.sbm = flag_decl(a["sbm"], dim, "sbm");
  }

  c.effects = effects(require(root, "effects", "top level"), dim);
  if (c.effects.empty()) fail(root["effects"], "effects must not be empty");

  if (auto iv = root["instrument"]) {
    check_keys(iv, "instrument", {"column", "direction", "cell_covariates", "bin_edges", "target"});
    InstrumentConfig ic;
    ic.column = scalar<std::string>(require(iv, "column", "instrument"), "instrument column");
    if (iv["direction"]) ic.direction = direction(iv["direction"]);
    if (iv["cell_covariates"]) ic.cell_covariates = list<std::string>(iv["cell_covariates"], "cell_covariates");
    if (iv["bin_edges"]) ic.bin_edges = list<double>(iv["bin_edges"], "bin_edges");
    auto t = require(iv, "target", "instrument");
    check_keys(t, "instrument target", {"value", "covariates"});
    ic.target_value = scalar<double>(require(t, "value", "instrument target"), "target value");
    if (t["covariates"]) ic.target_covariates = list<double>(t["covariates"], "target covariates");
    if (ic.target_covariates.size() != ic.cell_covariates.size())
      fail(t, "target covariates must match cell_covariates in length");
    c.instrument = std::move(ic);
  }

  if (auto d = root["distribution"]) {
    check_keys(d, "distribution", {"si", "quantiles", "effects"});
    DistributionConfig dc;
    if (d["si"]) dc.si = scalar<bool>(d["si"], "si");
    if (d["quantiles"]) {
      dc.quantiles = list<double>(d["quantiles"], "quantiles");
      for (double q : dc.quantiles)
        if (!(q >= 0.0 && q <= 1.0)) fail(d["quantiles"], "quantiles must lie in [0,1]");
    }
    if (d["effects"]) dc.effects = effects(d["effects"], dim);
    c.distribution = std::move(dc);
  }

  if (auto b = root["bootstrap"]) {
    check_keys(b, "bootstrap", {"replicates", "seed", "level"});
    if (b["replicates"]) {
      auto r = scalar<long long>(b["replicates"], "replicates");
      if (r < 1) fail(b["replicates"], "replicates must be at least 1");
      c.bootstrap.replicates = static_cast<std::size_t>(r);
    }
    if (b["seed"]) c.bootstrap.seed = scalar<std::uint64_t>(b["seed"], "seed");
    if (b["level"]) {
      c.bootstrap.level = scalar<double>(b["level"], "level");
      if (!(c.bootstrap.level > 0.0 && c.bootstrap.level < 1.0)) fail(b["level"], "level must lie in (0,1)");
    }
  }

  if (auto o = root["output"]) {
    check_keys(o, "output", {"report", "plot"});
    if (o["report"]) c.output.report = scalar<std::string>(o["report"], "report path");
    if (o["plot"]) c.output.plot = scalar<std::string>(o["plot"], "plot path");
  }
  return c;
}

}  // namespace

TreatmentLattice AnalysisConfig::lattice() const {
  if (points) return TreatmentLattice::validate(*points);
  return TreatmentLattice::grid(levels);
}

AnalysisConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  return build(root);
}

AnalysisConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

std::vector<SublatticeFlags> resolve_flags(const AnalysisConfig& cfg, const TreatmentLattice& T,
                                           const std::vector<Sublattice4>& subs) {
  auto flags = uniform_flags(subs, cfg.spm.mode == FlagDecl::Mode::All, cfg.sbm.mode == FlagDecl::Mode::All);
  auto apply = [&](const FlagDecl& d, bool is_spm) {
    for (const auto& r : d.diamonds) {
      auto where = [&](const std::string& m) { return ConfigError(m, r.line, r.column); };
      if (!T.contains(r.bottom) || !T.contains(r.top)) throw where("diamond corner is not a lattice point");
      std::size_t b = T.index_of(r.bottom), t = T.index_of(r.top);
      std::vector<const Sublattice4*> hits;
      for (const auto& s : subs) {
        if (s.bottom != b || s.top != t) continue;
        if (r.left && !(T.at(s.left) == *r.left || T.at(s.right) == *r.left)) continue;
        hits.push_back(&s);
      }
      if (hits.empty()) throw where("no diamond with bottom " + to_string(r.bottom) + " and top " + to_string(r.top));
      if (hits.size() > 1) throw where("several diamonds share this bottom and top; give 'left' to pick one");
      (is_spm ? flags[hits.front()->id].spm : flags[hits.front()->id].sbm) = true;
    }
  };
  apply(cfg.spm, true);
  apply(cfg.sbm, false);
  return flags;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace latbounds
