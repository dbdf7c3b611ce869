#include "latbounds/bounds.hpp"

#include <map>
#include <tuple>

#include "latbounds/errors.hpp"

namespace latbounds {

BoundInterval no_assumption_po_bounds(std::size_t t, const CellStats& stats, OutcomeBounds K) {
  double p = stats.prob[t];
  double observed = p > 0.0 ? stats.mean[t] * p : 0.0;
  return BoundInterval::make(observed + K.k_lo * (1.0 - p), observed + K.k_hi * (1.0 - p));
}

BoundInterval no_assumption_effect_bounds(std::size_t t1, std::size_t t2, const CellStats& stats, OutcomeBounds K) {
  auto a = no_assumption_po_bounds(t1, stats, K);
  auto b = no_assumption_po_bounds(t2, stats, K);
  return BoundInterval::make(a.lower - b.upper, a.upper - b.lower);
}

StratumKey stratum_key(const TreatmentLattice& T, const LambdaPartition& part, std::size_t z) {
  return {part[z], T.leq(z, part.t2), T.leq(part.t1, z)};
}

BoundInterval pointwise_region(const StratumKey& key, double y, OutcomeBounds K, bool smtr) {
  const double lo = K.k_lo, hi = K.k_hi;
  if (smtr) {
    if (key.below_t2 || key.label == Label::L10 || key.label == Label::L11) return BoundInterval::make(0.0, hi - y);
    if (key.above_t1 || key.label == Label::L7 || key.label == Label::L9) return BoundInterval::make(0.0, y - lo);
    return BoundInterval::make(0.0, hi - lo);
  }
  switch (key.label) {
    case Label::T2:
    case Label::L4:
    case Label::L10:
      return BoundInterval::make(lo - y, hi - y);
    case Label::T1:
    case Label::L1:
    case Label::L7:
      return BoundInterval::make(y - hi, y - lo);
    case Label::L2:
    case Label::L9:
      return BoundInterval::make(lo - hi, y - lo);
    case Label::L6:
    case Label::L11:
      return BoundInterval::make(lo - hi, hi - y);
    case Label::L3:
    case Label::L8:
      return BoundInterval::make(y - hi, hi - lo);
    case Label::L5:
    case Label::L12:
      return BoundInterval::make(lo - y, hi - lo);
    case Label::L13:
      break;
  }
  return BoundInterval::make(lo - hi, hi - lo);
}

BoundInterval ate_bounds(const TreatmentLattice& T, const CellStats& stats, const LambdaPartition& part,
                         OutcomeBounds K, bool smtr) {
  double lower = 0.0, upper = 0.0;
  for (std::size_t z = 0; z < T.size(); ++z) {
    double p = stats.prob[z];
    if (p == 0.0) continue;
    auto r = pointwise_region(stratum_key(T, part, z), stats.mean[z], K, smtr);
    lower += p * r.lower;
    upper += p * r.upper;
  }
  return BoundInterval::make(lower, upper);
}

ShapeView ShapeView::make(const TreatmentLattice& original, const std::vector<SublatticeFlags>& declared,
                          const std::vector<int>& signs) {
  ShapeView v;
  auto orig_subs = enumerate_sublattices4(original);
  if (signs.empty()) {
    v.lattice = original;
    v.from_original.resize(original.size());
    for (std::size_t i = 0; i < original.size(); ++i) v.from_original[i] = i;
  } else {
    v.lattice = original.flipped(signs, &v.from_original);
  }
  v.sublattices = enumerate_sublattices4(v.lattice);
  v.declared = uniform_flags(v.sublattices, false, false);

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> by_corners;
  for (const auto& s : v.sublattices) by_corners[{s.bottom, s.top, s.left}] = s.id;

  for (const auto& f : declared) {
    if (!f.spm && !f.sbm) continue;
    if (f.sublattice_id >= orig_subs.size())
      throw Error("flag refers to unknown sublattice " + std::to_string(f.sublattice_id));
    const auto& s = orig_subs[f.sublattice_id];
    const std::size_t img[4] = {v.from_original[s.bottom], v.from_original[s.left], v.from_original[s.right],
                                v.from_original[s.top]};
    // The incomparable pair of the image is either the old middles or the old corners.
    std::size_t a = img[1], b = img[2];
    bool corners_kept = v.lattice.order(a, b) == Order::Incomparable;
    if (!corners_kept) {
      a = img[0];
      b = img[3];
    }
    std::size_t bottom = v.lattice.meet(a, b), top = v.lattice.join(a, b);
    bool same_set = v.lattice.order(a, b) == Order::Incomparable;
    for (std::size_t p : {bottom, top}) same_set = same_set && (p == img[0] || p == img[1] || p == img[2] || p == img[3]);
    if (!same_set)
      throw Error("monotone direction does not preserve the flagged sublattice with bottom " +
                  to_string(original.at(s.bottom)) + " and top " + to_string(original.at(s.top)));
    std::size_t left = std::min(a, b);
    auto& g = v.declared[by_corners.at({bottom, top, left})];
    g.spm = g.spm || (corners_kept ? f.spm : f.sbm);
    g.sbm = g.sbm || (corners_kept ? f.sbm : f.spm);
  }
  v.flags = implied_flags(v.lattice, v.sublattices, v.declared);
  return v;
}

CellStats ShapeView::remap(const CellStats& original) const {
  CellStats out;
  out.prob.assign(lattice.size(), 0.0);
  out.mean.assign(lattice.size(), 0.0);
  for (std::size_t i = 0; i < from_original.size(); ++i) {
    out.prob[from_original[i]] = original.prob[i];
    out.mean[from_original[i]] = original.mean[i];
  }
  return out;
}

EffectBounds effect_bounds_any_pair(const ShapeView& view, std::size_t t1, std::size_t t2, const CellStats& stats,
                                    OutcomeBounds K, bool use_flags, bool smtr) {
  const auto& T = view.lattice;
  if (t1 == t2) throw SameTreatment("effect needs two distinct treatments, got " + to_string(T.at(t1)) + " twice");
  EffectBounds out;
  const auto no_flags = uniform_flags(view.sublattices, false, false);
  const auto& flags = use_flags ? view.flags : no_flags;
  Order o = T.order(t2, t1);
  if (o == Order::Incomparable) {
    out.interval = no_assumption_effect_bounds(t1, t2, stats, K);
    out.notes.push_back("incomparable treatments: no-assumption bounds reported");
    return out;
  }
  if (o == Order::Less) {
    out.interval = ate_bounds(T, stats, classify(t1, t2, T, view.sublattices, flags), K, smtr);
  } else {
    auto r = ate_bounds(T, stats, classify(t2, t1, T, view.sublattices, flags), K, smtr);
    out.interval = BoundInterval::make(-r.upper, -r.lower);
  }
  return out;
}

}  // namespace latbounds
