#pragma once

#include <vector>

#include "latbounds/lattice.hpp"
#include "latbounds/partition.hpp"

namespace testgen {

using namespace latbounds;

// Independent reading of the thirteen-set definition: build the three
// diamond families containing t1 and t2, then test every set's predicate
// separately. Returns every j whose predicate holds.
inline std::vector<int> literal_memberships(const TreatmentLattice& T, const std::vector<Sublattice4>& subs,
                                            const std::vector<SublatticeFlags>& flags, std::size_t t1,
                                            std::size_t t2, std::size_t t3) {
  std::vector<const Sublattice4*> mod, spm, sbm;
  for (const auto& s : subs) {
    if (!s.contains(t1) || !s.contains(t2)) continue;
    const auto& f = flags[s.id];
    if (f.spm && f.sbm) mod.push_back(&s);
    else if (f.spm) spm.push_back(&s);
    else if (f.sbm) sbm.push_back(&s);
  }
  auto in_any = [&](const std::vector<const Sublattice4*>& fam) {
    for (auto* s : fam)
      if (s->contains(t3)) return true;
    return false;
  };
  const bool in_mod = in_any(mod), in_spm = in_any(spm), in_sbm = in_any(sbm);
  const auto& a = T.at(t1);
  const auto& b = T.at(t2);
  const auto& c = T.at(t3);
  const bool above = strictly_below(a, c);                               // t2 < t1 < t3
  const bool below = strictly_below(c, b);                               // t3 < t2 < t1
  const bool left = strictly_below(c, a) && incomparable(c, b);          // t3 < t1, t3 || t2
  const bool right = strictly_below(b, c) && incomparable(c, a);         // t2 < t3, t3 || t1
  std::vector<int> out;
  for (int base : {0, 3}) {
    bool order = base == 0 ? above : below;
    if (!order) continue;
    if (in_mod || (in_spm && in_sbm)) out.push_back(base + 1);
    if (!in_mod && !in_sbm && in_spm) out.push_back(base + 2);
    if (!in_mod && !in_spm && in_sbm) out.push_back(base + 3);
  }
  for (int base : {6, 9}) {
    bool order = base == 6 ? left : right;
    if (!order) continue;
    if (in_mod) out.push_back(base + 1);
    if (in_spm) out.push_back(base + 2);
    if (in_sbm) out.push_back(base + 3);
  }
  return out;
}

}  // namespace testgen
