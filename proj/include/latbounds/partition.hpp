#pragma once

#include <cstddef>
#include <vector>

#include "latbounds/lattice.hpp"

namespace latbounds {

struct SublatticeFlags {
  std::size_t sublattice_id = 0;
  bool spm = false;
  bool sbm = false;

  bool mod() const { return spm && sbm; }
  bool spm_only() const { return spm && !sbm; }
  bool sbm_only() const { return sbm && !spm; }
};

// One entry per sublattice, in id order.
std::vector<SublatticeFlags> uniform_flags(const std::vector<Sublattice4>& subs, bool spm, bool sbm);

// Adds every flag implied by chaining declared inequalities: an SPM diamond
// says y(top)-y(left) >= y(right)-y(bottom), i.e. the increment along one edge
// dominates the increment along the parallel edge. Dominance is transitive, so
// a chain of such statements between the two parallel edges of another diamond
// fixes that diamond's flag as well.
std::vector<SublatticeFlags> implied_flags(const TreatmentLattice& T, const std::vector<Sublattice4>& subs,
                                           const std::vector<SublatticeFlags>& declared);

enum class Label { T1 = -1, T2 = 0, L1 = 1, L2, L3, L4, L5, L6, L7, L8, L9, L10, L11, L12, L13 };

int label_number(Label l);  // 1..13, 0 for T1/T2

struct LambdaPartition {
  std::size_t t1 = 0, t2 = 0;
  std::vector<Label> labels;  // indexed by lattice point

  Label operator[](std::size_t t3) const { return labels[t3]; }
};

// Requires t2 < t1 (throws PairNotOrdered). Flags missing for a sublattice count
// as undeclared.
LambdaPartition classify(std::size_t t1, std::size_t t2, const TreatmentLattice& T,
                         const std::vector<Sublattice4>& subs, const std::vector<SublatticeFlags>& flags);

}  // namespace latbounds
