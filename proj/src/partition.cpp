#include "latbounds/partition.hpp"

#include <map>
#include <utility>

#include "latbounds/errors.hpp"

namespace latbounds {

std::vector<SublatticeFlags> uniform_flags(const std::vector<Sublattice4>& subs, bool spm, bool sbm) {
  std::vector<SublatticeFlags> out;
  out.reserve(subs.size());
  for (const auto& s : subs) out.push_back({s.id, spm, sbm});
  return out;
}

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

std::vector<SublatticeFlags> normalized(const std::vector<Sublattice4>& subs,
                                        const std::vector<SublatticeFlags>& flags) {
  auto out = uniform_flags(subs, false, false);
  for (const auto& f : flags) {
    if (f.sublattice_id >= out.size()) throw Error("flag refers to unknown sublattice " + std::to_string(f.sublattice_id));
    out[f.sublattice_id].spm = out[f.sublattice_id].spm || f.spm;
    out[f.sublattice_id].sbm = out[f.sublattice_id].sbm || f.sbm;
  }
  return out;
}

}  // namespace

std::vector<SublatticeFlags> implied_flags(const TreatmentLattice& T, const std::vector<Sublattice4>& subs,
                                           const std::vector<SublatticeFlags>& declared) {
  (void)T;
  auto flags = normalized(subs, declared);

  std::map<Edge, std::size_t> edge_id;
  auto id = [&](std::size_t a, std::size_t b) {
    auto [it, inserted] = edge_id.emplace(Edge{a, b}, edge_id.size());
    return it->second;
  };
  for (const auto& s : subs) {
    id(s.bottom, s.left);
    id(s.right, s.top);
    id(s.bottom, s.right);
    id(s.left, s.top);
  }
  const std::size_t n = edge_id.size();

  for (bool changed = true; changed;) {
    changed = false;
    // leq[e] lists f with increment(e) <= increment(f).
    std::vector<std::vector<std::size_t>> leq(n);
    for (const auto& s : subs) {
      const auto& f = flags[s.id];
      std::size_t bl = id(s.bottom, s.left), rt = id(s.right, s.top);
      std::size_t br = id(s.bottom, s.right), lt = id(s.left, s.top);
      if (f.spm) {
        leq[bl].push_back(rt);
        leq[br].push_back(lt);
      }
      if (f.sbm) {
        leq[rt].push_back(bl);
        leq[lt].push_back(br);
      }
    }
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t src = 0; src < n; ++src) {
      std::vector<std::size_t> stack{src};
      while (!stack.empty()) {
        std::size_t e = stack.back();
        stack.pop_back();
        for (std::size_t g : leq[e])
          if (!reach[src][g]) {
            reach[src][g] = 1;
            stack.push_back(g);
          }
      }
    }
    for (const auto& s : subs) {
      auto& f = flags[s.id];
      std::size_t bl = id(s.bottom, s.left), rt = id(s.right, s.top);
      std::size_t br = id(s.bottom, s.right), lt = id(s.left, s.top);
      bool spm = reach[bl][rt] || reach[br][lt];
      bool sbm = reach[rt][bl] || reach[lt][br];
      if (spm && !f.spm) f.spm = changed = true;
      if (sbm && !f.sbm) f.sbm = changed = true;
    }
  }
  return flags;
}

int label_number(Label l) {
  int v = static_cast<int>(l);
  return v < 1 ? 0 : v;
}

LambdaPartition classify(std::size_t t1, std::size_t t2, const TreatmentLattice& T,
                         const std::vector<Sublattice4>& subs, const std::vector<SublatticeFlags>& flags) {
  if (!T.less(t2, t1))
    throw PairNotOrdered("classification needs t2 < t1, got t1=" + to_string(T.at(t1)) +
                         " t2=" + to_string(T.at(t2)));
  auto f = normalized(subs, flags);

  std::vector<const Sublattice4*> gamma;
  for (const auto& s : subs)
    if (s.contains(t1) && s.contains(t2)) gamma.push_back(&s);

  LambdaPartition out;
  out.t1 = t1;
  out.t2 = t2;
  out.labels.assign(T.size(), Label::L13);
  out.labels[t1] = Label::T1;
  out.labels[t2] = Label::T2;

  for (std::size_t t3 = 0; t3 < T.size(); ++t3) {
    if (t3 == t1 || t3 == t2) continue;
    bool mod = false, spm = false, sbm = false;
    for (const auto* s : gamma) {
      if (!s->contains(t3)) continue;
      const auto& g = f[s->id];
      mod = mod || g.mod();
      spm = spm || g.spm_only();
      sbm = sbm || g.sbm_only();
    }
    Order o1 = T.order(t3, t1), o2 = T.order(t3, t2);
    int base = 0;
    if (o1 == Order::Greater) base = 1;                                     // t2 < t1 < t3
    else if (o2 == Order::Less) base = 4;                                   // t3 < t2 < t1
    else if (o1 == Order::Less && o2 == Order::Incomparable) base = 7;      // t3 < t1, t3 || t2
    else if (o2 == Order::Greater && o1 == Order::Incomparable) base = 10;  // t2 < t3, t3 || t1
    if (base == 0) continue;

    int offset = -1;
    if (base == 1 || base == 4) {
      if (mod || (spm && sbm)) offset = 0;
      else if (spm) offset = 1;
      else if (sbm) offset = 2;
    } else {
      if (mod) offset = 0;
      else if (spm) offset = 1;
      else if (sbm) offset = 2;
    }
    if (offset >= 0) out.labels[t3] = static_cast<Label>(base + offset);
  }
  return out;
}

}  // namespace latbounds
