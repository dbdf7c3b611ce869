#include "latbounds/lattice.hpp"

#include <algorithm>
#include <tuple>

#include "latbounds/errors.hpp"

namespace latbounds {

std::string to_string(const TreatmentPoint& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(p.coords[k]);
  }
  return s + ")";
}

static void check_dims(const TreatmentPoint& a, const TreatmentPoint& b) {
  if (a.dimension() != b.dimension())
    throw DimensionMismatch("dimension mismatch: " + to_string(a) + " vs " + to_string(b));
}

Order product_leq(const TreatmentPoint& a, const TreatmentPoint& b) {
  check_dims(a, b);
  bool le = true, ge = true;
  for (std::size_t k = 0; k < a.coords.size(); ++k) {
    if (a[k] > b[k]) le = false;
    if (a[k] < b[k]) ge = false;
  }
  if (le && ge) return Order::Equal;
  if (le) return Order::Less;
  if (ge) return Order::Greater;
  return Order::Incomparable;
}

TreatmentPoint meet(const TreatmentPoint& a, const TreatmentPoint& b) {
  check_dims(a, b);
  std::vector<int> c(a.coords.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = std::min(a[k], b[k]);
  return TreatmentPoint(std::move(c));
}

TreatmentPoint join(const TreatmentPoint& a, const TreatmentPoint& b) {
  check_dims(a, b);
  std::vector<int> c(a.coords.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = std::max(a[k], b[k]);
  return TreatmentPoint(std::move(c));
}

TreatmentPoint flip(const TreatmentPoint& p, const std::vector<int>& signs) {
  if (signs.size() != p.dimension())
    throw DimensionMismatch("sign vector has " + std::to_string(signs.size()) + " entries, point " +
                            to_string(p) + " has " + std::to_string(p.dimension()));
  std::vector<int> c = p.coords;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (signs[k] < 0) c[k] = -c[k];
  return TreatmentPoint(std::move(c));
}

TreatmentLattice TreatmentLattice::validate(std::vector<TreatmentPoint> points) {
  if (points.empty()) throw EmptySet();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  TreatmentLattice T;
  T.dim_ = points.front().dimension();
  if (T.dim_ == 0) throw DimensionMismatch("treatment points must have at least one dimension");
  for (const auto& p : points)
    if (p.dimension() != T.dim_)
      throw DimensionMismatch("point " + to_string(p) + " has dimension " + std::to_string(p.dimension()) +
                              ", expected " + std::to_string(T.dim_));
  T.points_ = std::move(points);
  for (std::size_t i = 0; i < T.points_.size(); ++i) T.index_.emplace(T.points_[i], i);
  for (std::size_t i = 0; i < T.points_.size(); ++i) {
    for (std::size_t j = i + 1; j < T.points_.size(); ++j) {
      const auto& a = T.points_[i];
      const auto& b = T.points_[j];
      for (const auto& m : {latbounds::join(a, b), latbounds::meet(a, b)})
        if (!T.contains(m)) throw NotClosed(to_string(a), to_string(b), to_string(m));
    }
  }
  return T;
}

TreatmentLattice TreatmentLattice::grid(const std::vector<std::vector<int>>& levels) {
  std::vector<TreatmentPoint> pts{TreatmentPoint{}};
  for (const auto& lv : levels) {
    std::vector<TreatmentPoint> next;
    for (const auto& p : pts)
      for (int v : lv) {
        auto c = p.coords;
        c.push_back(v);
        next.emplace_back(std::move(c));
      }
    pts = std::move(next);
  }
  if (levels.empty()) pts.clear();
  return validate(std::move(pts));
}

std::size_t TreatmentLattice::index_of(const TreatmentPoint& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw Error("treatment " + to_string(p) + " is not in the lattice");
  return it->second;
}

std::size_t TreatmentLattice::meet(std::size_t a, std::size_t b) const {
  return index_of(latbounds::meet(points_[a], points_[b]));
}

std::size_t TreatmentLattice::join(std::size_t a, std::size_t b) const {
  return index_of(latbounds::join(points_[a], points_[b]));
}

TreatmentLattice TreatmentLattice::flipped(const std::vector<int>& signs,
                                           std::vector<std::size_t>* mapping) const {
  std::vector<TreatmentPoint> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) pts.push_back(flip(p, signs));
  TreatmentLattice out = validate(pts);
  if (mapping) {
    mapping->resize(points_.size());
    for (std::size_t i = 0; i < pts.size(); ++i) (*mapping)[i] = out.index_of(pts[i]);
  }
  return out;
}

std::vector<Sublattice4> enumerate_sublattices4(const TreatmentLattice& T) {
  std::vector<Sublattice4> out;
  for (std::size_t a = 0; a < T.size(); ++a) {
    for (std::size_t b = a + 1; b < T.size(); ++b) {
      if (T.order(a, b) != Order::Incomparable) continue;
      Sublattice4 s;
      s.left = a;  // points are sorted, so a is lexicographically smaller
      s.right = b;
      s.bottom = T.meet(a, b);
      s.top = T.join(a, b);
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), [](const Sublattice4& x, const Sublattice4& y) {
    return std::tie(x.bottom, x.top, x.left) < std::tie(y.bottom, y.top, y.left);
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = i;
  return out;
}

}  // namespace latbounds
