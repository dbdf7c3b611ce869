#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace latbounds {

// A treatment is a vector of integer levels, one per dimension.
// operator<=> is lexicographic and only used for container ordering;
// the product order is exposed through product_leq and friends.
struct TreatmentPoint {
  std::vector<int> coords;

  TreatmentPoint() = default;
  TreatmentPoint(std::initializer_list<int> c) : coords(c) {}
  explicit TreatmentPoint(std::vector<int> c) : coords(std::move(c)) {}

  std::size_t dimension() const { return coords.size(); }
  int operator[](std::size_t k) const { return coords[k]; }

  auto operator<=>(const TreatmentPoint&) const = default;
  bool operator==(const TreatmentPoint&) const = default;
};

std::string to_string(const TreatmentPoint& p);

enum class Order { Less, Greater, Equal, Incomparable };

Order product_leq(const TreatmentPoint& a, const TreatmentPoint& b);

inline bool weakly_below(const TreatmentPoint& a, const TreatmentPoint& b) {
  Order o = product_leq(a, b);
  return o == Order::Less || o == Order::Equal;
}
inline bool strictly_below(const TreatmentPoint& a, const TreatmentPoint& b) {
  return product_leq(a, b) == Order::Less;
}
inline bool incomparable(const TreatmentPoint& a, const TreatmentPoint& b) {
  return product_leq(a, b) == Order::Incomparable;
}

TreatmentPoint meet(const TreatmentPoint& a, const TreatmentPoint& b);
TreatmentPoint join(const TreatmentPoint& a, const TreatmentPoint& b);

// Flips the sign of every coordinate whose entry in `signs` is negative.
TreatmentPoint flip(const TreatmentPoint& p, const std::vector<int>& signs);

// A four-point sublattice {bottom, left, right, top}. Members are indices into
// the parent lattice; left is the lexicographically smaller middle point.
struct Sublattice4 {
  std::size_t id = 0;
  std::size_t bottom = 0, left = 0, right = 0, top = 0;

  bool contains(std::size_t i) const { return i == bottom || i == left || i == right || i == top; }
};

class TreatmentLattice {
 public:
  // Throws EmptySet, DimensionMismatch or NotClosed.
  static TreatmentLattice validate(std::vector<TreatmentPoint> points);

  // Full grid over per-dimension level lists.
  static TreatmentLattice grid(const std::vector<std::vector<int>>& levels);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const TreatmentPoint& at(std::size_t i) const { return points_[i]; }
  const std::vector<TreatmentPoint>& points() const { return points_; }

  bool contains(const TreatmentPoint& p) const { return index_.count(p) != 0; }
  // Throws Error for points outside the lattice.
  std::size_t index_of(const TreatmentPoint& p) const;

  Order order(std::size_t a, std::size_t b) const { return product_leq(points_[a], points_[b]); }
  bool leq(std::size_t a, std::size_t b) const { return weakly_below(points_[a], points_[b]); }
  bool less(std::size_t a, std::size_t b) const { return strictly_below(points_[a], points_[b]); }
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;

  // Image of the lattice under `flip`, with the index mapping old -> new.
  TreatmentLattice flipped(const std::vector<int>& signs, std::vector<std::size_t>* mapping) const;

 private:
  std::size_t dim_ = 0;
  std::vector<TreatmentPoint> points_;  // lexicographically sorted
  std::map<TreatmentPoint, std::size_t> index_;
};

// All four-point non-chain sublattices, ordered by (bottom, top, left).
std::vector<Sublattice4> enumerate_sublattices4(const TreatmentLattice& T);

}  // namespace latbounds
