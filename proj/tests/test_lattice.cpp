#include <doctest.h>

#include "latbounds/errors.hpp"
#include "latbounds/lattice.hpp"
#include "support.hpp"

using namespace latbounds;

TEST_CASE("product order relations") {
  CHECK(product_leq({0, 0}, {1, 1}) == Order::Less);
  CHECK(product_leq({1, 1}, {0, 0}) == Order::Greater);
  CHECK(product_leq({1, 0}, {0, 1}) == Order::Incomparable);
  CHECK(product_leq({2, 0}, {2, 0}) == Order::Equal);
  CHECK_THROWS_AS(product_leq({0, 0}, {0}), DimensionMismatch);
}

TEST_CASE("meet and join") {
  CHECK(join({2, 0}, {1, 1}) == TreatmentPoint{2, 1});
  CHECK(meet({1, 0}, {0, 1}) == TreatmentPoint{0, 0});
  CHECK(meet({3, 1, 2}, {3, 1, 2}) == TreatmentPoint{3, 1, 2});
  CHECK_THROWS_AS(join({1}, {1, 2}), DimensionMismatch);
}

TEST_CASE("validate accepts closed sets and names a missing point") {
  auto T = TreatmentLattice::validate({{1, 1}, {0, 0}, {1, 0}, {0, 1}});
  CHECK(T.size() == 4);
  CHECK(T.at(0) == TreatmentPoint{0, 0});

  try {
    TreatmentLattice::validate({{0, 0}, {1, 0}, {0, 1}});
    FAIL("expected NotClosed");
  } catch (const NotClosed& e) {
    CHECK(std::set<std::string>{e.a(), e.b()} == std::set<std::string>{"(0,1)", "(1,0)"});
    CHECK(e.missing() == "(1,1)");
  }
  CHECK(testgen::zoning().size() == 8);
  CHECK_THROWS_AS(TreatmentLattice::validate({}), EmptySet);
  CHECK_THROWS_AS(TreatmentLattice::validate({{0, 0}, {1}}), DimensionMismatch);
}

TEST_CASE("diamond enumeration on small lattices") {
  auto subs = enumerate_sublattices4(testgen::grid2x2());
  REQUIRE(subs.size() == 1);
  auto T = testgen::grid2x2();
  CHECK(T.at(subs[0].bottom) == TreatmentPoint{0, 0});
  CHECK(T.at(subs[0].top) == TreatmentPoint{1, 1});
  CHECK(T.at(subs[0].left) == TreatmentPoint{0, 1});

  auto Z = testgen::zoning();
  auto zs = enumerate_sublattices4(Z);
  CHECK(zs.size() == 6);
  for (const auto& s : zs) {
    CHECK(Z.at(s.bottom)[0] == 0);
    CHECK(Z.at(s.top)[0] == 1);
  }

  CHECK(enumerate_sublattices4(TreatmentLattice::validate({{0}, {1}, {2}})).empty());
  // 3x3 grid: pairs {(a,b),(c,d)} with a<c, b>d.
  CHECK(enumerate_sublattices4(TreatmentLattice::grid({{0, 1, 2}, {0, 1, 2}})).size() == 9);
}

TEST_CASE("property: meet and join bracket their arguments") {
  testgen::Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    auto T = testgen::random_lattice(rng, 16);
    for (std::size_t a = 0; a < T.size(); ++a)
      for (std::size_t b = 0; b < T.size(); ++b) {
        std::size_t m = T.meet(a, b), j = T.join(a, b);
        CHECK(T.leq(m, a));
        CHECK(T.leq(m, b));
        CHECK(T.leq(a, j));
        CHECK(T.leq(b, j));
        CHECK(T.at(m) == meet(T.at(a), T.at(b)));
      }
  }
}

TEST_CASE("property: diamond count equals the incomparable-pair scan") {
  testgen::Rng rng(12);
  for (int it = 0; it < 300; ++it) {
    auto T = testgen::random_lattice(rng, 16);
    std::size_t expected = 0;
    for (std::size_t a = 0; a < T.size(); ++a)
      for (std::size_t b = a + 1; b < T.size(); ++b)
        if (incomparable(T.at(a), T.at(b))) ++expected;
    auto subs = enumerate_sublattices4(T);
    CHECK(subs.size() == expected);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const auto& s = subs[i];
      CHECK(s.id == i);
      CHECK(incomparable(T.at(s.left), T.at(s.right)));
      CHECK(T.at(s.left) < T.at(s.right));
      CHECK(s.bottom == T.meet(s.left, s.right));
      CHECK(s.top == T.join(s.left, s.right));
      if (i > 0) {
        const auto& p = subs[i - 1];
        auto key = [&](const Sublattice4& x) { return std::tuple{T.at(x.bottom), T.at(x.top), T.at(x.left)}; };
        CHECK(key(p) < key(s));
      }
    }
  }
}

TEST_CASE("property: composed diamonds share meet and join") {
  testgen::Rng rng(13);
  int checked = 0;
  while (checked < 2000) {
    auto T = testgen::random_lattice(rng, 16);
    for (std::size_t t1 = 0; t1 < T.size(); ++t1)
      for (std::size_t t3 = 0; t3 < T.size(); ++t3) {
        if (T.order(t1, t3) != Order::Incomparable) continue;
        std::size_t t2 = T.meet(t1, t3), t4 = T.join(t1, t3);
        for (std::size_t t5 = 0; t5 < T.size(); ++t5) {
          if (T.order(t4, t5) != Order::Incomparable || T.meet(t4, t5) != t3) continue;
          std::size_t t6 = T.join(t4, t5);
          CHECK(T.meet(t5, t1) == t2);
          CHECK(T.join(t5, t1) == t6);
          ++checked;
        }
      }
  }
}

TEST_CASE("flipped lattice reverses the chosen coordinates") {
  auto Z = testgen::zoning();
  std::vector<std::size_t> map;
  auto F = Z.flipped({1, -1}, &map);
  REQUIRE(F.size() == Z.size());
  for (std::size_t i = 0; i < Z.size(); ++i) {
    CHECK(F.at(map[i])[0] == Z.at(i)[0]);
    CHECK(F.at(map[i])[1] == -Z.at(i)[1]);
  }
  CHECK(F.less(map[Z.index_of({0, 4})], map[Z.index_of({0, 1})]));
}
