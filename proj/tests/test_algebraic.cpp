#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trsect/real_algebraic.hpp"

using namespace trsect;

TEST_CASE("no real roots") {
  CHECK(isolate_real_roots(UPoly::from_ints({1, 0, 1})).empty());
}

TEST_CASE("sqrt2 isolation") {
  auto roots = isolate_real_roots(UPoly::from_ints({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(compare(roots[0], roots[1]) < 0);
  auto a = roots[1].refined_below(rat(1, 1 << 20));
  // midpoint squared converges to 2
  Rational mid = (a.lo() + a.hi()) / 2;
  CHECK(abs_rat(mid * mid - 2) < rat(1, 1 << 10));
  CHECK(compare(roots[0], Rational(0)) < 0);
}

TEST_CASE("w of the degree-8 boundary polynomial has roots 0 and ~1.714") {
  // 41y^8+43y^7-59y^6-204y^5-60y^4+20y^3+4y^2-y
  UPoly w = UPoly::from_ints({0, -1, 4, 20, -60, -204, -59, 43, 41});
  auto roots = isolate_real_roots(w);
  REQUIRE(roots.size() == 2);
  CHECK(compare(roots[0], Rational(0)) == 0);
  CHECK(compare(roots[1], rat(170, 100)) > 0);
  CHECK(compare(roots[1], rat(172, 100)) < 0);
}

TEST_CASE("sign determination") {
  auto roots = isolate_real_roots(UPoly::from_ints({-2, 0, 1}));
  const auto& sqrt2 = roots[1];
  CHECK(sign_at(sqrt2.defining(), sqrt2) == 0);
  CHECK(sign_at(UPoly::from_ints({-1, 1}), sqrt2) == 1);   // sqrt2 - 1 > 0
  CHECK(sign_at(UPoly::from_ints({2, -1}), sqrt2) == 1);   // 2 - sqrt2 > 0
  CHECK(sign_at(UPoly::from_ints({-3, 2}), sqrt2) == -1);  // 2*sqrt2 - 3 < 0

  // rational point consistency
  auto half = RealAlgebraicNumber::from_rational(rat(1, 2));
  UPoly p = UPoly::from_ints({-1, 0, 4});
  CHECK(sign_at(p, half) == sgn(p.eval(rat(1, 2))));
}

TEST_CASE("refinement keeps the root") {
  auto roots = isolate_real_roots(UPoly::from_ints({-2, 0, 1}));
  RealAlgebraicNumber a = roots[1];
  for (int i = 0; i < 12; ++i) {
    RealAlgebraicNumber b = a.refined();
    CHECK(b.lo() >= a.lo());
    CHECK(b.hi() <= a.hi());
    CHECK(count_real_roots_in(a.defining(), b.lo() - rat(1, 1000000), b.hi()) == 1);
    a = b;
  }
}

TEST_CASE("rational roots are collapsed to points") {
  // y * (y^2 - 2) has the rational root 0 at the centre of the cauchy interval
  UPoly p = UPoly::from_ints({0, -2, 0, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[1].is_rational());
  CHECK(roots[1].rational_value() == 0);
}
