#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trsect/upoly.hpp"

using namespace trsect;

namespace {

UPoly random_poly(std::mt19937& rng, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg), coef(-9, 9);
  std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& v : c) v = Rational(coef(rng));
  return UPoly(std::move(c));
}

}  // namespace

TEST_CASE("arithmetic basics") {
  UPoly p = UPoly::from_ints({-1, 0, 1});  // y^2 - 1
  UPoly q = UPoly::from_ints({-1, 1});     // y - 1
  CHECK((q * UPoly::from_ints({1, 1})) == p);
  auto [quo, rem] = p.divmod(q);
  CHECK(rem.is_zero());
  CHECK(quo == UPoly::from_ints({1, 1}));
}

TEST_CASE("gcd") {
  UPoly p = UPoly::from_ints({-1, 0, 1});
  UPoly q = UPoly::from_ints({-1, 1});
  CHECK(gcd_upoly(p, q) == q);
  CHECK(gcd_upoly(UPoly::x(), UPoly()) == UPoly::x());

  // random common factor: gcd(p*h, q*h) is a multiple of monic(h)
  std::mt19937 rng(7);
  for (int it = 0; it < 40; ++it) {
    UPoly h = random_poly(rng, 3);
    if (h.is_zero() || h.degree() == 0) continue;
    UPoly a = random_poly(rng, 3), b = random_poly(rng, 3);
    if (a.is_zero() || b.is_zero()) continue;
    UPoly g = gcd_upoly(a * h, b * h);
    auto q2 = g.div_exact(h.monic());
    CHECK(q2.has_value());
    CHECK((a * h).div_exact(g).has_value());
    CHECK((b * h).div_exact(g).has_value());
  }
}

TEST_CASE("squarefree part") {
  UPoly p = UPoly::from_ints({1, -2, 1});  // (y-1)^2
  CHECK(squarefree_part(p) == UPoly::from_ints({-1, 1}));
  UPoly q = UPoly::from_ints({-2, 0, 1});  // y^2-2 already squarefree
  CHECK(squarefree_part(q) == q);
  CHECK_THROWS_AS(squarefree_part(UPoly()), ZeroPolynomial);

  // p = y*(y-3)^3 -> y*(y-3), checked via gcd
  UPoly y = UPoly::x();
  UPoly f = y * UPoly::from_ints({-3, 1}) * UPoly::from_ints({-3, 1}) * UPoly::from_ints({-3, 1});
  UPoly sf = squarefree_part(f);
  CHECK(sf == (y * UPoly::from_ints({-3, 1})));
  CHECK(f.div_exact(sf).has_value());
  CHECK(gcd_upoly(sf, sf.derivative()).degree() == 0);
}

TEST_CASE("sturm root counting") {
  CHECK(count_real_roots(UPoly::from_ints({1, 0, 1})) == 0);   // y^2+1
  CHECK(count_real_roots(UPoly::from_ints({-2, 0, 1})) == 2);  // y^2-2
  CHECK(count_real_roots(UPoly::from_ints({0, -3, 0, 1})) == 3);

  std::mt19937 rng(11);
  for (int it = 0; it < 30; ++it) {
    UPoly p = random_poly(rng, 6);
    if (p.is_zero() || p.degree() == 0) continue;
    int n = count_real_roots(p);
    CHECK(n >= 0);
    CHECK(n <= p.degree());
    CHECK((squarefree_part(p).degree() - n) % 2 == 0);
  }
}

TEST_CASE("descartes interval bound is exact at 0 and 1") {
  UPoly p = UPoly::from_ints({-2, 0, 1});
  CHECK(descartes_interval_bound(p, Rational(1), Rational(2)) == 1);
  CHECK(descartes_interval_bound(p, Rational(2), Rational(3)) == 0);
}
