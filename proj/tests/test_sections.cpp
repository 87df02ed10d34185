#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trsect/sections.hpp"

using namespace trsect;

namespace {

const char* kFermat = "coords: x y z\ndegree: 4\nx^4 + y^4 - z^4\n";
const char* kCircle = "coords: x y z\ndegree: 2\nx^2 + y^2 - 25*z^2\n";

}  // namespace

TEST_CASE("curve parsing") {
  auto c = parse_curve_text(kFermat);
  CHECK(c.coords->size() == 3);
  CHECK(c.coords->name(0) == "x");
  REQUIRE(c.degree.has_value());
  CHECK(*c.degree == 4);
  REQUIRE(c.equations.size() == 1);
  CHECK(c.equations[0] == parse_mpoly("x^4 + y^4 - z^4", c.coords));

  CHECK_THROWS_AS(parse_curve_text("coords: x y z\nx^2 + y\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_text("coords: x y z\n"), std::invalid_argument);
  auto commented = parse_curve_text("# a circle\ncoords: x y z\nx^2 + y^2 - 25*z^2 # unit times 5\n");
  CHECK(commented.equations.size() == 1);
}

TEST_CASE("section system in the z chart") {
  auto fermat = parse_curve_text(kFermat);
  auto sp = section_system(fermat, 0, 2);
  CHECK(sp.system.vars->nparams() == 2);
  CHECK(sp.system.vars->nvars() == 1);
  CHECK(sp.delta == 4);
  REQUIRE(sp.param_coord.size() == 2);
  CHECK(sp.param_coord[0] == 1);  // coefficient of y
  CHECK(sp.param_coord[1] == 2);  // the constant term
  // x = -(a1 y + a2) substituted into the dehomogenized quartic
  auto vs = sp.system.vars;
  CHECK(sp.system.equations[0] ==
        parse_mpoly("(a1*y + a2)^4 + y^4 - 1", vs));

  // declared-degree mismatch is detected
  auto wrong = parse_curve_text("coords: x y z\ndegree: 3\nx^4 + y^4 - z^4\n");
  CHECK_THROWS_AS(section_system(wrong, 0, 2), DegreeMismatch);
}

TEST_CASE("hyperplane verification") {
  auto fermat = parse_curve_text(kFermat);
  // x = z meets the quartic in the single 4-fold point [1:0:1]
  auto degenerate = verify_hyperplane(fermat, {Rational(1), Rational(0), Rational(-1)});
  CHECK(degenerate.dim == 4);
  CHECK(degenerate.real == 1);
  CHECK(degenerate.complex_distinct == 1);

  // y = 0 meets it in [1:0:1], [1:0:-1] and a complex pair
  auto axis = verify_hyperplane(fermat, {Rational(0), Rational(1), Rational(0)});
  CHECK(axis.real == 2);
  CHECK(axis.complex_distinct == 4);
  CHECK(axis.dim == 4);
  CHECK(axis.boxes.size() == 2);

  // a secant of the circle: y = 3z hits (4,3) and (-4,3)
  auto circle = parse_curve_text(kCircle);
  auto secant = verify_hyperplane(circle, {Rational(0), Rational(1), Rational(-3)});
  CHECK(secant.real == 2);
  CHECK(secant.complex_distinct == 2);
  REQUIRE(secant.boxes.size() == 2);
  for (const auto& box : secant.boxes) {
    REQUIRE(box.size() == 2);
    // solutions are (x, y) = (+-4, 3)
    CHECK(box[1].first <= Rational(3));
    CHECK(box[1].second >= Rational(3));
  }
}

TEST_CASE("points at infinity") {
  auto fermat = parse_curve_text(kFermat);
  auto [r4, c4] = infinity_points(fermat, 2);
  CHECK(r4 == 0);
  CHECK(c4 == 4);
  auto circle = parse_curve_text(kCircle);
  auto [r2, c2] = infinity_points(circle, 2);
  CHECK(r2 == 0);
  CHECK(c2 == 2);
}

TEST_CASE("totally real section search") {
  // every secant line of a circle is a simple totally real section
  auto circle = parse_curve_text(kCircle);
  auto sv = totally_real_section(circle);
  CHECK(sv.delta == 2);
  REQUIRE(sv.found);
  CHECK(sv.real == 2);
  CHECK(sv.boxes.size() == 2);
  auto check = verify_hyperplane(circle, sv.hyperplane);
  CHECK(check.real == 2);
  CHECK(check.complex_distinct == 2);

  // the Fermat quartic has totally real line sections but no simple one
  auto fermat = parse_curve_text(kFermat);
  auto none = totally_real_section(fermat);
  CHECK(none.delta == 4);
  CHECK(!none.found);
  CHECK(none.inf_real == 0);
  CHECK(none.inf_complex == 4);
  CHECK(!none.unresolved.empty());  // the multiple-root locus stays open
}

TEST_CASE("fiber classification of the Fermat pencil") {
  auto fermat = parse_curve_text(kFermat);
  auto q1 = parse_mpoly("x*y + x*z - y*z - z^2", fermat.coords);
  auto q2 = parse_mpoly("x^2 - x*z", fermat.coords);
  // the pencil has the fixed component x - z, divided out internally
  auto fr = fiber_classify(fermat.equations[0], q1, q2);
  CHECK(fr.delta == 4);
  CHECK(!fr.totally_real);
  CHECK(fr.max_real == 2);
  CHECK(fr.inf_real == 2);
  CHECK(fr.inf_complex == 4);
  for (const auto& rg : fr.affine.regions) {
    CHECK(rg.real == 2);
    CHECK(rg.complex_distinct == 4);
  }
  REQUIRE(fr.affine.boundary.size() == 1);
  // s = 0 is the tangent fiber 4 * [0:1:-1]
  CHECK(compare(fr.affine.boundary[0].point, Rational(0)) == 0);
  REQUIRE(fr.affine.boundary[0].real.has_value());
  CHECK(*fr.affine.boundary[0].real == 1);
  CHECK(*fr.affine.boundary[0].complex_distinct == 1);
  CHECK(fr.unresolved.empty());

  // consistency with the section search: no line meets the quartic in 4
  // distinct real points, and no fiber of this line pencil does either
  auto sv = totally_real_section(fermat);
  CHECK(!sv.found);
}

TEST_CASE("a pencil with totally real fibers") {
  auto circle = parse_curve_text(kCircle);
  auto q1 = parse_mpoly("y", circle.coords);
  auto q2 = parse_mpoly("x", circle.coords);
  // diameters: every fiber meets the circle in two real points
  auto fr = fiber_classify(circle.equations[0], q1, q2);
  CHECK(fr.delta == 2);
  CHECK(fr.totally_real);
  CHECK(fr.max_real == 2);
  CHECK(fr.inf_real == 2);
  for (const auto& rg : fr.affine.regions) CHECK(rg.real == 2);
}

TEST_CASE("input validation for pencils") {
  auto fermat = parse_curve_text(kFermat);
  auto f = fermat.equations[0];
  auto q1 = parse_mpoly("x^2", fermat.coords);
  CHECK_THROWS_AS(fiber_classify(f, q1, parse_mpoly("x", fermat.coords)),
                  std::invalid_argument);
  CHECK_THROWS_AS(fiber_classify(f, q1, MPoly(fermat.coords)), std::invalid_argument);
}
