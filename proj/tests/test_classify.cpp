#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trsect/classify.hpp"
#include "trsect/oracle.hpp"

using namespace trsect;

namespace {

const char* kWorked = R"(
params: y
vars: x1 x2
x1^2 + x2^2 - y
x1^2 + x1*x2 - y*x2 + x1 + y^2
)";

}  // namespace

TEST_CASE("square root system over one parameter") {
  auto sys = parse_system_text("params: y\nvars: x\nx^2 - y\n");
  auto rep = classify_1param(sys);
  CHECK(rep.delta == 2);
  REQUIRE(rep.regions.size() == 2);
  CHECK(rep.regions[0].real == 0);
  CHECK(rep.regions[0].complex_distinct == 2);
  CHECK(rep.regions[1].real == 2);
  CHECK(rep.regions[1].complex_distinct == 2);
  REQUIRE(rep.boundary.size() == 1);
  CHECK(compare(rep.boundary[0].point, Rational(0)) == 0);
  CHECK(rep.boundary[0].method == "minor-signs");
  REQUIRE(rep.boundary[0].real.has_value());
  CHECK(*rep.boundary[0].real == 1);
  CHECK(*rep.boundary[0].complex_distinct == 1);
  CHECK(rep.max_real == 2);
  CHECK(rep.unresolved.empty());
}

TEST_CASE("worked system: full classification") {
  auto sys = parse_system_text(kWorked);
  auto rep = classify_1param(sys);
  CHECK(rep.delta == 4);
  // w has roots 0 and ytilde in (1.70, 1.72): three open intervals
  REQUIRE(rep.regions.size() == 3);
  CHECK(rep.regions[0].real == 0);
  CHECK(rep.regions[1].real == 2);
  CHECK(rep.regions[2].real == 0);
  for (const auto& rg : rep.regions) CHECK(rg.complex_distinct == 4);
  REQUIRE(rep.boundary.size() == 2);
  CHECK(compare(rep.boundary[0].point, Rational(0)) == 0);
  CHECK(rep.boundary[0].minor_signs == std::vector<int>{1, -1, -1, 0});
  CHECK(*rep.boundary[0].real == 1);
  CHECK(*rep.boundary[0].complex_distinct == 3);
  CHECK(*rep.boundary[1].real == 1);
  CHECK(*rep.boundary[1].complex_distinct == 3);
  CHECK(rep.max_real == 2);
  CHECK(rep.unresolved.empty());

  // region samples double-checked by the independent oracle
  for (const auto& rg : rep.regions) {
    std::vector<MPoly> spec;
    for (const auto& f : sys.equations) spec.push_back(f.eval_params(rg.sample));
    auto o = oracle_count(spec);
    CHECK(o.real_distinct == rg.real);
    CHECK(o.complex_distinct == rg.complex_distinct);
  }
}

TEST_CASE("boundary on the non-specialization locus") {
  auto sys = parse_system_text("params: y\nvars: x\ny*x - 1\n");
  auto rep = classify_1param(sys);
  REQUIRE(rep.regions.size() == 2);
  CHECK(rep.regions[0].real == 1);
  CHECK(rep.regions[1].real == 1);
  REQUIRE(rep.boundary.size() == 1);
  CHECK(compare(rep.boundary[0].point, Rational(0)) == 0);
  CHECK(rep.boundary[0].method == "substitution");
  REQUIRE(rep.boundary[0].real.has_value());
  CHECK(*rep.boundary[0].real == 0);  // y = 0 kills the only solution
  CHECK(rep.unresolved.empty());
}

TEST_CASE("winfty stratum with a linear factor") {
  auto sys = parse_system_text("params: y\nvars: x\ny*x - 1\n");
  auto H = hermite_matrix(sys);
  REQUIRE(H.gb_winfty_factors().size() == 1);
  auto sr = handle_winfty_stratum(sys, H.gb_winfty_factors()[0]);
  REQUIRE(sr.regions.size() == 1);
  CHECK(sr.regions[0].real == 0);
  CHECK(sr.regions[0].complex_distinct == 0);
  CHECK(sr.unresolved.empty());
}

TEST_CASE("open cell samples, one parameter") {
  auto vs = VarSet::make({"y", "x"}, 1);
  auto pts = sample_open_cells(parse_mpoly("y^2 - 2", vs));
  REQUIRE(pts.size() == 3);
  CHECK(pts[0][0] < rat(-141, 100));
  CHECK(pts[1][0] > rat(-141, 100));
  CHECK(pts[1][0] < rat(141, 100));
  CHECK(pts[2][0] > rat(141, 100));
}

TEST_CASE("open cell samples, two parameters") {
  auto vs = VarSet::make({"y1", "y2", "x"}, 2);
  auto w = parse_mpoly("y1^2 + y2^2 - 1", vs);
  auto pts = sample_open_cells(w);
  bool inside = false, outside = false;
  for (const auto& p : pts) {
    Rational v = p[0] * p[0] + p[1] * p[1] - 1;
    REQUIRE(sgn(v) != 0);
    (sgn(v) < 0 ? inside : outside) = true;
  }
  CHECK(inside);
  CHECK(outside);
}

TEST_CASE("open cell samples, three parameters hit all octants") {
  auto vs = VarSet::make({"y1", "y2", "y3", "x"}, 3);
  auto w = parse_mpoly("y1*y2*y3", vs);
  auto pts = sample_open_cells(w);
  std::set<int> octants;
  for (const auto& p : pts) {
    REQUIRE(sgn(p[0] * p[1] * p[2]) != 0);
    octants.insert((sgn(p[0]) > 0) * 4 + (sgn(p[1]) > 0) * 2 + (sgn(p[2]) > 0));
  }
  CHECK(octants.size() == 8);

  CHECK_THROWS_AS(sample_open_cells(parse_mpoly("y1", VarSet::make({"y1", "y2", "y3", "y4"}, 4))),
                  TooManyParameters);
}

TEST_CASE("open cells of random bivariate curves cover both sides") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto vs = VarSet::make({"y1", "y2", "x"}, 2);
  for (int it = 0; it < 8; ++it) {
    MPoly w(vs);
    for (unsigned a = 0; a <= 3; ++a)
      for (unsigned b = 0; a + b <= 3; ++b) w.add_term({a, b, 0}, Rational(coef(rng)));
    if (w.is_zero() || w.is_constant()) continue;
    auto pts = sample_open_cells(w);
    CHECK(!pts.empty());
    for (const auto& p : pts) {
      std::vector<Rational> full = {p[0], p[1], Rational(0)};
      CHECK(sgn(w.eval(full)) != 0);
    }
  }
}

TEST_CASE("two parameter classification of a quadratic") {
  auto sys = parse_system_text("params: y1 y2\nvars: x\nx^2 + y1*x + y2\n");
  auto rep = classify_multiparam(sys);
  CHECK(rep.delta == 2);
  // wh is the discriminant y1^2 - 4 y2
  auto vs = sys.vars;
  bool two = false, none = false;
  for (const auto& rg : rep.regions) {
    std::vector<Rational> full = {rg.sample[0], rg.sample[1], Rational(0)};
    int d = sgn(parse_mpoly("y1^2 - 4*y2", vs).eval(full));
    CHECK(rg.complex_distinct == 2);
    if (d > 0) {
      CHECK(rg.real == 2);
      two = true;
    } else {
      CHECK(rg.real == 0);
      none = true;
    }
  }
  CHECK(two);
  CHECK(none);
  CHECK(rep.max_real == 2);
  REQUIRE(rep.unresolved.size() == 1);  // the wH = 0 locus
}

TEST_CASE("witness search") {
  auto sys = parse_system_text(kWorked);
  auto res = find_witness(sys, 2);
  REQUIRE(res.point.has_value());
  CHECK(res.real == 2);
  CHECK(res.boxes.size() == 2);
  // the classified region with two real solutions is (0, ytilde)
  CHECK((*res.point)[0] > 0);
  CHECK((*res.point)[0] < rat(172, 100));

  auto sqrt_sys = parse_system_text("params: y\nvars: x\nx^2 - y\n");
  auto r2 = find_witness(sqrt_sys, 2);
  REQUIRE(r2.point.has_value());
  CHECK((*r2.point)[0] > 0);
  CHECK(r2.boxes.size() == 2);

  auto none = find_witness(sys, 4, 1, 60);
  CHECK(!none.point.has_value());
  CHECK(none.unresolved.empty());
}

TEST_CASE("classification agrees with a dense oracle sweep") {
  std::mt19937 rng(501);
  std::uniform_int_distribution<int> coef(-4, 4);
  int done = 0;
  while (done < 4) {
    auto vs = VarSet::make({"y", "x1", "x2"}, 1);
    ParametricSystem sys;
    sys.vars = vs;
    for (int e = 0; e < 2; ++e) {
      MPoly p(vs);
      for (int t = 0; t < 5; ++t) {
        Exponents ex(3, 0);
        int budget = 2;
        for (size_t v = 0; v < 3; ++v) {
          int d = std::uniform_int_distribution<int>(0, budget)(rng);
          ex[v] = static_cast<unsigned>(d);
          budget -= d;
        }
        p.add_term(ex, Rational(coef(rng)));
      }
      sys.equations.push_back(p);
    }
    ClassificationReport rep;
    try {
      rep = classify_1param(sys);
    } catch (const std::exception&) {
      continue;
    }
    if (rep.regions.empty()) continue;
    int checked = 0;
    for (const auto& rg : rep.regions) {
      std::vector<MPoly> spec;
      for (const auto& f : sys.equations) spec.push_back(f.eval_params(rg.sample));
      try {
        auto o = oracle_count(spec);
        CHECK(o.real_distinct == rg.real);
        CHECK(o.complex_distinct == rg.complex_distinct);
        ++checked;
      } catch (const SeparationFailure&) {
      } catch (const OracleNotZeroDimensional&) {
      }
    }
    if (checked > 0) ++done;
  }
}
