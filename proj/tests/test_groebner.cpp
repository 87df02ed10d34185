#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "trsect/groebner.hpp"

using namespace trsect;

namespace {

const MonomialOrder kBlock{OrderKind::BlockXoverY};

Exponents exps(std::initializer_list<unsigned> e) { return Exponents(e); }

MPoly spoly_of(const MPoly& f, const MPoly& g) {
  const VarSetPtr& vs = f.varset();
  Exponents lf = f.leading_exponents(kBlock), lg = g.leading_exponents(kBlock);
  Exponents l(lf.size());
  for (size_t i = 0; i < l.size(); ++i) l[i] = std::max(lf[i], lg[i]);
  Exponents sf(l.size()), sg(l.size());
  for (size_t i = 0; i < l.size(); ++i) {
    sf[i] = l[i] - lf[i];
    sg[i] = l[i] - lg[i];
  }
  return f * MPoly::monomial(vs, sf, Rational(1) / f.coeff(lf)) -
         g * MPoly::monomial(vs, sg, Rational(1) / g.coeff(lg));
}

MPoly random_mpoly(std::mt19937& rng, const VarSetPtr& vs, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> coef(-5, 5);
  MPoly p(vs);
  for (int t = 0; t < nterms; ++t) {
    Exponents ex(vs->size(), 0);
    int budget = maxdeg;
    for (auto& v : ex) {
      int d = std::uniform_int_distribution<int>(0, budget)(rng);
      v = static_cast<unsigned>(d);
      budget -= d;
    }
    p.add_term(ex, Rational(coef(rng)));
  }
  return p;
}

const char* kWorked = R"(
params: y
vars: x1 x2
x1^2 + x2^2 - y
x1^2 + x1*x2 - y*x2 + x1 + y^2
)";

}  // namespace

TEST_CASE("single binomial") {
  auto sys = parse_system_text("params: y\nvars: x1\nx1^2 - y\n");
  auto gb = groebner_basis(sys);
  REQUIRE(gb.generators().size() == 1);
  CHECK(gb.generators()[0] == parse_mpoly("x1^2 - y", sys.vars));
  CHECK(gb.delta() == 2);
  CHECK(gb.basis() == std::vector<Exponents>{exps({0, 0}), exps({0, 1})});
  CHECK(gb.winfty() == MPoly::constant(sys.vars, Rational(1)));
}

TEST_CASE("worked two-variable system") {
  auto sys = parse_system_text(kWorked);
  auto gb = groebner_basis(sys);
  CHECK(gb.delta() == 4);
  // ascending: 1, x2, x1, x2^2
  std::vector<Exponents> want{exps({0, 0, 0}), exps({0, 0, 1}), exps({0, 1, 0}), exps({0, 0, 2})};
  CHECK(gb.basis() == want);
  CHECK(gb.winfty() == MPoly::constant(sys.vars, Rational(1)));
  CHECK(check_radical_generic(gb) == RadicalAudit::Ok);
}

TEST_CASE("forced parameter leading coefficient") {
  auto sys = parse_system_text("params: y\nvars: x1\ny*x1 - 1\n");
  auto gb = groebner_basis(sys);
  CHECK(gb.delta() == 1);
  CHECK(gb.basis() == std::vector<Exponents>{exps({0, 0})});
  CHECK(gb.winfty() == parse_mpoly("y", sys.vars));
}

TEST_CASE("not zero dimensional") {
  auto sys = parse_system_text("vars: x1 x2\nx1*x2 - 1\n");
  CHECK_THROWS_AS(groebner_basis(sys), NotZeroDimensional);
}

TEST_CASE("normal form") {
  auto sys = parse_system_text("params: y\nvars: x1\nx1^2 - y\n");
  auto gb = groebner_basis(sys);
  // one step: x1^2 -> y
  auto nf = gb.normal_form(parse_mpoly("x1^2", sys.vars));
  REQUIRE(nf.size() == 1);
  CHECK(nf.begin()->first == exps({0, 0}));
  CHECK(nf.begin()->second.num() == parse_mpoly("y", sys.vars));
  CHECK(nf.begin()->second.den().is_constant());
  // already reduced stays put
  auto nf2 = gb.normal_form(parse_mpoly("3*x1 + y^2", sys.vars));
  CHECK(nf2.size() == 2);
}

TEST_CASE("buchberger criterion and reduction idempotence") {
  auto sys = parse_system_text(kWorked);
  auto gb = groebner_basis(sys);
  for (size_t i = 0; i < gb.generators().size(); ++i) {
    CHECK(gb.normal_form(gb.generators()[i]).empty());
    for (size_t j = i + 1; j < gb.generators().size(); ++j)
      CHECK(gb.normal_form(spoly_of(gb.generators()[i], gb.generators()[j])).empty());
  }

  std::mt19937 rng(11);
  for (int it = 0; it < 10; ++it) {
    MPoly p = random_mpoly(rng, sys.vars, 5, 6);
    auto nf = gb.normal_form(p);
    // clear denominators: D*p - lift(D*nf) must reduce to zero
    MPoly d = MPoly::constant(sys.vars, Rational(1));
    for (const auto& [xm, c] : nf) d = d * c.den();
    MPoly lifted(sys.vars);
    for (const auto& [xm, c] : nf) {
      auto q = d.div_exact(c.den());
      REQUIRE(q.has_value());
      lifted = lifted + MPoly::monomial(sys.vars, xm, Rational(1)) * c.num() * *q;
    }
    CHECK(gb.normal_form(p * d - lifted).empty());
  }
}

TEST_CASE("specialization property") {
  auto sys = parse_system_text(kWorked);
  auto gb = groebner_basis(sys);
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick(-40, 40);
  int tested = 0;
  while (tested < 20) {
    Rational eta = rat(pick(rng), 1 + std::uniform_int_distribution<int>(0, 3)(rng));
    std::vector<Rational> full{eta, Rational(0), Rational(0)};
    if (sgn(gb.winfty().eval(full)) == 0) continue;
    ++tested;
    // direct basis of the specialized input
    ParametricSystem spec;
    spec.vars = sys.vars;
    for (const auto& f : sys.equations) spec.equations.push_back(f.eval_params({eta}));
    auto direct = groebner_basis(spec);
    CHECK(direct.delta() == gb.delta());
    CHECK(direct.basis() == gb.basis());
    // the specialized generators, made monic, are exactly the direct reduced basis
    std::vector<MPoly> sg;
    for (const auto& g : gb.generators()) {
      MPoly s = g.eval_params({eta});
      REQUIRE(!s.is_zero());
      sg.push_back(s * (Rational(1) / s.coeff(s.leading_exponents(kBlock))));
    }
    REQUIRE(sg.size() == direct.generators().size());
    for (const auto& s : sg)
      CHECK(std::count(direct.generators().begin(), direct.generators().end(), s) == 1);
  }
}

TEST_CASE("delta invariant under equation permutation") {
  auto sys = parse_system_text(kWorked);
  auto gb = groebner_basis(sys);
  ParametricSystem swapped;
  swapped.vars = sys.vars;
  swapped.equations = {sys.equations[1], sys.equations[0]};
  auto gb2 = groebner_basis(swapped);
  CHECK(gb2.delta() == gb.delta());
  CHECK(gb2.basis() == gb.basis());
}

TEST_CASE("radical audit flags a double root") {
  auto sys = parse_system_text("params: y\nvars: x\nx^2\n");
  auto gb = groebner_basis(sys);
  CHECK(check_radical_generic(gb) == RadicalAudit::Suspect);
  auto ok = groebner_basis(parse_system_text("params: y\nvars: x\nx^2 - y\n"));
  CHECK(check_radical_generic(ok) == RadicalAudit::Ok);
}

TEST_CASE("winfty factor split") {
  auto sys = parse_system_text("params: y1 y2\nvars: x\ny1*y2*x - 1\n");
  auto gb = groebner_basis(sys);
  CHECK(gb.winfty() == parse_mpoly("y1*y2", sys.vars));
  REQUIRE(gb.winfty_factors().size() == 2);
}

TEST_CASE("system file comments and round trip") {
  auto sys = parse_system_text("# a comment\nparams: y\nvars: x1 x2 # trailing\nx1 + x2\nx2^2 - y\n");
  CHECK(sys.vars->nparams() == 1);
  CHECK(sys.vars->nvars() == 2);
  REQUIRE(sys.equations.size() == 2);
  CHECK(parse_mpoly(sys.equations[0].str(), sys.vars) == sys.equations[0]);
  CHECK_THROWS(parse_system_text("x + 1\n"));
}
