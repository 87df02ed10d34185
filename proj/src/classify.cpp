#include "trsect/classify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "trsect/oracle.hpp"

namespace trsect {

namespace {

Rational floor_rat(const Rational& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(f);
}

// rational points below, between and above a sorted list of distinct roots
std::vector<Rational> gap_points(std::vector<RealAlgebraicNumber> roots) {
  if (roots.empty()) return {Rational(0)};
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    while (!(roots[i].hi() < roots[i + 1].lo())) {
      roots[i] = roots[i].refined();
      roots[i + 1] = roots[i + 1].refined();
    }
  std::vector<Rational> out;
  out.push_back(floor_rat(roots.front().lo()) - 1);
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    out.push_back((roots[i].hi() + roots[i + 1].lo()) / 2);
  out.push_back(floor_rat(roots.back().hi()) + 1);
  return out;
}

std::string interval_descriptor(const std::vector<RealAlgebraicNumber>& roots, size_t i) {
  auto label = [&](size_t k) {
    std::ostringstream os;
    os << "r" << (k + 1);
    return os.str();
  };
  std::ostringstream os;
  if (roots.empty()) {
    os << "(-oo, oo)";
  } else if (i == 0) {
    os << "(-oo, " << label(0) << ")";
  } else if (i == roots.size()) {
    os << "(" << label(roots.size() - 1) << ", oo)";
  } else {
    os << "(" << label(i - 1) << ", " << label(i) << ")";
  }
  return os.str();
}

std::vector<Rational> full_point(const VarSetPtr& vs, const std::vector<Rational>& eta) {
  std::vector<Rational> full(vs->size(), Rational(0));
  for (size_t i = 0; i < eta.size() && i < vs->nparams(); ++i) full[i] = eta[i];
  return full;
}

// ---- open-cell decomposition over the parameter block ----

void add_projection_poly(std::vector<MPoly>& out, const MPoly& p) {
  if (p.is_zero() || p.is_constant()) return;
  MPoly q = squarefree_part_mpoly(p).primitive_rat();
  for (const auto& have : out)
    if (have == q) return;
  out.push_back(q);
}

// sample points for the complement of the product of F, in parameters 0..level-1
std::vector<std::vector<Rational>> open_cells_rec(const std::vector<MPoly>& F, size_t level) {
  const VarSetPtr& vs = F.empty() ? nullptr : F.front().varset();
  if (level == 1) {
    std::vector<RealAlgebraicNumber> roots;
    for (const auto& f : F) {
      if (!f.depends_on(0)) continue;
      for (auto& r : isolate_real_roots(f.to_upoly(0))) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(),
              [](const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
                return compare(a, b) < 0;
              });
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
                              return compare(a, b) == 0;
                            }),
                roots.end());
    std::vector<std::vector<Rational>> out;
    for (const auto& v : gap_points(std::move(roots))) out.push_back({v});
    return out;
  }

  const size_t p = level - 1;
  std::vector<MPoly> proj;
  for (const auto& f : F) {
    if (!f.depends_on(p)) {
      add_projection_poly(proj, f);
      continue;
    }
    for (const auto& c : f.coeffs_in(p)) add_projection_poly(proj, c);
    if (f.degree_in(p) >= 2) add_projection_poly(proj, discriminant(f, p));
  }
  for (size_t i = 0; i < F.size(); ++i)
    for (size_t j = i + 1; j < F.size(); ++j)
      if (F[i].degree_in(p) >= 1 && F[j].degree_in(p) >= 1)
        add_projection_poly(proj, resultant(F[i], F[j], p));

  std::vector<std::vector<Rational>> out;
  for (const auto& base : open_cells_rec(proj, level - 1)) {
    // lift: roots of every specialized polynomial in the last parameter
    UPoly prod = UPoly::constant(Rational(1));
    for (const auto& f : F) {
      MPoly s = f;
      for (size_t i = 0; i < level - 1; ++i) s = s.substitute(i, base[i]);
      if (s.is_zero()) continue;  // cannot happen when coefficients project
      if (!s.depends_on(p)) continue;
      prod = prod * s.to_upoly(p);
    }
    std::vector<RealAlgebraicNumber> roots;
    if (prod.degree() > 0) roots = isolate_real_roots(prod);
    for (const auto& v : gap_points(std::move(roots))) {
      auto pt = base;
      pt.push_back(v);
      out.push_back(std::move(pt));
    }
  }
  (void)vs;
  return out;
}

UPoly param_upoly(const MPoly& p) {
  return p.is_constant() ? UPoly::constant(p.constant_value()) : p.to_upoly(0);
}

// boundary counting at a parameter value where winfty vanishes: substitute
// and count the specialized system directly
// collapse to a rational point when the defining polynomial allows it
RealAlgebraicNumber normalized(RealAlgebraicNumber r) {
  if (r.is_rational()) return r;
  const UPoly& d = r.defining();
  if (d.degree() == 1)
    return RealAlgebraicNumber::from_rational(-d.coeff(0) / d.coeff(1));
  for (int i = 0; i < 16 && !r.is_rational(); ++i) {
    Rational m = (r.lo() + r.hi()) / 2;
    if (sgn(d.eval(m)) == 0) return RealAlgebraicNumber::from_rational(m);
    r = r.refined();
  }
  return r;
}

// exact counting over Q(rho) pays off only while the defining polynomial is
// small; past this the boundary point is reported but not resolved
bool extension_tractable(const RealAlgebraicNumber& rho) {
  const UPoly& d = rho.defining();
  if (d.degree() <= 2) return true;
  size_t bits = 0;
  for (const auto& c : d.coeffs())
    bits += mpz_sizeinbase(c.get_num().get_mpz_t(), 2) +
            mpz_sizeinbase(c.get_den().get_mpz_t(), 2);
  return d.degree() <= 16 && bits <= 4096;
}

BoundaryPoint stratum_boundary(const ParametricSystem& sys, const RealAlgebraicNumber& rho0) {
  RealAlgebraicNumber rho = normalized(rho0);
  BoundaryPoint bp{rho, std::nullopt, std::nullopt, {}, "substitution"};
  if (rho.is_rational()) {
    ParametricSystem spec;
    spec.vars = sys.vars;
    for (const auto& f : sys.equations)
      spec.equations.push_back(f.eval_params({rho.rational_value()}));
    try {
      auto H = hermite_matrix(spec);
      auto [sig, rank] = signature_rank(specialize(H, {}));
      bp.real = sig;
      bp.complex_distinct = rank;
    } catch (const std::exception&) {
      // fall through: oracle attempt below
      try {
        auto o = oracle_count(spec.equations);
        bp.real = o.real_distinct;
        bp.complex_distinct = o.complex_distinct;
      } catch (const std::exception&) {
      }
    }
    return bp;
  }
  bp.method = "extension";
  if (sys.equations.size() == 2 && sys.vars->nvars() == 2 && extension_tractable(rho)) {
    try {
      auto o = oracle_count_ext(sys.equations, 0, rho);
      bp.real = o.real_distinct;
      bp.complex_distinct = o.complex_distinct;
    } catch (const std::exception&) {
    }
  }
  return bp;
}

}  // namespace

std::vector<std::vector<Rational>> sample_open_cells(const MPoly& w) {
  const VarSetPtr& vs = w.varset();
  size_t t = vs->nparams();
  if (t < 1 || t > 3) throw TooManyParameters();
  if (w.is_zero()) throw std::invalid_argument("w must be nonzero");
  std::vector<MPoly> F;
  if (!w.is_constant()) F.push_back(squarefree_part_mpoly(w).primitive_rat());
  auto pts = open_cells_rec(F, t);
  std::vector<std::vector<Rational>> good;
  for (auto& pt : pts) {
    if (sgn(w.eval(full_point(vs, pt))) != 0) good.push_back(std::move(pt));
  }
  return good;
}

ClassificationReport classify_1param(const ParametricSystem& sys) {
  if (sys.vars->nparams() != 1)
    throw std::invalid_argument("classify_1param needs exactly one parameter");
  HermiteMatrix H = hermite_matrix(sys);
  if (H.w().is_zero())
    throw std::invalid_argument("determinant vanishes identically: every fiber has a multiple root");
  ClassificationReport rep;
  rep.delta = H.dim();
  rep.w = H.w();

  std::vector<RealAlgebraicNumber> roots;
  if (!H.w().is_constant()) roots = isolate_real_roots(H.w().to_upoly(0));
  auto samples = gap_points(roots);
  for (size_t i = 0; i < samples.size(); ++i) {
    Region rg;
    rg.sample = {samples[i]};
    rg.descriptor = interval_descriptor(roots, i);
    auto [sig, rank] = signature_rank(specialize(H, rg.sample));
    rg.real = sig;
    rg.complex_distinct = rank;
    rep.max_real = std::max(rep.max_real, sig);
    rep.regions.push_back(std::move(rg));
  }

  UPoly winf = param_upoly(H.gb_winfty());
  for (const auto& rho : roots) {
    if (sign_at(winf, rho) == 0) {
      BoundaryPoint bp = stratum_boundary(sys, rho);
      if (bp.real)
        rep.max_real = std::max(rep.max_real, *bp.real);
      else
        rep.unresolved.push_back("boundary point on the non-specialization locus not counted");
      rep.boundary.push_back(std::move(bp));
      continue;
    }
    RealAlgebraicNumber rr = normalized(rho);
    if (!rr.is_rational() && !extension_tractable(rr)) {
      // det(H) vanishes here, so the fiber has fewer than delta distinct
      // solutions either way; the exact counts stay open
      rep.boundary.push_back(BoundaryPoint{rho, std::nullopt, std::nullopt, {}, "unresolved"});
      rep.unresolved.push_back(
          "boundary point with an oversized defining polynomial not counted (rank < delta)");
      continue;
    }
    BoundaryPoint bp{rho, std::nullopt, std::nullopt, minor_sign_sequence(H, rho), "minor-signs"};
    MinorCounts mc = counts_from_minor_signs(bp.minor_signs);
    bp.complex_distinct = mc.rank;
    if (mc.real) {
      bp.real = mc.real;
    } else {
      auto [sig, rank] = signature_rank_at(H, rho);
      bp.real = sig;
      bp.complex_distinct = rank;
      bp.method = "extension";
    }
    rep.max_real = std::max(rep.max_real, *bp.real);
    rep.boundary.push_back(std::move(bp));
  }
  return rep;
}

StratumResult handle_winfty_stratum(const ParametricSystem& sys, const MPoly& factor) {
  StratumResult out;
  if (factor.is_constant()) return out;
  const VarSetPtr& vs = sys.vars;
  const size_t t = vs->nparams();

  size_t linvar = 0;
  if (is_linear_in_some_param(factor, &linvar)) {
    auto cs = factor.coeffs_in(linvar);
    MPoly expr = cs[0] * (Rational(-1) / cs[1].constant_value());
    std::vector<std::string> names;
    for (size_t i = 0; i < vs->size(); ++i)
      if (i != linvar) names.push_back(vs->name(i));
    auto reduced_vs = VarSet::make(names, t - 1);
    ParametricSystem reduced;
    reduced.vars = reduced_vs;
    for (const auto& f : sys.equations)
      reduced.equations.push_back(f.substitute(linvar, expr).transplant(reduced_vs));
    try {
      if (t - 1 == 0) {
        auto H = hermite_matrix(reduced);
        auto [sig, rank] = signature_rank(specialize(H, {}));
        Region rg;
        rg.descriptor = "stratum " + factor.str();
        rg.real = sig;
        rg.complex_distinct = rank;
        out.max_real = sig;
        out.regions.push_back(std::move(rg));
      } else {
        ClassificationReport sub =
            t - 1 == 1 ? classify_1param(reduced) : classify_multiparam(reduced);
        out.regions = std::move(sub.regions);
        out.boundary = std::move(sub.boundary);
        out.unresolved = std::move(sub.unresolved);
        out.max_real = sub.max_real;
        for (auto& rg : out.regions) rg.descriptor = "stratum " + factor.str() + " " + rg.descriptor;
      }
    } catch (const std::exception& e) {
      out.unresolved.push_back("stratum " + factor.str() + ": " + e.what());
    }
    return out;
  }

  auto sole = sole_variable(factor);
  if (sole && vs->is_param(*sole) && t == 1) {
    for (const auto& rho : isolate_real_roots(factor.to_upoly(*sole))) {
      BoundaryPoint bp = stratum_boundary(sys, rho);
      if (bp.real)
        out.max_real = std::max(out.max_real, *bp.real);
      else
        out.unresolved.push_back("stratum " + factor.str() + ": uncounted real root");
      out.boundary.push_back(std::move(bp));
    }
    return out;
  }
  if (sole && vs->is_param(*sole)) {
    // several free parameters would remain after fixing an algebraic value
    if (count_real_roots(factor.to_upoly(*sole)) == 0) return out;  // vacuous over R
    out.unresolved.push_back("stratum " + factor.str() +
                             ": algebraic value with remaining free parameters");
    return out;
  }
  out.unresolved.push_back("stratum " + factor.str() + ": unhandled shape");
  return out;
}

ClassificationReport classify_multiparam(const ParametricSystem& sys) {
  const size_t t = sys.vars->nparams();
  if (t == 1) return classify_1param(sys);
  HermiteMatrix H = hermite_matrix(sys);
  if (H.w().is_zero())
    throw std::invalid_argument("determinant vanishes identically: every fiber has a multiple root");
  ClassificationReport rep;
  rep.delta = H.dim();
  rep.w = H.w();

  for (const auto& pt : sample_open_cells(H.w())) {
    Region rg;
    rg.sample = pt;
    std::ostringstream os;
    auto full = full_point(sys.vars, pt);
    for (const auto& f : H.gb_winfty_factors()) os << (sgn(f.eval(full)) > 0 ? '+' : '-');
    if (!H.wh().is_constant()) os << (sgn(H.wh().eval(full)) > 0 ? '+' : '-');
    rg.descriptor = os.str();
    auto [sig, rank] = signature_rank(specialize(H, pt));
    rg.real = sig;
    rg.complex_distinct = rank;
    rep.max_real = std::max(rep.max_real, sig);
    rep.regions.push_back(std::move(rg));
  }

  for (const auto& f : H.gb_winfty_factors()) {
    if (f.is_constant()) continue;
    StratumResult sr = handle_winfty_stratum(sys, f);
    for (auto& rg : sr.regions) rep.regions.push_back(std::move(rg));
    for (auto& bp : sr.boundary) rep.boundary.push_back(std::move(bp));
    for (auto& u : sr.unresolved) rep.unresolved.push_back(std::move(u));
    rep.max_real = std::max(rep.max_real, sr.max_real);
  }
  if (!H.wh().is_constant())
    rep.unresolved.push_back("wH = 0 locus (parameters with multiple solutions)");
  return rep;
}

WitnessResult find_witness(const ParametricSystem& sys, int target, unsigned seed,
                           int random_tries) {
  WitnessResult out;
  const size_t t = sys.vars->nparams();
  HermiteMatrix H = hermite_matrix(sys);

  auto try_point = [&](const std::vector<Rational>& eta) -> bool {
    auto full = full_point(sys.vars, eta);
    if (sgn(H.w().eval(full)) == 0) return false;
    auto [sig, rank] = signature_rank(specialize(H, eta));
    (void)rank;
    if (sig != target) return false;
    std::vector<MPoly> spec;
    for (const auto& f : sys.equations) spec.push_back(f.eval_params(eta));
    try {
      auto o = oracle_count(spec);
      if (o.real_distinct != target) return false;  // never report an unverified witness
      out.point = eta;
      out.real = o.real_distinct;
      out.boxes = o.real_boxes;
      return true;
    } catch (const std::exception&) {
      return false;
    }
  };

  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-80, 80), den(1, 8);
  for (int i = 0; i < random_tries; ++i) {
    std::vector<Rational> eta(t);
    for (auto& v : eta) v = rat(num(rng), den(rng));
    if (try_point(eta)) return out;
  }

  if (t <= 3) {
    for (const auto& pt : sample_open_cells(H.w()))
      if (try_point(pt)) return out;
  } else {
    out.unresolved.push_back("more than three parameters: randomized sampling only");
  }

  // resolved winfty strata: substitute linear factors and recurse
  for (const auto& f : H.gb_winfty_factors()) {
    if (f.is_constant()) continue;
    size_t linvar = 0;
    if (is_linear_in_some_param(f, &linvar) && t >= 1) {
      auto cs = f.coeffs_in(linvar);
      MPoly expr = cs[0] * (Rational(-1) / cs[1].constant_value());
      std::vector<std::string> names;
      for (size_t i = 0; i < sys.vars->size(); ++i)
        if (i != linvar) names.push_back(sys.vars->name(i));
      auto reduced_vs = VarSet::make(names, t - 1);
      ParametricSystem reduced;
      reduced.vars = reduced_vs;
      for (const auto& fe : sys.equations)
        reduced.equations.push_back(fe.substitute(linvar, expr).transplant(reduced_vs));
      try {
        WitnessResult sub = t - 1 == 0
                                ? WitnessResult{}  // no parameters left: check directly below
                                : find_witness(reduced, target, seed + 1, random_tries / 4);
        if (t - 1 == 0) {
          auto o = oracle_count(reduced.equations);
          if (o.real_distinct == target) {
            sub.point = std::vector<Rational>{};
            sub.real = o.real_distinct;
            sub.boxes = o.real_boxes;
          }
        }
        for (auto& u : sub.unresolved) out.unresolved.push_back(std::move(u));
        if (sub.point) {
          // lift back: reinsert the substituted parameter
          std::vector<Rational> eta(t, Rational(0));
          size_t k = 0;
          for (size_t i = 0; i < t; ++i)
            if (i != linvar) eta[i] = (*sub.point)[k++];
          std::vector<Rational> full = full_point(sys.vars, eta);
          eta[linvar] = expr.eval(full);
          out.point = eta;
          out.real = sub.real;
          out.boxes = std::move(sub.boxes);
          return out;
        }
      } catch (const std::exception& e) {
        out.unresolved.push_back("stratum " + f.str() + ": " + e.what());
      }
    } else {
      auto sole = sole_variable(f);
      if (sole && sys.vars->is_param(*sole) && count_real_roots(f.to_upoly(*sole)) == 0)
        continue;  // empty over the reals
      out.unresolved.push_back("stratum " + f.str() + ": not searched");
    }
  }
  if (!H.wh().is_constant() && t > 1)
    out.unresolved.push_back("wH = 0 locus (parameters with multiple solutions): not searched");
  return out;
}

}  // namespace trsect
