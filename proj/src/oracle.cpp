#include "trsect/oracle.hpp"

#include <algorithm>
#include <random>

#include "trsect/extension.hpp"

namespace trsect {

namespace {

// ---- rational interval arithmetic for the solution boxes ----

struct IQ {
  Rational lo, hi;
};

IQ iq_point(const Rational& a) { return {a, a}; }

IQ iq_add(const IQ& a, const IQ& b) { return {a.lo + b.lo, a.hi + b.hi}; }

IQ iq_neg(const IQ& a) { return {-a.hi, -a.lo}; }

IQ iq_mul(const IQ& a, const IQ& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Rational lo = c[0], hi = c[0];
  for (int i = 1; i < 4; ++i) {
    if (c[i] < lo) lo = c[i];
    if (c[i] > hi) hi = c[i];
  }
  return {lo, hi};
}

// b must not contain zero
IQ iq_div(const IQ& a, const IQ& b) {
  IQ inv{Rational(1) / b.hi, Rational(1) / b.lo};
  return iq_mul(a, inv);
}

IQ iq_pow(const IQ& a, unsigned e) {
  IQ r = iq_point(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = iq_mul(r, a);
  return r;
}

IQ iq_eval_upoly(const UPoly& p, const IQ& x) {
  IQ acc = iq_point(Rational(0));
  for (size_t i = p.coeffs().size(); i-- > 0;)
    acc = iq_add(iq_mul(acc, x), iq_point(p.coeff(i)));
  return acc;
}

// point has one interval per variable of the varset (params included)
IQ iq_eval_mpoly(const MPoly& p, const std::vector<IQ>& point) {
  IQ acc = iq_point(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    IQ t = iq_point(c);
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) t = iq_mul(t, iq_pow(point[v], e[v]));
    acc = iq_add(acc, t);
  }
  return acc;
}

// ---- small helpers on systems ----

struct LinSub {
  size_t var;
  MPoly expr;  // var = expr in the variables still active afterwards
};

// pseudo-remainder sequence in variable v with content removal, inputs included
MPoly content_wrt(const MPoly& p, size_t v) {
  MPoly c(p.varset());
  for (const auto& q : p.coeffs_in(v))
    if (!q.is_zero()) c = gcd_mpoly(c, q);
  return c;
}

MPoly primitive_wrt(const MPoly& p, size_t v) {
  MPoly c = content_wrt(p, v);
  auto q = p.div_exact(c);
  if (!q) throw std::logic_error("content does not divide its polynomial");
  return *q;
}

MPoly pseudo_rem(const MPoly& p, const MPoly& q, size_t v) {
  std::vector<MPoly> r = p.coeffs_in(v);
  std::vector<MPoly> b = q.coeffs_in(v);
  const MPoly lb = b.back();
  auto trim = [&]() {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  };
  trim();
  while (static_cast<int>(r.size()) >= static_cast<int>(b.size())) {
    MPoly lr = r.back();
    size_t shift = r.size() - b.size();
    for (auto& c : r) c = c * lb;
    for (size_t j = 0; j < b.size(); ++j)
      r[shift + j] = r[shift + j] - lr * b[j];
    trim();
  }
  if (r.empty()) return MPoly(p.varset());
  return MPoly::from_coeffs_in(p.varset(), v, r);
}

std::vector<MPoly> primitive_prs(const MPoly& p, const MPoly& q, size_t v) {
  std::vector<MPoly> seq;
  seq.push_back(primitive_wrt(p, v));
  seq.push_back(primitive_wrt(q, v));
  while (seq.back().degree_in(v) > 0) {
    MPoly r = pseudo_rem(seq[seq.size() - 2], seq.back(), v);
    if (r.is_zero()) break;
    seq.push_back(primitive_wrt(r, v));
  }
  return seq;
}

void require_param_free(const std::vector<MPoly>& eqs) {
  for (const auto& f : eqs) {
    const VarSetPtr& vs = f.varset();
    for (size_t p = 0; p < vs->nparams(); ++p)
      if (f.depends_on(p))
        throw std::invalid_argument("oracle input still depends on a parameter");
  }
}

struct Prepared {
  std::vector<MPoly> eqs;      // nonzero, nonconstant
  std::vector<size_t> active;  // x-variable indices still present
  std::vector<LinSub> subs;    // applied in order; undo in reverse
  bool inconsistent = false;   // a nonzero constant appeared
};

// strip zero equations; flag nonzero constants
void tidy(Prepared& st) {
  std::vector<MPoly> kept;
  for (auto& f : st.eqs) {
    if (f.is_zero()) continue;
    if (f.is_constant()) {
      st.inconsistent = true;
      return;
    }
    kept.push_back(f);
  }
  st.eqs = std::move(kept);
}

// substitute away variables that occur linearly with a constant coefficient
Prepared prepare(const std::vector<MPoly>& eqs) {
  Prepared st;
  st.eqs = eqs;
  const VarSetPtr& vs = eqs.front().varset();
  for (size_t v = vs->nparams(); v < vs->size(); ++v) st.active.push_back(v);
  tidy(st);
  bool progress = true;
  while (progress && !st.inconsistent) {
    progress = false;
    for (size_t i = 0; i < st.eqs.size() && !progress; ++i) {
      for (size_t v : st.active) {
        const MPoly& f = st.eqs[i];
        if (f.degree_in(v) != 1) continue;
        if (!f.leading_coeff_in(v).is_constant()) continue;
        auto cs = f.coeffs_in(v);
        Rational lc = cs[1].constant_value();
        MPoly expr = cs[0] * (Rational(-1) / lc);
        std::vector<MPoly> rest;
        for (size_t j = 0; j < st.eqs.size(); ++j)
          if (j != i) rest.push_back(st.eqs[j].substitute(v, expr));
        st.subs.push_back({v, expr});
        st.active.erase(std::find(st.active.begin(), st.active.end(), v));
        st.eqs = std::move(rest);
        tidy(st);
        progress = true;
        break;
      }
    }
  }
  return st;
}

// coordinate recovery: fill the box entries for the substituted variables,
// innermost substitution first
void back_substitute(const Prepared& st, std::vector<IQ>& point) {
  for (auto it = st.subs.rbegin(); it != st.subs.rend(); ++it)
    point[it->var] = iq_eval_mpoly(it->expr, point);
}

std::vector<std::pair<Rational, Rational>> box_from_point(const VarSetPtr& vs,
                                                         const std::vector<IQ>& point) {
  std::vector<std::pair<Rational, Rational>> box;
  for (size_t v = vs->nparams(); v < vs->size(); ++v)
    box.emplace_back(point[v].lo, point[v].hi);
  return box;
}

const Rational kBoxWidth = rat(1, 1024);

// ---- elimination to a univariate polynomial in the form value u ----

// vsU has "@u" first, then the names of `keep`; exponent surgery by name
MPoly to_uvars(const MPoly& f, const VarSetPtr& vsU) { return f.transplant(vsU); }

// iterated-resultant cascade; returns the final polynomials in u only,
// or nullopt when a resultant degenerates
std::optional<std::vector<MPoly>> cascade(std::vector<MPoly> polys, const VarSetPtr& vsU) {
  for (size_t v = vsU->size(); v-- > 1;) {
    std::vector<MPoly> dep, keep;
    for (auto& f : polys)
      (f.degree_in(v) > 0 ? dep : keep).push_back(f);
    if (dep.empty()) continue;  // the substituted variable no longer occurs
    if (dep.size() == 1) return std::nullopt;
    std::sort(dep.begin(), dep.end(), [&](const MPoly& a, const MPoly& b) {
      return a.degree_in(v) < b.degree_in(v);
    });
    for (size_t i = 1; i < dep.size(); ++i) {
      MPoly r = resultant(dep[0], dep[i], v);
      if (r.is_zero()) return std::nullopt;
      if (!r.is_constant()) keep.push_back(r);
    }
    if (keep.empty()) return std::nullopt;
    polys = std::move(keep);
  }
  return polys;
}

UPoly fold_to_upoly(const std::vector<MPoly>& polys) {
  UPoly e;
  for (const auto& f : polys) {
    UPoly u = f.to_upoly(0);
    e = e.is_zero() ? u : gcd_upoly(e, u);
  }
  return e;
}

struct TwoVarElim {
  UPoly elim;        // squarefree, certified against all equations
  UPoly s1, s0;      // degree-one PRS element s1(u) * b + s0(u), if found
  bool have_rur = false;
};

// eqs live in vsU = {"@u", a, b}; eqs already substituted (no a), >= 2 of them
std::optional<TwoVarElim> eliminate_two(const std::vector<MPoly>& eqs, const VarSetPtr& vsU) {
  const size_t b = 2;
  for (const auto& f : eqs) {
    if (f.degree_in(b) < 1) return std::nullopt;
    MPoly lc = f.leading_coeff_in(b);
    if (!lc.is_constant()) return std::nullopt;
  }
  MPoly r = resultant(eqs[0], eqs[1], b);
  if (r.is_zero()) throw OracleNotZeroDimensional();
  UPoly e = squarefree_part(r.to_upoly(0));

  TwoVarElim out;
  auto seq = primitive_prs(eqs[0], eqs[1], b);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it->degree_in(b) == 1) {
      auto cs = it->coeffs_in(b);
      out.s1 = cs[1].to_upoly(0);
      out.s0 = cs[0].to_upoly(0);
      out.have_rur = true;
      break;
    }
  }
  // equations beyond the first two are imposed through the parametrization
  if (eqs.size() > 2) {
    if (!out.have_rur) return std::nullopt;
    if (gcd_upoly(e, out.s1).degree() > 0) return std::nullopt;
    for (size_t i = 2; i < eqs.size(); ++i) {
      auto cs = eqs[i].coeffs_in(b);
      UPoly n;  // numerator of eqs[i](u, -s0/s1)
      size_t d = cs.size() - 1;
      for (size_t j = 0; j < cs.size(); ++j) {
        UPoly term = cs[j].is_zero() ? UPoly() : cs[j].to_upoly(0);
        if (term.is_zero()) continue;
        UPoly pw = UPoly::constant(Rational(1));
        for (size_t k = 0; k < j; ++k) pw = pw * -out.s0;
        for (size_t k = j; k < d; ++k) pw = pw * out.s1;
        n = n + term * pw;
      }
      if (n.is_zero()) continue;
      e = gcd_upoly(e, n);
      if (e.degree() == 0) break;
    }
  }
  out.elim = e;
  return out;
}

struct CountPair {
  int complexn = 0;
  int realn = 0;
  bool operator==(const CountPair& o) const {
    return complexn == o.complexn && realn == o.realn;
  }
};

}  // namespace

std::optional<UPoly> raw_eliminant(const std::vector<MPoly>& eqs,
                                   const std::vector<Rational>& lambda) {
  if (eqs.empty()) return std::nullopt;
  const VarSetPtr& vs = eqs.front().varset();
  size_t n = vs->nvars();
  if (lambda.size() != n || sgn(lambda[0]) == 0) return std::nullopt;
  std::vector<std::string> names{"@u"};
  for (size_t i = 0; i < n; ++i) names.push_back(vs->name(vs->nparams() + i));
  auto vsU = VarSet::make(names, 0);
  // x0 = (u - sum_{i>=1} lambda_i x_i) / lambda_0
  MPoly expr = MPoly::variable(vsU, 0);
  for (size_t i = 1; i < n; ++i)
    expr = expr - MPoly::variable(vsU, i + 1) * lambda[i];
  expr = expr * (Rational(1) / lambda[0]);
  std::vector<MPoly> sub;
  for (const auto& f : eqs) {
    MPoly g = to_uvars(f, vsU).substitute(1, expr);
    if (!g.is_zero()) sub.push_back(g);
  }
  if (sub.empty()) return std::nullopt;
  try {
    auto fin = cascade(std::move(sub), vsU);
    if (!fin) return std::nullopt;
    UPoly e = fold_to_upoly(*fin);
    if (e.is_zero() || e.degree() == 0) return std::nullopt;
    return e;
  } catch (const DegenerateInput&) {
    return std::nullopt;
  }
}

SolveResult oracle_count(const std::vector<MPoly>& eqs, unsigned seed) {
  if (eqs.empty()) throw std::invalid_argument("empty system");
  require_param_free(eqs);
  const VarSetPtr& vs = eqs.front().varset();
  Prepared st = prepare(eqs);

  SolveResult res;
  if (st.inconsistent) return res;

  // a variable absent from every remaining equation makes the set infinite
  for (size_t v : st.active) {
    bool seen = false;
    for (const auto& f : st.eqs) seen = seen || f.depends_on(v);
    if (!seen) throw OracleNotZeroDimensional();
  }

  if (st.active.empty()) {
    res.complex_distinct = res.real_distinct = 1;
    std::vector<IQ> point(vs->size(), iq_point(Rational(0)));
    back_substitute(st, point);
    res.real_boxes.push_back(box_from_point(vs, point));
    return res;
  }

  if (st.active.size() == 1) {
    size_t v = st.active[0];
    UPoly g;
    for (const auto& f : st.eqs) {
      UPoly u = f.to_upoly(v);
      g = g.is_zero() ? u : gcd_upoly(g, u);
    }
    if (g.degree() == 0) return res;
    UPoly sf = squarefree_part(g);
    res.complex_distinct = sf.degree();
    auto roots = isolate_real_roots(sf);
    res.real_distinct = static_cast<int>(roots.size());
    for (auto& r : roots) {
      RealAlgebraicNumber rr = r.refined_below(kBoxWidth);
      std::vector<IQ> point(vs->size(), iq_point(Rational(0)));
      point[v] = IQ{rr.lo(), rr.hi()};
      back_substitute(st, point);
      res.real_boxes.push_back(box_from_point(vs, point));
    }
    return res;
  }

  if (st.active.size() == 2) {
    if (st.eqs.size() < 2) throw OracleNotZeroDimensional();
    size_t va = st.active[0], vb = st.active[1];
    auto vsU = VarSet::make({"@u", vs->name(va), vs->name(vb)}, 0);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> pick(-30, 30);
    std::optional<CountPair> last;
    std::optional<Rational> accepted_lambda;
    std::optional<TwoVarElim> accepted;
    for (int attempt = 0; attempt < 24 && !accepted; ++attempt) {
      Rational lam = attempt == 0 ? Rational(1) : Rational(pick(rng));
      if (sgn(lam) == 0) continue;
      MPoly expr = MPoly::variable(vsU, 0) - MPoly::variable(vsU, 2) * lam;
      std::vector<MPoly> sub;
      for (const auto& f : st.eqs) sub.push_back(to_uvars(f, vsU).substitute(1, expr));
      std::optional<TwoVarElim> el;
      try {
        el = eliminate_two(sub, vsU);
      } catch (const DegenerateInput&) {
        el = std::nullopt;
      }
      if (!el) {
        last.reset();
        continue;
      }
      CountPair c{el->elim.degree(), count_real_roots(el->elim)};
      if (last && *last == c) {
        accepted = el;
        accepted_lambda = lam;
      }
      last = c;
    }
    if (!accepted) throw SeparationFailure();

    const TwoVarElim& el = *accepted;
    Rational lam = *accepted_lambda;
    res.complex_distinct = el.elim.degree();
    res.separating_form.assign(vs->nvars(), Rational(0));
    res.separating_form[va - vs->nparams()] = Rational(1);
    res.separating_form[vb - vs->nparams()] = lam;
    auto roots = isolate_real_roots(el.elim);
    res.real_distinct = static_cast<int>(roots.size());
    for (auto& r : roots) {
      bool rur_ok = el.have_rur && sign_at(el.s1, r) != 0;
      if (!rur_ok) {
        res.real_boxes.emplace_back();  // count certified, coordinates not
        continue;
      }
      RealAlgebraicNumber rr = r;
      std::vector<std::pair<Rational, Rational>> box;
      for (int iter = 0; iter < 80; ++iter) {
        rr = rr.refined();
        IQ u{rr.lo(), rr.hi()};
        IQ s1v = iq_eval_upoly(el.s1, u);
        if (sgn(s1v.lo) * sgn(s1v.hi) <= 0) continue;
        IQ bs = iq_div(iq_neg(iq_eval_upoly(el.s0, u)), s1v);
        IQ as = iq_add(u, iq_neg(iq_mul(iq_point(lam), bs)));
        std::vector<IQ> point(vs->size(), iq_point(Rational(0)));
        point[va] = as;
        point[vb] = bs;
        back_substitute(st, point);
        box = box_from_point(vs, point);
        bool wide = false;
        for (auto& [lo, hi] : box) wide = wide || hi - lo > kBoxWidth;
        if (!wide) break;
      }
      res.real_boxes.push_back(std::move(box));
    }
    return res;
  }

  // three or more variables: cascade with cross-checked separating forms
  std::mt19937 rng(seed ^ 0x9e3779b9u);
  std::uniform_int_distribution<long> pick(-30, 30);
  std::optional<CountPair> last;
  for (int attempt = 0; attempt < 24; ++attempt) {
    std::vector<Rational> lambda;
    lambda.push_back(Rational(1));
    for (size_t i = 1; i < st.active.size(); ++i) lambda.push_back(Rational(pick(rng)));
    // embed the reduced system into a varset over the active variables only
    // and reuse raw_eliminant's cascade
    std::vector<MPoly> reduced;
    std::vector<std::string> rnames;
    for (size_t v : st.active) rnames.push_back(vs->name(v));
    auto vsR = VarSet::make(rnames, 0);
    for (const auto& f : st.eqs) reduced.push_back(f.transplant(vsR));
    auto e = raw_eliminant(reduced, lambda);
    if (!e) {
      last.reset();
      continue;
    }
    UPoly sf = squarefree_part(*e);
    CountPair c{sf.degree(), count_real_roots(sf)};
    if (last && *last == c) {
      res.complex_distinct = c.complexn;
      res.real_distinct = c.realn;
      res.separating_form.assign(vs->nvars(), Rational(0));
      for (size_t i = 0; i < st.active.size(); ++i)
        res.separating_form[st.active[i] - vs->nparams()] = lambda[i];
      res.real_boxes.assign(static_cast<size_t>(c.realn), {});
      return res;
    }
    last = c;
  }
  throw SeparationFailure();
}

SolveResult oracle_count_ext(const std::vector<MPoly>& eqs, size_t ext_var,
                             const RealAlgebraicNumber& alpha, unsigned seed) {
  if (eqs.size() != 2) throw std::invalid_argument("extension oracle expects two equations");
  const VarSetPtr& vs = eqs.front().varset();
  for (const auto& f : eqs)
    for (size_t p = 0; p < vs->nparams(); ++p)
      if (p != ext_var && f.depends_on(p))
        throw std::invalid_argument("oracle input depends on an unbound parameter");
  if (vs->nvars() != 2) throw std::invalid_argument("extension oracle expects two variables");
  if (alpha.is_rational())
    throw std::invalid_argument("use the rational oracle for rational points");

  size_t va = vs->nparams(), vb = va + 1;
  auto vsU = VarSet::make({vs->name(ext_var), "@u", vs->name(va), vs->name(vb)}, 1);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> pick(-30, 30);
  std::optional<CountPair> last;
  for (int attempt = 0; attempt < 24; ++attempt) {
    ExtField F(alpha.defining(), alpha);
    Rational lam = attempt == 0 ? Rational(1) : Rational(pick(rng));
    if (sgn(lam) == 0) continue;
    MPoly expr = MPoly::variable(vsU, 1) - MPoly::variable(vsU, 3) * lam;
    std::vector<MPoly> sub;
    bool bad = false;
    for (const auto& f : eqs) {
      MPoly g = to_uvars(f, vsU).substitute(2, expr);
      if (g.degree_in(3) < 1) {
        bad = true;
        break;
      }
      MPoly lc = g.leading_coeff_in(3);
      // the leading coefficient must be constant in u and nonzero at alpha
      if (lc.degree_in(1) > 0 || F.is_zero(lc.is_constant()
                                               ? UPoly::constant(lc.constant_value())
                                               : lc.to_upoly(0))) {
        bad = true;
        break;
      }
      sub.push_back(g);
    }
    if (bad) {
      last.reset();
      continue;
    }
    MPoly r = resultant(sub[0], sub[1], 3);
    // read off the eliminant over Q(alpha): coefficients in u, reduced
    ExtPoly e;
    for (const auto& cu : r.coeffs_in(1))
      e.push_back(F.reduce(cu.is_zero() ? UPoly()
                                        : (cu.is_constant() ? UPoly::constant(cu.constant_value())
                                                            : cu.to_upoly(0))));
    if (ext_degree(F, e) < 0) throw OracleNotZeroDimensional();
    ExtPoly sf = ext_squarefree(F, e);
    CountPair c{ext_degree(F, sf), ext_count_real_roots(F, sf)};
    if (last && *last == c) {
      SolveResult res;
      res.complex_distinct = c.complexn;
      res.real_distinct = c.realn;
      res.separating_form = {Rational(1), lam};
      return res;
    }
    last = c;
  }
  throw SeparationFailure();
}

}  // namespace trsect
