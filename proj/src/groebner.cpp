#include "trsect/groebner.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "trsect/oracle.hpp"

namespace trsect {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

ParametricSystem parse_system(std::istream& in) {
  std::vector<std::string> params, vars, polys;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed.empty()) continue;
    if (trimmed.rfind("params:", 0) == 0) {
      params = split_ws(trimmed.substr(7));
    } else if (trimmed.rfind("vars:", 0) == 0) {
      vars = split_ws(trimmed.substr(5));
    } else {
      polys.push_back(trimmed);
    }
  }
  if (vars.empty()) throw std::invalid_argument("system file has no 'vars:' line");
  std::vector<std::string> names = params;
  names.insert(names.end(), vars.begin(), vars.end());
  ParametricSystem sys;
  sys.vars = VarSet::make(std::move(names), params.size());
  for (const auto& p : polys) sys.equations.push_back(parse_mpoly(p, sys.vars));
  return sys;
}

ParametricSystem parse_system_text(const std::string& text) {
  std::istringstream is(text);
  return parse_system(is);
}

namespace {

const MonomialOrder kBlock{OrderKind::BlockXoverY};

bool divides(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// full reduction modulo a list of (monic) polynomials, block order
MPoly reduce_full(MPoly p, const std::vector<MPoly>& gens, const std::vector<Exponents>& lms) {
  const VarSetPtr& vs = p.varset();
  MPoly rem(vs);
  while (!p.is_zero()) {
    Exponents m = p.leading_exponents(kBlock);
    Rational c = p.coeff(m);
    bool reduced = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (divides(lms[i], m)) {
        MPoly t = MPoly::monomial(vs, exp_sub(m, lms[i]), c / gens[i].coeff(lms[i]));
        p = p - t * gens[i];
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      MPoly t = MPoly::monomial(vs, m, c);
      rem = rem + t;
      p = p - t;
    }
  }
  return rem;
}

MPoly spoly(const MPoly& f, const Exponents& lmf, const MPoly& g, const Exponents& lmg) {
  const VarSetPtr& vs = f.varset();
  Exponents l = exp_lcm(lmf, lmg);
  MPoly tf = MPoly::monomial(vs, exp_sub(l, lmf), Rational(1) / f.coeff(lmf));
  MPoly tg = MPoly::monomial(vs, exp_sub(l, lmg), Rational(1) / g.coeff(lmg));
  return f * tf - g * tg;
}

}  // namespace

ParametricGB groebner_basis(const ParametricSystem& sys) {
  if (sys.equations.empty()) throw std::invalid_argument("empty system");
  const VarSetPtr& vs = sys.vars;
  const size_t t = vs->nparams();
  const size_t total = vs->size();

  std::vector<MPoly> G;
  std::vector<Exponents> lms;
  for (const auto& f : sys.equations) {
    if (f.is_zero()) continue;
    MPoly m = f * (Rational(1) / f.coeff(f.leading_exponents(kBlock)));
    G.push_back(m);
    lms.push_back(m.leading_exponents(kBlock));
  }
  if (G.empty()) throw std::invalid_argument("all equations are zero");

  using Pair = std::pair<size_t, size_t>;
  auto pair_lcm = [&](const Pair& p) { return exp_lcm(lms[p.first], lms[p.second]); };
  std::vector<Pair> queue;
  std::set<Pair> done;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) queue.push_back({i, j});

  while (!queue.empty()) {
    // normal selection: smallest lcm in the block order
    size_t best = 0;
    Exponents bl = pair_lcm(queue[0]);
    for (size_t k = 1; k < queue.size(); ++k) {
      Exponents l = pair_lcm(queue[k]);
      if (kBlock.less(l, bl, *vs)) {
        bl = std::move(l);
        best = k;
      }
    }
    Pair pr = queue[best];
    queue.erase(queue.begin() + static_cast<long>(best));
    done.insert(pr);

    const Exponents l = pair_lcm(pr);
    // coprime criterion
    if (l == exp_add(lms[pr.first], lms[pr.second])) continue;
    // chain criterion
    bool chained = false;
    for (size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pr.first || k == pr.second) continue;
      if (!divides(lms[k], l)) continue;
      Pair a{std::min(k, pr.first), std::max(k, pr.first)};
      Pair b{std::min(k, pr.second), std::max(k, pr.second)};
      if (done.count(a) && done.count(b)) chained = true;
    }
    if (chained) continue;

    MPoly h = reduce_full(spoly(G[pr.first], lms[pr.first], G[pr.second], lms[pr.second]), G, lms);
    if (h.is_zero()) continue;
    h = h * (Rational(1) / h.coeff(h.leading_exponents(kBlock)));
    G.push_back(h);
    lms.push_back(h.leading_exponents(kBlock));
    for (size_t i = 0; i + 1 < G.size(); ++i) queue.push_back({i, G.size() - 1});
  }

  // minimal basis: drop generators whose lead is divisible by another lead
  std::vector<MPoly> minimal;
  std::vector<Exponents> minlms;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(lms[j], lms[i]) && !(lms[i] == lms[j] && j > i)) redundant = true;
    }
    if (!redundant) {
      minimal.push_back(G[i]);
      minlms.push_back(lms[i]);
    }
  }
  // tail-reduce each against the others
  std::vector<MPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    std::vector<Exponents> olms;
    for (size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      olms.push_back(minlms[j]);
    }
    reduced.push_back(reduce_full(minimal[i], others, olms));
  }

  ParametricGB gb;
  gb.vars_ = vs;
  std::vector<std::pair<Exponents, MPoly>> sorted;
  for (auto& g : reduced) sorted.emplace_back(g.leading_exponents(kBlock), std::move(g));
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return kBlock.less(a.first, b.first, *vs); });
  for (auto& [lm, g] : sorted) gb.gens_.push_back(std::move(g));

  // x-staircase data
  bool trivial = false;
  for (const auto& g : gb.gens_) {
    Exponents lm = g.leading_exponents(kBlock);
    Exponents xl(total, 0);
    for (size_t i = t; i < total; ++i) xl[i] = lm[i];
    // collect the Q[y]-coefficient of the x-leading monomial
    MPoly cy(vs);
    for (const auto& [e, c] : g.terms()) {
      bool same = true;
      for (size_t i = t; i < total && same; ++i) same = (e[i] == xl[i]);
      if (!same) continue;
      Exponents ypart(total, 0);
      for (size_t i = 0; i < t; ++i) ypart[i] = e[i];
      cy.add_term(ypart, c);
    }
    if (std::all_of(xl.begin(), xl.end(), [](unsigned v) { return v == 0; })) trivial = true;
    gb.xleads_.push_back(std::move(xl));
    gb.xlead_coeffs_.push_back(std::move(cy));
  }

  if (!trivial) {
    // pure-power bound per x variable
    std::vector<unsigned> bound(total, 0);
    for (size_t xi = t; xi < total; ++xi) {
      unsigned b = 0;
      for (const auto& xl : gb.xleads_) {
        bool pure = xl[xi] > 0;
        for (size_t j = t; j < total && pure; ++j)
          if (j != xi && xl[j] > 0) pure = false;
        if (pure && (b == 0 || xl[xi] < b)) b = xl[xi];
      }
      if (b == 0) throw NotZeroDimensional();
      bound[xi] = b;
    }
    // enumerate staircase monomials below the bounds
    std::vector<Exponents> cells{Exponents(total, 0)};
    for (size_t xi = t; xi < total; ++xi) {
      std::vector<Exponents> next;
      for (const auto& e : cells) {
        for (unsigned k = 0; k < bound[xi]; ++k) {
          Exponents f = e;
          f[xi] = k;
          next.push_back(std::move(f));
        }
      }
      cells = std::move(next);
    }
    for (const auto& e : cells) {
      bool under = true;
      for (const auto& xl : gb.xleads_)
        if (divides(xl, e)) {
          under = false;
          break;
        }
      if (under) gb.basis_.push_back(e);
    }
    std::sort(gb.basis_.begin(), gb.basis_.end(),
              [&](const Exponents& a, const Exponents& b) { return kBlock.less(a, b, *vs); });
  }

  // non-specialization polynomial: squarefree lcm of the x-leading coefficients
  MPoly l = MPoly::constant(vs, Rational(1));
  for (const auto& c : gb.xlead_coeffs_) {
    if (c.is_constant()) continue;
    MPoly g = gcd_mpoly(l, c);
    l = l * *c.div_exact(g);
  }
  gb.winfty_ = l.is_constant() ? MPoly::constant(vs, Rational(1)) : squarefree_part_mpoly(l);

  // best-effort split of winfty via content extraction
  std::vector<MPoly> pending{gb.winfty_};
  while (!pending.empty()) {
    MPoly w = std::move(pending.back());
    pending.pop_back();
    if (w.is_constant()) continue;
    bool split = false;
    for (size_t v = 0; v < t && !split; ++v) {
      if (!w.depends_on(v)) continue;
      MPoly c = content_in(w, v);
      if (!c.is_constant()) {
        pending.push_back(*w.div_exact(c));
        pending.push_back(c);
        split = true;
      }
    }
    if (!split) gb.winfty_factors_.push_back(w.primitive_rat());
  }

  return gb;
}

ParamXPoly ParametricGB::normal_form(const MPoly& p) const {
  const VarSetPtr& vs = vars_;
  const size_t t = vs->nparams();
  const size_t total = vs->size();

  // group generators by x-monomial with Q[y] coefficients, built once
  if (grouped_.size() != gens_.size()) {
    grouped_.clear();
    for (const auto& g : gens_) {
      std::map<Exponents, MPoly> parts;
      for (const auto& [e, c] : g.terms()) {
        Exponents xm(total, 0), ym(total, 0);
        for (size_t i = t; i < total; ++i) xm[i] = e[i];
        for (size_t i = 0; i < t; ++i) ym[i] = e[i];
        auto it = parts.find(xm);
        if (it == parts.end()) it = parts.emplace(xm, MPoly(vs)).first;
        it->second.add_term(ym, c);
      }
      std::vector<std::pair<Exponents, MPoly>> gr;
      for (auto& [xm, cy] : parts) gr.emplace_back(xm, std::move(cy));
      grouped_.push_back(std::move(gr));
    }
  }
  const auto& grouped = grouped_;

  ParamXPoly work;
  for (const auto& [e, c] : p.terms()) {
    Exponents xm(total, 0), ym(total, 0);
    for (size_t i = t; i < total; ++i) xm[i] = e[i];
    for (size_t i = 0; i < t; ++i) ym[i] = e[i];
    RatFun add = RatFun::of(MPoly::monomial(vs, ym, c));
    auto it = work.find(xm);
    if (it == work.end())
      work.emplace(xm, add);
    else {
      it->second = it->second + add;
      if (it->second.is_zero()) work.erase(it);
    }
  }

  while (true) {
    // pick the largest reducible x-monomial
    const Exponents* target = nullptr;
    size_t gen_idx = 0;
    for (const auto& [xm, c] : work) {
      for (size_t i = 0; i < xleads_.size(); ++i) {
        if (divides(xleads_[i], xm)) {
          if (!target || kBlock.less(*target, xm, *vs)) {
            target = &xm;
            gen_idx = i;
          }
          break;
        }
      }
    }
    if (!target) break;
    Exponents m = *target;
    RatFun factor = work.at(m) / RatFun::of(xlead_coeffs_[gen_idx]);
    Exponents shift = exp_sub(m, xleads_[gen_idx]);
    for (const auto& [xm, cy] : grouped[gen_idx]) {
      Exponents dst = exp_add(xm, shift);
      RatFun delta = factor * RatFun::of(cy);
      auto it = work.find(dst);
      if (it == work.end()) {
        if (!delta.is_zero()) work.emplace(dst, -delta);
      } else {
        it->second = it->second - delta;
        if (it->second.is_zero()) work.erase(it);
      }
    }
    work.erase(m);  // the leading term cancels exactly
  }
  return work;
}

std::vector<RatFun> ParametricGB::reduce_monomial_coords(const Exponents& xmono) const {
  auto it = nf_cache_.find(xmono);
  if (it == nf_cache_.end()) {
    MPoly mono = MPoly::monomial(vars_, xmono, Rational(1));
    it = nf_cache_.emplace(xmono, normal_form(mono)).first;
  }
  const ParamXPoly& nf = it->second;
  std::vector<RatFun> coords(basis_.size(), RatFun(vars_));
  for (const auto& [xm, c] : nf) {
    auto pos = std::lower_bound(basis_.begin(), basis_.end(), xm,
                                [&](const Exponents& a, const Exponents& b) {
                                  return kBlock.less(a, b, *vars_);
                                });
    if (pos == basis_.end() || !(*pos == xm))
      throw std::logic_error("normal form support escaped the staircase");
    coords[static_cast<size_t>(pos - basis_.begin())] = c;
  }
  return coords;
}

RadicalAudit check_radical_generic(const ParametricGB& gb, int trials, unsigned seed) {
  const VarSetPtr& vs = gb.vars();
  const size_t t = vs->nparams();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(-50, 50);
  int tested = 0, repeated = 0;
  for (int it = 0; it < trials * 4 && tested < trials; ++it) {
    std::vector<Rational> eta(t);
    for (auto& v : eta) v = Rational(pick(rng));
    std::vector<Rational> full(vs->size(), Rational(0));
    for (size_t i = 0; i < t; ++i) full[i] = eta[i];
    if (sgn(gb.winfty().eval(full)) == 0) continue;
    // specialize the original generators and inspect an eliminant
    std::vector<MPoly> spec;
    for (const auto& g : gb.generators()) spec.push_back(g.eval_params(eta));
    std::vector<Rational> lambda;
    for (size_t i = 0; i < vs->nvars(); ++i) lambda.push_back(Rational(1 + static_cast<long>(i) * 3));
    auto elim = raw_eliminant(spec, lambda);
    if (!elim || elim->is_zero() || elim->degree() == 0) continue;
    ++tested;
    if (gcd_upoly(*elim, elim->derivative()).degree() > 0) ++repeated;
  }
  if (tested == 0) return RadicalAudit::Ok;
  return repeated == tested ? RadicalAudit::Suspect : RadicalAudit::Ok;
}

bool is_linear_in_some_param(const MPoly& f, size_t* which) {
  const VarSetPtr& vs = f.varset();
  for (size_t v = 0; v < vs->nparams(); ++v) {
    if (f.degree_in(v) != 1) continue;
    if (f.leading_coeff_in(v).is_constant()) {
      if (which) *which = v;
      return true;
    }
  }
  return false;
}

std::optional<size_t> sole_variable(const MPoly& f) {
  std::optional<size_t> found;
  for (size_t v = 0; v < f.varset()->size(); ++v) {
    if (!f.depends_on(v)) continue;
    if (found) return std::nullopt;
    found = v;
  }
  return found;
}

}  // namespace trsect
