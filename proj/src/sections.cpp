#include "trsect/sections.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "trsect/oracle.hpp"

namespace trsect {

namespace {

bool is_homogeneous(const MPoly& p) {
  if (p.is_zero()) return true;
  int d = -1;
  for (const auto& [e, c] : p.terms()) {
    int s = 0;
    for (unsigned x : e) s += static_cast<int>(x);
    if (d < 0) d = s;
    if (s != d) return false;
  }
  return true;
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

size_t default_chart(const ProjectiveCurve& curve, size_t avoid = SIZE_MAX) {
  size_t last = curve.coords->size() - 1;
  if (last != avoid) return last;
  return last - 1;
}

// index of coordinate c inside a varset that lists `params` parameter names
// followed by the coordinates except those in `dropped`
size_t shifted_index(size_t c, size_t nparams, const std::vector<size_t>& dropped) {
  size_t idx = nparams + c;
  for (size_t d : dropped) {
    if (d == c) throw std::logic_error("coordinate was dropped");
    if (d < c) --idx;
  }
  return idx;
}

std::pair<int, int> count_specialized(const std::vector<MPoly>& eqs) {
  ParametricSystem sys;
  sys.vars = eqs.front().varset();
  sys.equations = eqs;
  auto H = hermite_matrix(sys);
  return signature_rank(specialize(H, {}));
}

}  // namespace

ProjectiveCurve parse_curve(std::istream& in) {
  ProjectiveCurve curve;
  std::string line;
  std::vector<std::string> body;
  std::vector<std::string> names;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "coords:") {
      names.assign(words.begin() + 1, words.end());
      continue;
    }
    if (words[0] == "degree:") {
      curve.degree = std::stoi(words.at(1));
      continue;
    }
    std::string joined;
    for (const auto& w : words) joined += w;
    body.push_back(joined);
  }
  if (names.size() < 2) throw std::invalid_argument("curve file needs a coords: line");
  curve.coords = VarSet::make(names, 0);
  for (const auto& s : body) {
    MPoly p = parse_mpoly(s, curve.coords);
    if (p.is_zero()) throw std::invalid_argument("zero equation in curve file");
    if (!is_homogeneous(p)) throw std::invalid_argument("non-homogeneous equation: " + s);
    curve.equations.push_back(p);
  }
  if (curve.equations.empty()) throw std::invalid_argument("curve file has no equations");
  return curve;
}

ProjectiveCurve parse_curve_text(const std::string& text) {
  std::istringstream is(text);
  return parse_curve(is);
}

SectionProblem section_system(const ProjectiveCurve& curve, size_t normalized, size_t chart,
                              const std::vector<size_t>& pinned, bool check_degree) {
  const size_t N = curve.coords->size();
  if (normalized >= N || chart >= N || normalized == chart)
    throw std::invalid_argument("invalid chart indices");
  for (size_t q : pinned)
    if (q >= N || q == normalized || q == chart)
      throw std::invalid_argument("invalid pinned coordinate");

  SectionProblem sp;
  sp.normalized = normalized;
  sp.chart = chart;
  sp.pinned = pinned;

  std::vector<MPoly> affine;
  for (const auto& eq : curve.equations) {
    MPoly d = eq.substitute(chart, Rational(1));
    if (d.is_zero()) throw DegenerateChart();
    affine.push_back(d);
  }

  std::vector<size_t> free_coords;
  for (size_t q = 0; q < N; ++q) {
    if (q == normalized || q == chart) continue;
    if (std::find(pinned.begin(), pinned.end(), q) != pinned.end()) continue;
    free_coords.push_back(q);
  }
  const size_t t = free_coords.size() + 1;  // plus the constant term
  for (size_t q : free_coords) sp.param_coord.push_back(q);
  sp.param_coord.push_back(chart);

  std::vector<std::string> wnames;
  for (size_t i = 0; i < t; ++i) wnames.push_back("a" + std::to_string(i + 1));
  for (size_t q = 0; q < N; ++q)
    if (q != chart) wnames.push_back(curve.coords->name(q));
  auto W = VarSet::make(wnames, t);

  MPoly expr(W);
  for (size_t i = 0; i < free_coords.size(); ++i)
    expr = expr - MPoly::variable(W, i) * MPoly::variable(W, shifted_index(free_coords[i], t, {chart}));
  expr = expr - MPoly::variable(W, t - 1);

  std::vector<std::string> fnames;
  for (size_t i = 0; i < t; ++i) fnames.push_back(wnames[i]);
  for (size_t q = 0; q < N; ++q)
    if (q != chart && q != normalized) fnames.push_back(curve.coords->name(q));
  auto F = VarSet::make(fnames, t);

  sp.system.vars = F;
  const size_t norm_idx = shifted_index(normalized, t, {chart});
  for (const auto& eq : affine)
    sp.system.equations.push_back(eq.transplant(W).substitute(norm_idx, expr).transplant(F));

  if (check_degree) {
    auto gb = groebner_basis(sp.system);
    sp.delta = gb.delta();
    if (curve.degree && sp.delta != static_cast<size_t>(*curve.degree))
      throw DegreeMismatch("generic section degree " + std::to_string(sp.delta) +
                           " does not match declared degree " + std::to_string(*curve.degree));
  }
  return sp;
}

VerifyResult verify_hyperplane(const ProjectiveCurve& curve, const std::vector<Rational>& coeffs,
                               size_t chart) {
  const size_t N = curve.coords->size();
  if (coeffs.size() != N) throw std::invalid_argument("need one coefficient per coordinate");
  size_t p = N;
  for (size_t q = 0; q < N; ++q)
    if (sgn(coeffs[q]) != 0) {
      p = q;
      break;
    }
  if (p == N) throw std::invalid_argument("zero hyperplane");
  if (chart == SIZE_MAX) chart = default_chart(curve, p);
  if (chart == p || chart >= N) throw std::invalid_argument("invalid chart");

  std::vector<MPoly> affine;
  for (const auto& eq : curve.equations) {
    MPoly d = eq.substitute(chart, Rational(1));
    if (d.is_zero()) throw DegenerateChart();
    affine.push_back(d);
  }

  std::vector<std::string> names0;
  for (size_t q = 0; q < N; ++q)
    if (q != chart) names0.push_back(curve.coords->name(q));
  auto V0 = VarSet::make(names0, 0);

  MPoly expr = MPoly::constant(V0, -coeffs[chart] / coeffs[p]);
  for (size_t q = 0; q < N; ++q) {
    if (q == chart || q == p) continue;
    expr = expr - MPoly::variable(V0, shifted_index(q, 0, {chart})) * (coeffs[q] / coeffs[p]);
  }

  std::vector<std::string> names1;
  for (size_t q = 0; q < N; ++q)
    if (q != chart && q != p) names1.push_back(curve.coords->name(q));
  auto V1 = VarSet::make(names1, 0);

  ParametricSystem sys;
  sys.vars = V1;
  const size_t p_idx = shifted_index(p, 0, {chart});
  for (const auto& eq : affine)
    sys.equations.push_back(eq.transplant(V0).substitute(p_idx, expr).transplant(V1));

  auto H = hermite_matrix(sys);
  auto [sig, rank] = signature_rank(specialize(H, {}));
  VerifyResult res;
  res.real = sig;
  res.complex_distinct = rank;
  res.dim = H.dim();
  try {
    auto o = oracle_count(sys.equations);
    if (o.real_distinct != sig || o.complex_distinct != rank)
      throw std::logic_error("oracle disagrees with the Hermite counts");
    // fill in the eliminated coordinate: an affine image of the box
    size_t pos = p - (p > chart ? 1 : 0);  // slot of p among coords != chart
    for (auto box : o.real_boxes) {
      Rational lo = -coeffs[chart] / coeffs[p], hi = lo;
      for (size_t q = 0, k = 0; q < N; ++q) {
        if (q == chart || q == p) continue;
        Rational c = -coeffs[q] / coeffs[p];
        if (sgn(c) >= 0) {
          lo += c * box[k].first;
          hi += c * box[k].second;
        } else {
          lo += c * box[k].second;
          hi += c * box[k].first;
        }
        ++k;
      }
      box.insert(box.begin() + static_cast<long>(pos), {lo, hi});
      res.boxes.push_back(std::move(box));
    }
  } catch (const SeparationFailure&) {
    // counts stand; boxes are display-only
  }
  return res;
}

std::pair<int, int> infinity_points(const ProjectiveCurve& curve, size_t chart) {
  const size_t N = curve.coords->size();
  int real = 0, cplx = 0;
  for (size_t m = 0; m < N; ++m) {
    if (m == chart) continue;
    std::vector<MPoly> eqs;
    bool inconsistent = false;
    for (const auto& eq : curve.equations) {
      MPoly d = eq.substitute(chart, Rational(0));
      for (size_t q = 0; q < m; ++q)
        if (q != chart) d = d.substitute(q, Rational(0));
      d = d.substitute(m, Rational(1));
      if (d.is_constant()) {
        if (sgn(d.constant_value()) != 0) inconsistent = true;
        continue;
      }
      eqs.push_back(d);
    }
    if (inconsistent) continue;
    std::vector<std::string> rest;
    for (size_t q = m + 1; q < N; ++q)
      if (q != chart) rest.push_back(curve.coords->name(q));
    if (rest.empty() || eqs.empty()) {
      if (eqs.empty()) {
        // every equation vanished identically: a solution iff no variables remain
        if (rest.empty()) {
          ++real;
          ++cplx;
        } else {
          throw OracleNotZeroDimensional();
        }
      }
      continue;
    }
    auto V = VarSet::make(rest, 0);
    std::vector<MPoly> moved;
    for (const auto& e : eqs) moved.push_back(e.transplant(V));
    auto o = oracle_count(moved);
    real += o.real_distinct;
    cplx += o.complex_distinct;
  }
  return {real, cplx};
}

SectionVerdict totally_real_section(const ProjectiveCurve& curve, size_t chart, unsigned seed,
                                    int tries, int jobs) {
  const size_t N = curve.coords->size();
  if (chart == SIZE_MAX) chart = default_chart(curve);
  SectionVerdict verdict;

  std::vector<size_t> passes;
  for (size_t q = 0; q < N; ++q)
    if (q != chart) passes.push_back(q);

  // the primary pass fixes the section degree
  SectionProblem primary = section_system(curve, passes[0], chart, {}, true);
  verdict.delta = primary.delta;
  const int target = static_cast<int>(primary.delta);

  struct PassOutcome {
    SectionProblem sp;
    WitnessResult wr;
  };
  auto run_pass = [&](size_t k) -> PassOutcome {
    std::vector<size_t> pinned(passes.begin(), passes.begin() + k);
    SectionProblem sp =
        k == 0 ? primary : section_system(curve, passes[k], chart, pinned, false);
    WitnessResult wr = find_witness(sp.system, target, seed + static_cast<unsigned>(k), tries);
    return {std::move(sp), std::move(wr)};
  };

  std::vector<PassOutcome> outcomes;
  if (jobs > 1) {
    std::vector<std::future<PassOutcome>> futs;
    for (size_t k = 0; k < passes.size(); ++k)
      futs.push_back(std::async(std::launch::async, run_pass, k));
    for (auto& f : futs) outcomes.push_back(f.get());
  } else {
    for (size_t k = 0; k < passes.size(); ++k) {
      outcomes.push_back(run_pass(k));
      if (outcomes.back().wr.point) break;
    }
  }

  for (size_t k = 0; k < outcomes.size(); ++k) {
    const auto& out = outcomes[k];
    for (const auto& u : out.wr.unresolved)
      verdict.unresolved.push_back("chart " + curve.coords->name(passes[k]) + ": " + u);
    if (out.wr.point && !verdict.found) {
      std::vector<Rational> b(N, Rational(0));
      b[passes[k]] = Rational(1);
      for (size_t i = 0; i < out.sp.param_coord.size(); ++i)
        b[out.sp.param_coord[i]] = (*out.wr.point)[i];
      auto check = verify_hyperplane(curve, b, chart);
      if (check.real != target)
        throw std::logic_error("witness failed re-verification");
      verdict.found = true;
      verdict.hyperplane = b;
      verdict.real = check.real;
      verdict.boxes = check.boxes;
    }
  }

  auto [ir, ic] = infinity_points(curve, chart);
  verdict.inf_real = ir;
  verdict.inf_complex = ic;
  if (!verdict.found && ir == target && ic == target) {
    // the chart hyperplane itself meets the curve in delta distinct real points
    verdict.found = true;
    verdict.hyperplane.assign(N, Rational(0));
    verdict.hyperplane[chart] = Rational(1);
    verdict.real = ir;
  }
  return verdict;
}

FiberReport fiber_classify(const MPoly& f, const MPoly& q1, const MPoly& q2, size_t chart) {
  const VarSetPtr& vs = f.varset();
  if (vs->size() != 3 || vs->nparams() != 0)
    throw std::invalid_argument("fiber_classify expects a plane curve in 3 coordinates");
  if (!(*q1.varset() == *vs) || !(*q2.varset() == *vs))
    throw std::invalid_argument("forms must share the curve coordinates");
  if (!is_homogeneous(f) || !is_homogeneous(q1) || !is_homogeneous(q2))
    throw std::invalid_argument("inputs must be homogeneous");
  if (q1.is_zero() || q2.is_zero()) throw std::invalid_argument("zero form in the pencil");
  if (q1.total_degree() != q2.total_degree())
    throw std::invalid_argument("pencil forms must have equal degree");
  if (chart == SIZE_MAX) chart = 2;

  // divide out a fixed component of the pencil
  MPoly r1 = q1, r2 = q2;
  MPoly g = gcd_mpoly(r1, r2);
  if (!g.is_constant()) {
    r1 = *r1.div_exact(g);
    r2 = *r2.div_exact(g);
  }

  MPoly fa = f.substitute(chart, Rational(1));
  MPoly ra1 = r1.substitute(chart, Rational(1));
  MPoly ra2 = r2.substitute(chart, Rational(1));
  if (fa.is_zero()) throw DegenerateChart();
  if (ra2.is_zero()) throw std::invalid_argument("second form vanishes on the chart");

  std::vector<std::string> names{"s"};
  for (size_t q = 0; q < 3; ++q)
    if (q != chart) names.push_back(vs->name(q));
  auto P = VarSet::make(names, 1);

  ParametricSystem sys;
  sys.vars = P;
  sys.equations.push_back(fa.transplant(P));
  sys.equations.push_back(ra1.transplant(P) - MPoly::variable(P, 0) * ra2.transplant(P));

  FiberReport rep;
  rep.affine = classify_1param(sys);
  rep.delta = rep.affine.delta;
  rep.unresolved = rep.affine.unresolved;
  rep.max_real = rep.affine.max_real;

  // the fiber at s = infinity: {f, q2}
  std::vector<std::string> anames;
  for (size_t q = 0; q < 3; ++q)
    if (q != chart) anames.push_back(vs->name(q));
  auto A = VarSet::make(anames, 0);
  auto [ir, ic] = count_specialized({fa.transplant(A), ra2.transplant(A)});
  rep.inf_real = ir;
  rep.inf_complex = ic;
  rep.max_real = std::max(rep.max_real, ir);

  const int delta = static_cast<int>(rep.delta);
  for (const auto& rg : rep.affine.regions)
    if (rg.real == delta) rep.totally_real = true;
  for (const auto& bp : rep.affine.boundary)
    if (bp.real && *bp.real == delta) rep.totally_real = true;
  if (ir == delta) rep.totally_real = true;
  return rep;
}

}  // namespace trsect
