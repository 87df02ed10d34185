#include "trsect/hermite.hpp"

#include <map>

namespace trsect {

namespace {

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// trace of multiplication by a pure x-monomial, with caching
class TraceCache {
 public:
  explicit TraceCache(const ParametricGB& gb) : gb_(gb) {}
  const RatFun& trace(const Exponents& xmono) {
    auto it = cache_.find(xmono);
    if (it != cache_.end()) return it->second;
    RatFun t(gb_.vars());
    for (size_t j = 0; j < gb_.delta(); ++j)
      t = t + gb_.reduce_monomial_coords(exp_add(xmono, gb_.basis()[j]))[j];
    return cache_.emplace(xmono, std::move(t)).first->second;
  }

 private:
  const ParametricGB& gb_;
  std::map<Exponents, RatFun> cache_;
};

// fraction-free determinant; entries consumed
MPoly bareiss_det(std::vector<std::vector<MPoly>> a) {
  const size_t n = a.size();
  const VarSetPtr& vs = a[0][0].varset();
  if (n == 0) return MPoly::constant(vs, Rational(1));
  int sign = 1;
  MPoly prev = MPoly::constant(vs, Rational(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t swap = k;
      for (size_t i = k + 1; i < n && swap == k; ++i)
        if (!a[i][k].is_zero()) swap = i;
      if (swap == k) return MPoly(vs);
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        MPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = num.div_exact(prev);
        if (!q) throw std::logic_error("fraction-free elimination lost exactness");
        a[i][j] = std::move(*q);
      }
    prev = a[k][k];
  }
  return sign == 1 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// clear denominators: D = lcm of all entry denominators, A = entries * D
struct ScaledMatrix {
  std::vector<std::vector<MPoly>> a;
  MPoly d{nullptr};
};

ScaledMatrix scale_entries(const std::vector<std::vector<RatFun>>& e, const VarSetPtr& vs) {
  ScaledMatrix s;
  s.d = MPoly::constant(vs, Rational(1));
  for (const auto& row : e)
    for (const auto& f : row) {
      MPoly g = gcd_mpoly(s.d, f.den());
      s.d = s.d * *f.den().div_exact(g);
    }
  for (const auto& row : e) {
    std::vector<MPoly> out;
    for (const auto& f : row) {
      auto q = s.d.div_exact(f.den());
      if (!q) throw std::logic_error("denominator does not divide the common multiple");
      out.push_back(f.num() * *q);
    }
    s.a.push_back(std::move(out));
  }
  return s;
}

// positive root count (with multiplicity) of a monic polynomial with all
// roots real, by Descartes on the coefficient signs; coeffs ascending
int descartes_positive(const std::vector<int>& coeff_signs) {
  int v = 0, prev = 0;
  for (int s : coeff_signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

std::pair<int, int> counts_from_charpoly_signs(std::vector<int> signs) {
  // signs of c_n ... c_0 ascending (constant term first), leading = 1
  size_t n = signs.size() - 1;
  size_t zeros = 0;
  while (zeros < n && signs[zeros] == 0) ++zeros;
  std::vector<int> pos(signs.begin() + static_cast<long>(zeros), signs.end());
  std::vector<int> neg = pos;
  // p(-x): flip signs of odd-degree coefficients relative to the shifted poly
  for (size_t i = 0; i < neg.size(); ++i)
    if ((neg.size() - 1 - i) % 2 == 1) neg[i] = -neg[i];
  int p = descartes_positive(pos);
  int q = descartes_positive(neg);
  return {p - q, p + q};
}

}  // namespace

std::vector<std::vector<RatFun>> mult_matrix(const MPoly& g, const ParametricGB& gb) {
  const VarSetPtr& vs = gb.vars();
  const size_t t = vs->nparams(), total = vs->size();
  const size_t n = gb.delta();
  std::vector<std::vector<RatFun>> m(n, std::vector<RatFun>(n, RatFun(vs)));
  for (const auto& [e, c] : g.terms()) {
    Exponents xm(total, 0), ym(total, 0);
    for (size_t i = t; i < total; ++i) xm[i] = e[i];
    for (size_t i = 0; i < t; ++i) ym[i] = e[i];
    RatFun cf = RatFun::of(MPoly::monomial(vs, ym, c));
    for (size_t j = 0; j < n; ++j) {
      auto col = gb.reduce_monomial_coords(exp_add(xm, gb.basis()[j]));
      for (size_t i = 0; i < n; ++i) m[i][j] = m[i][j] + cf * col[i];
    }
  }
  return m;
}

HermiteMatrix hermite_matrix(const ParametricSystem& sys) {
  ParametricGB gb = groebner_basis(sys);
  HermiteMatrix H;
  H.vars_ = sys.vars;
  H.basis_ = gb.basis();
  H.gb_winfty_ = gb.winfty();
  H.gb_winfty_factors_ = gb.winfty_factors();
  const size_t n = gb.delta();

  TraceCache traces(gb);
  H.entries_.assign(n, std::vector<RatFun>(n, RatFun(sys.vars)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      RatFun t = traces.trace(exp_add(H.basis_[i], H.basis_[j]));
      H.entries_[i][j] = t;
      H.entries_[j][i] = t;
    }

  // the matrix's own non-specialization locus: squarefree lcm of the entry
  // denominators; generators whose leading coefficient never reaches a
  // denominator do not show up here
  MPoly den = MPoly::constant(sys.vars, Rational(1));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      const MPoly& d = H.entries_[i][j].den();
      if (d.is_constant()) continue;
      den = den * *d.div_exact(gcd_mpoly(den, d));
    }
  H.winfty_ = den.is_constant() ? MPoly::constant(sys.vars, Rational(1))
                                : squarefree_part_mpoly(den);

  if (n == 0) {
    H.wh_raw_ = MPoly::constant(sys.vars, Rational(1));
    H.wh_ = H.wh_raw_;
    H.w_ = H.gb_winfty_.is_constant() ? MPoly::constant(sys.vars, Rational(1))
                                      : squarefree_part_mpoly(H.gb_winfty_);
    return H;
  }

  ScaledMatrix s = scale_entries(H.entries_, sys.vars);
  MPoly det_num = bareiss_det(s.a);
  RatFun det = RatFun(det_num, MPoly::constant(sys.vars, Rational(1)));
  for (size_t k = 0; k < n; ++k) det = det / RatFun::of(s.d);
  if (det.is_zero()) {
    // the generic fiber has a multiple root; rank/signature stay usable
    H.wh_raw_ = MPoly(sys.vars);
    H.wh_ = H.wh_raw_;
    H.w_ = H.wh_raw_;
    return H;
  }
  H.wh_raw_ = det.num().primitive_rat();
  // divide out the largest power of every gb_winfty factor, not just whole
  // powers of the product: the determinant usually carries only some factors
  MPoly wh = H.wh_raw_;
  if (!H.gb_winfty_.is_constant()) {
    while (true) {
      MPoly g = gcd_mpoly(wh, H.gb_winfty_);
      if (g.is_constant()) break;
      wh = std::move(*wh.div_exact(g));
    }
  }
  H.wh_ = wh.primitive_rat();
  MPoly prod = H.gb_winfty_ * H.wh_;
  H.w_ = prod.is_constant() ? MPoly::constant(sys.vars, Rational(1))
                            : squarefree_part_mpoly(prod);
  return H;
}

SymRatMatrix specialize(const HermiteMatrix& H, const std::vector<Rational>& eta) {
  std::vector<Rational> full(H.vars()->size(), Rational(0));
  for (size_t i = 0; i < eta.size() && i < H.vars()->nparams(); ++i) full[i] = eta[i];
  if (sgn(H.gb_winfty().eval(full)) == 0) throw NonSpecializable();
  SymRatMatrix M;
  const size_t n = H.dim();
  M.entries.assign(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational den = H.entry(i, j).den().eval(full);
      if (sgn(den) == 0) throw NonSpecializable();
      M.entries[i][j] = H.entry(i, j).num().eval(full) / den;
    }
  return M;
}

std::pair<int, int> signature_rank(const SymRatMatrix& M) {
  const size_t n = M.dim();
  // fast path: integer Bareiss elimination and Jacobi's sign rule on the
  // leading principal minors; falls through to the characteristic
  // polynomial when a pivot vanishes
  {
    mpz_class d(1);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        d = lcm(d, M.entries[i][j].get_den());
    std::vector<std::vector<mpz_class>> B(n, std::vector<mpz_class>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Rational s = M.entries[i][j] * Rational(d);
        B[i][j] = s.get_num();
      }
    bool ok = true;
    mpz_class prev(1);
    int changes = 0, last = 1;
    for (size_t k = 0; k < n && ok; ++k) {
      int sk = mpz_sgn(B[k][k].get_mpz_t());
      if (sk == 0) {
        ok = false;
        break;
      }
      if (sk != last) ++changes;
      last = sk;
      for (size_t i = k + 1; i < n; ++i)
        for (size_t j = k + 1; j < n; ++j) {
          B[i][j] = B[i][j] * B[k][k] - B[i][k] * B[k][j];
          mpz_divexact(B[i][j].get_mpz_t(), B[i][j].get_mpz_t(), prev.get_mpz_t());
        }
      prev = B[k][k];
    }
    if (ok) return {static_cast<int>(n) - 2 * changes, static_cast<int>(n)};
  }
  // Faddeev-LeVerrier: exact characteristic polynomial coefficients
  std::vector<Rational> c(n + 1);
  c[0] = Rational(1);
  std::vector<std::vector<Rational>> N(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) N[i][i] = Rational(1);
  for (size_t k = 1; k <= n; ++k) {
    // N <- M * N
    std::vector<std::vector<Rational>> P(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l)
        for (size_t j = 0; j < n; ++j) P[i][j] += M.entries[i][l] * N[l][j];
    Rational tr(0);
    for (size_t i = 0; i < n; ++i) tr += P[i][i];
    c[k] = -tr / Rational(static_cast<long>(k));
    for (size_t i = 0; i < n; ++i) P[i][i] += c[k];
    N = std::move(P);
  }
  // ascending signs: constant term first
  std::vector<int> signs;
  for (size_t k = n + 1; k-- > 0;) signs.push_back(sgn(c[k]));
  return counts_from_charpoly_signs(std::move(signs));
}

std::pair<int, int> signature_rank_at(const HermiteMatrix& H, const RealAlgebraicNumber& a) {
  if (H.vars()->nparams() != 1)
    throw std::invalid_argument("algebraic specialization needs exactly one parameter");
  ExtField F(a.defining(), a);
  if (!H.gb_winfty().is_constant() && F.sign(H.gb_winfty().to_upoly(0)) == 0)
    throw NonSpecializable();
  const size_t n = H.dim();
  auto to_up = [&](const MPoly& p) {
    return p.is_constant() ? UPoly::constant(p.constant_value()) : p.to_upoly(0);
  };
  std::vector<std::vector<UPoly>> M(n, std::vector<UPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto inv = F.inverse(to_up(H.entry(i, j).den()));
      if (!inv) throw NonSpecializable();
      M[i][j] = F.reduce(to_up(H.entry(i, j).num()) * *inv);
    }
  std::vector<UPoly> c(n + 1);
  c[0] = UPoly::constant(Rational(1));
  std::vector<std::vector<UPoly>> N(n, std::vector<UPoly>(n));
  for (size_t i = 0; i < n; ++i) N[i][i] = UPoly::constant(Rational(1));
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<UPoly>> P(n, std::vector<UPoly>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l)
        for (size_t j = 0; j < n; ++j) P[i][j] = F.reduce(P[i][j] + M[i][l] * N[l][j]);
    UPoly tr;
    for (size_t i = 0; i < n; ++i) tr = tr + P[i][i];
    c[k] = F.reduce(tr * UPoly::constant(Rational(-1) / Rational(static_cast<long>(k))));
    for (size_t i = 0; i < n; ++i) P[i][i] = P[i][i] + c[k];
    N = std::move(P);
  }
  std::vector<int> signs;
  for (size_t k = n + 1; k-- > 0;) signs.push_back(F.sign(c[k]));
  return counts_from_charpoly_signs(std::move(signs));
}

std::vector<int> minor_sign_sequence(const HermiteMatrix& H, const RealAlgebraicNumber& a) {
  if (H.vars()->nparams() != 1)
    throw std::invalid_argument("minor signs need exactly one parameter");
  auto to_up = [&](const MPoly& p) {
    return p.is_constant() ? UPoly::constant(p.constant_value()) : p.to_upoly(0);
  };
  if (!H.gb_winfty().is_constant() && sign_at(to_up(H.gb_winfty()), a) == 0)
    throw NonSpecializable();
  ScaledMatrix s = scale_entries(
      [&] {
        std::vector<std::vector<RatFun>> e;
        for (size_t i = 0; i < H.dim(); ++i) {
          e.emplace_back();
          for (size_t j = 0; j < H.dim(); ++j) e.back().push_back(H.entry(i, j));
        }
        return e;
      }(),
      H.vars());
  int dsign = sign_at(to_up(s.d), a);
  if (dsign == 0) throw NonSpecializable();
  std::vector<int> out;
  for (size_t k = 1; k <= H.dim(); ++k) {
    std::vector<std::vector<MPoly>> block;
    for (size_t i = 0; i < k; ++i)
      block.emplace_back(s.a[i].begin(), s.a[i].begin() + static_cast<long>(k));
    MPoly det = bareiss_det(std::move(block));
    int sg = det.is_zero() ? 0 : sign_at(to_up(det), a);
    // minor of the entry matrix = det(block) / d^k
    if (dsign < 0 && k % 2 == 1) sg = -sg;
    out.push_back(sg);
  }
  return out;
}

MinorCounts counts_from_minor_signs(const std::vector<int>& signs) {
  MinorCounts out;
  size_t r = signs.size();
  while (r > 0 && signs[r - 1] == 0) --r;
  out.rank = static_cast<int>(r);
  for (size_t i = 0; i < r; ++i)
    if (signs[i] == 0) return out;  // interior zero: undetermined
  int v = 0, prev = 1;
  for (size_t i = 0; i < r; ++i) {
    if (signs[i] != prev) ++v;
    prev = signs[i];
  }
  int real = out.rank - 2 * v;
  if (real < 0) return out;
  out.real = real;
  return out;
}

}  // namespace trsect
