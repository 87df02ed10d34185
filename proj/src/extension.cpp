#include "trsect/extension.hpp"

namespace trsect {

namespace {

// extended Euclid: returns (g, s) with s*a + t*b = g for some t
std::pair<UPoly, UPoly> half_xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(Rational(1)), s1;
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  return {r0, s0};
}

}  // namespace

ExtField::ExtField(const UPoly& modulus, RealAlgebraicNumber alpha)
    : m_(squarefree_part(modulus).monic()), alpha_(std::move(alpha)) {
  if (m_.degree() < 1) throw std::invalid_argument("modulus must be nonconstant");
}

UPoly ExtField::reduce(const UPoly& p) const { return p.divmod(m_).second; }

bool ExtField::is_zero(const UPoly& p) {
  UPoly r = reduce(p);
  if (r.is_zero()) return true;
  if (m_.degree() == 1) {
    // alpha is rational: m = y - a
    Rational a = -m_.coeff(0);
    return sgn(r.eval(a)) == 0;
  }
  UPoly g = gcd_upoly(r, m_);
  if (g.degree() == 0) return false;
  // alpha sits on exactly one side of the split m = g * (m/g)
  bool alpha_in_g;
  if (alpha_.is_rational()) {
    alpha_in_g = sgn(g.eval(alpha_.rational_value())) == 0;
  } else {
    alpha_in_g = count_real_roots_in(g, alpha_.lo(), alpha_.hi()) >= 1;
  }
  if (alpha_in_g) {
    m_ = g;
  } else {
    auto q = m_.div_exact(g);
    if (!q) throw std::logic_error("gcd does not divide the modulus");
    m_ = q->monic();
  }
  alpha_ = RealAlgebraicNumber(m_, alpha_.lo(), alpha_.hi());
  return alpha_in_g;
}

std::optional<UPoly> ExtField::inverse(const UPoly& p) {
  if (is_zero(p)) return std::nullopt;
  UPoly r = reduce(p);
  auto [g, s] = half_xgcd(r, m_);
  if (g.degree() != 0)
    throw std::logic_error("residual common factor after zero test");
  return reduce(s * UPoly::constant(Rational(1) / g.coeff(0)));
}

int ExtField::sign(const UPoly& p) {
  if (is_zero(p)) return 0;
  UPoly r = reduce(p);
  while (!alpha_.is_rational()) {
    if (sgn(r.eval(alpha_.lo())) != 0 &&
        count_real_roots_in(r, alpha_.lo(), alpha_.hi()) == 0)
      return sgn(r.eval(alpha_.lo()));
    alpha_ = alpha_.refined();
  }
  return sgn(r.eval(alpha_.rational_value()));
}

int ext_degree(ExtField& F, ExtPoly& p) {
  while (!p.empty() && F.is_zero(p.back())) p.pop_back();
  for (auto& c : p) c = F.reduce(c);
  return static_cast<int>(p.size()) - 1;
}

ExtPoly ext_mul(const ExtField& F, const ExtPoly& a, const ExtPoly& b) {
  if (a.empty() || b.empty()) return {};
  ExtPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  for (auto& c : out) c = F.reduce(c);
  return out;
}

ExtPoly ext_sub(const ExtField& F, const ExtPoly& a, const ExtPoly& b) {
  ExtPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = out[i] + a[i];
    if (i < b.size()) out[i] = out[i] - b[i];
  }
  for (auto& c : out) c = F.reduce(c);
  return out;
}

ExtPoly ext_derivative(const ExtPoly& p) {
  ExtPoly out;
  for (size_t i = 1; i < p.size(); ++i)
    out.push_back(p[i] * UPoly::constant(Rational(static_cast<long>(i))));
  return out;
}

ExtPoly ext_monic(ExtField& F, const ExtPoly& p) {
  ExtPoly q = p;
  int d = ext_degree(F, q);
  if (d < 0) return q;
  auto inv = F.inverse(q.back());
  if (!inv) throw std::logic_error("leading coefficient vanished after trim");
  for (auto& c : q) c = F.reduce(c * *inv);
  return q;
}

std::pair<ExtPoly, ExtPoly> ext_divmod(ExtField& F, const ExtPoly& a, const ExtPoly& b) {
  ExtPoly r = a, d = b;
  int dd = ext_degree(F, d);
  if (dd < 0) throw std::invalid_argument("ext division by zero");
  auto inv = F.inverse(d.back());
  if (!inv) throw std::logic_error("divisor lost its leading coefficient");
  int dr = ext_degree(F, r);
  ExtPoly q(dr >= dd ? static_cast<size_t>(dr - dd + 1) : 0);
  while (dr >= dd) {
    UPoly c = F.reduce(r.back() * *inv);
    q[static_cast<size_t>(dr - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      size_t k = static_cast<size_t>(dr - dd + j);
      r[k] = F.reduce(r[k] - c * d[static_cast<size_t>(j)]);
    }
    r.pop_back();
    dr = ext_degree(F, r);
  }
  return {q, r};
}

ExtPoly ext_gcd(ExtField& F, const ExtPoly& a, const ExtPoly& b) {
  ExtPoly x = a, y = b;
  while (ext_degree(F, y) >= 0) {
    ExtPoly r = ext_divmod(F, x, y).second;
    x = y;
    y = r;
  }
  if (ext_degree(F, x) < 0) return x;
  return ext_monic(F, x);
}

ExtPoly ext_squarefree(ExtField& F, const ExtPoly& p) {
  ExtPoly q = p;
  int d = ext_degree(F, q);
  if (d <= 0) return q;
  ExtPoly g = ext_gcd(F, q, ext_derivative(q));
  if (ext_degree(F, g) <= 0) return ext_monic(F, q);
  ExtPoly sf = ext_divmod(F, q, g).first;
  return ext_monic(F, sf);
}

int ext_count_real_roots(ExtField& F, const ExtPoly& p) {
  ExtPoly sf = ext_squarefree(F, p);
  int d = ext_degree(F, sf);
  if (d <= 0) return 0;
  std::vector<ExtPoly> seq{sf, ext_derivative(sf)};
  while (ext_degree(F, seq.back()) > 0) {
    ExtPoly r = ext_divmod(F, seq[seq.size() - 2], seq.back()).second;
    for (auto& c : r) c = -c;
    if (ext_degree(F, r) < 0) break;
    seq.push_back(r);
  }
  auto variations = [&](bool at_neg_inf) {
    int v = 0, prev = 0;
    for (auto& s : seq) {
      ExtPoly t = s;
      int sd = ext_degree(F, t);
      if (sd < 0) continue;
      int sg = F.sign(t.back());
      if (at_neg_inf && sd % 2 == 1) sg = -sg;
      if (prev != 0 && sg != 0 && sg != prev) ++v;
      if (sg != 0) prev = sg;
    }
    return v;
  };
  return variations(true) - variations(false);
}

}  // namespace trsect
