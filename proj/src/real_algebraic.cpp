#include "trsect/real_algebraic.hpp"

#include <sstream>

namespace trsect {

RealAlgebraicNumber RealAlgebraicNumber::from_rational(const Rational& r) {
  UPoly def(std::vector<Rational>{-r, Rational(1)});
  return RealAlgebraicNumber(std::move(def), r, r);
}

RealAlgebraicNumber::RealAlgebraicNumber(UPoly defining, Rational lo, Rational hi)
    : def_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("isolating interval reversed");
}

RealAlgebraicNumber RealAlgebraicNumber::refined() const {
  if (is_rational()) return *this;
  Rational mid = (lo_ + hi_) / 2;
  Rational fm = def_.eval(mid);
  if (sgn(fm) == 0) return RealAlgebraicNumber(def_, mid, mid);
  if (sgn(def_.eval(lo_)) != sgn(fm)) return RealAlgebraicNumber(def_, lo_, mid);
  return RealAlgebraicNumber(def_, mid, hi_);
}

RealAlgebraicNumber RealAlgebraicNumber::refined_below(const Rational& width) const {
  RealAlgebraicNumber a = *this;
  while (!a.is_rational() && a.hi() - a.lo() > width) a = a.refined();
  return a;
}

double RealAlgebraicNumber::approx() const {
  RealAlgebraicNumber a = refined_below(rat(1, 1000000));
  Rational mid = (a.lo() + a.hi()) / 2;
  return mid.get_d();
}

std::string RealAlgebraicNumber::str() const {
  std::ostringstream os;
  if (is_rational()) {
    os << lo_.get_str();
  } else {
    os << "root of " << def_.str() << " in [" << lo_.get_str() << ", " << hi_.get_str() << "]";
  }
  return os.str();
}

namespace {

// Roots of p strictly inside (a, b); p squarefree, p(a) != 0 != p(b).
void isolate_rec(const UPoly& p, const Rational& a, const Rational& b,
                 std::vector<RealAlgebraicNumber>& out) {
  int bound = descartes_interval_bound(p, a, b);
  if (bound == 0) return;
  if (bound == 1) {
    out.emplace_back(p, a, b);
    return;
  }
  Rational mid = (a + b) / 2;
  if (sgn(p.eval(mid)) != 0) {
    isolate_rec(p, a, mid, out);
    isolate_rec(p, mid, b, out);
    return;
  }
  // midpoint is a root: fence it off before recursing on the two sides
  Rational h = (b - a) / 4;
  while (sgn(p.eval(mid - h)) == 0 || sgn(p.eval(mid + h)) == 0 ||
         descartes_interval_bound(p, mid - h, mid + h) != 1) {
    h /= 2;
  }
  isolate_rec(p, a, mid - h, out);
  out.push_back(RealAlgebraicNumber(p, mid, mid));
  isolate_rec(p, mid + h, b, out);
}

}  // namespace

std::vector<RealAlgebraicNumber> isolate_real_roots(const UPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::vector<RealAlgebraicNumber> out;
  if (p.degree() == 0) return out;
  UPoly sf = squarefree_part(p);
  Rational b = root_bound(sf);
  isolate_rec(sf, -b, b, out);
  // Sturm certification of the count
  auto seq = sturm_sequence(sf);
  int expected = sturm_variations_at_neg_inf(seq) - sturm_variations_at_pos_inf(seq);
  if (static_cast<int>(out.size()) != expected)
    throw std::logic_error("root isolation disagrees with Sturm count");
  return out;
}

// interval Horner: image of [lo, hi] under p, exact rational endpoints
static std::pair<Rational, Rational> interval_eval(const UPoly& p, const Rational& lo,
                                                   const Rational& hi) {
  Rational m(0), M(0);
  for (int i = p.degree(); i >= 0; --i) {
    Rational a = m * lo, b = m * hi, c = M * lo, d = M * hi;
    m = std::min(std::min(a, b), std::min(c, d));
    M = std::max(std::max(a, b), std::max(c, d));
    m += p.coeff(static_cast<size_t>(i));
    M += p.coeff(static_cast<size_t>(i));
  }
  return {m, M};
}

int sign_at(const UPoly& p, const RealAlgebraicNumber& a) {
  if (p.is_zero()) return 0;
  if (a.is_rational()) return sgn(p.eval(a.rational_value()));
  // nonzero signs almost always certify by interval arithmetic alone
  {
    RealAlgebraicNumber b = a;
    for (int iter = 0; iter < 8; ++iter) {
      auto [lo, hi] = interval_eval(p, b.lo(), b.hi());
      if (sgn(lo) > 0) return 1;
      if (sgn(hi) < 0) return -1;
      b = b.refined();
      if (b.is_rational()) return sgn(p.eval(b.rational_value()));
    }
  }
  UPoly g = gcd_upoly(p, a.defining());
  if (g.degree() >= 1 && count_real_roots_in(g, a.lo(), a.hi()) >= 1) return 0;
  RealAlgebraicNumber b = a;
  while (true) {
    if (sgn(p.eval(b.lo())) != 0 && count_real_roots_in(p, b.lo(), b.hi()) == 0)
      return sgn(p.eval(b.lo()));
    b = b.refined();
    if (b.is_rational()) return sgn(p.eval(b.rational_value()));
  }
}

int compare(const RealAlgebraicNumber& a, const Rational& r) {
  UPoly diff(std::vector<Rational>{-r, Rational(1)});
  return sign_at(diff, a);
}

int compare(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
  if (b.is_rational()) return compare(a, b.rational_value());
  if (a.is_rational()) return -compare(b, a.rational_value());
  RealAlgebraicNumber x = a, y = b;
  // equality test via a shared root in the interval overlap
  Rational lo = std::max(x.lo(), y.lo());
  Rational hi = std::min(x.hi(), y.hi());
  if (lo <= hi) {
    UPoly g = gcd_upoly(x.defining(), y.defining());
    if (g.degree() >= 1 && sgn(g.eval(lo)) != 0 && count_real_roots_in(g, lo, hi) >= 1)
      return 0;
    if (g.degree() >= 1 && sgn(g.eval(lo)) == 0) return 0;  // lo is the shared root
  }
  while (!(x.hi() < y.lo() || y.hi() < x.lo())) {
    x = x.refined();
    y = y.refined();
    if (x.is_rational()) return -compare(y, x.rational_value());
    if (y.is_rational()) return compare(x, y.rational_value());
  }
  return x.hi() < y.lo() ? -1 : 1;
}

}  // namespace trsect
