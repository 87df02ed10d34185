#include "trsect/ratfun.hpp"

namespace trsect {

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  reduce();
}

RatFun RatFun::of(MPoly p) {
  RatFun r(p.varset());
  r.num_ = std::move(p);
  return r;
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.varset(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    MPoly g = gcd_mpoly(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.div_exact(g);
      den_ = *den_.div_exact(g);
    }
  }
  // denominator primitive, positive leading sign; content goes to numerator
  MPoly prim = den_.primitive_rat();
  MPoly scale = *den_.div_exact(prim);  // a constant
  num_ = num_ * (Rational(1) / scale.constant_value());
  den_ = prim;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

Rational RatFun::eval(const std::vector<Rational>& eta) const {
  std::vector<Rational> point(num_.varset()->size(), Rational(0));
  for (size_t i = 0; i < eta.size(); ++i) point[i] = eta[i];
  Rational d = den_.eval(point);
  if (sgn(d) == 0) throw std::domain_error("rational function denominator vanishes");
  return num_.eval(point) / d;
}

std::string RatFun::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace trsect
