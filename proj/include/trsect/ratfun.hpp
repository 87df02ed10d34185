#ifndef TRSECT_RATFUN_HPP
#define TRSECT_RATFUN_HPP

#include "trsect/mpoly.hpp"

namespace trsect {

// Rational function in the parameter block: numerator and denominator are
// polynomials in the parameters only (carried in the full problem VarSet).
// Kept reduced (gcd cancelled, denominator primitive with positive leading
// sign; rational content lives in the numerator).
class RatFun {
 public:
  explicit RatFun(VarSetPtr vs)
      : num_(MPoly(vs)), den_(MPoly::constant(vs, Rational(1))) {}
  RatFun(MPoly num, MPoly den);
  static RatFun of(MPoly p);
  static RatFun constant(VarSetPtr vs, const Rational& a) {
    return of(MPoly::constant(std::move(vs), a));
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  // exact value at a parameter point; denominator must not vanish there
  Rational eval(const std::vector<Rational>& eta) const;

  std::string str() const;

 private:
  void reduce();
  MPoly num_, den_;
};

}  // namespace trsect

#endif
