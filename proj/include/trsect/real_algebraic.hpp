#ifndef TRSECT_REAL_ALGEBRAIC_HPP
#define TRSECT_REAL_ALGEBRAIC_HPP

#include <string>
#include <vector>

#include "trsect/upoly.hpp"

namespace trsect {

// A real algebraic number: a squarefree defining polynomial together with an
// isolating interval [lo, hi] containing exactly one of its real roots.
// lo == hi encodes a rational point (then defining(lo) = 0).
class RealAlgebraicNumber {
 public:
  static RealAlgebraicNumber from_rational(const Rational& r);
  // Caller guarantees: defining squarefree, exactly one root in [lo, hi],
  // and defining(lo), defining(hi) != 0 when lo < hi.
  RealAlgebraicNumber(UPoly defining, Rational lo, Rational hi);

  const UPoly& defining() const { return def_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_rational() const { return lo_ == hi_; }
  // Valid only when is_rational().
  const Rational& rational_value() const { return lo_; }

  // Halve the isolating interval (or collapse to a rational point).
  RealAlgebraicNumber refined() const;
  // Refine until hi - lo <= width (no-op for rational points).
  RealAlgebraicNumber refined_below(const Rational& width) const;

  double approx() const;
  std::string str() const;

 private:
  UPoly def_;
  Rational lo_, hi_;
};

// Distinct real roots of p, ascending, with pairwise disjoint isolating
// intervals. Throws ZeroPolynomial on p = 0.
std::vector<RealAlgebraicNumber> isolate_real_roots(const UPoly& p);

// Exact sign of p at a. Zero is certified through gcd(p, a.defining).
int sign_at(const UPoly& p, const RealAlgebraicNumber& a);

// -1 / 0 / +1 comparison of a with a rational point.
int compare(const RealAlgebraicNumber& a, const Rational& r);
int compare(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);

}  // namespace trsect

#endif
