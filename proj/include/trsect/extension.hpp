#ifndef TRSECT_EXTENSION_HPP
#define TRSECT_EXTENSION_HPP

#include "trsect/real_algebraic.hpp"

namespace trsect {

// Arithmetic in Q[y]/(m) for a squarefree modulus m with a distinguished
// real root alpha. Elements are represented by their reduced UPoly reps.
// When an operation meets a zero divisor the modulus is replaced by the
// factor that still has alpha as a root; previously computed reps remain
// valid modulo the smaller modulus.
class ExtField {
 public:
  ExtField(const UPoly& modulus, RealAlgebraicNumber alpha);

  const UPoly& modulus() const { return m_; }
  const RealAlgebraicNumber& alpha() const { return alpha_; }

  UPoly reduce(const UPoly& p) const;
  // whether p(alpha) = 0; may shrink the modulus
  bool is_zero(const UPoly& p);
  // nullopt exactly when is_zero(p); may shrink the modulus
  std::optional<UPoly> inverse(const UPoly& p);
  // sign of p(alpha)
  int sign(const UPoly& p);

 private:
  UPoly m_;
  RealAlgebraicNumber alpha_;
};

// Dense polynomial in one variable over an ExtField, coefficients ascending.
using ExtPoly = std::vector<UPoly>;

// trims zero leading coefficients in place; -1 for the zero polynomial
int ext_degree(ExtField& F, ExtPoly& p);
ExtPoly ext_mul(const ExtField& F, const ExtPoly& a, const ExtPoly& b);
ExtPoly ext_sub(const ExtField& F, const ExtPoly& a, const ExtPoly& b);
ExtPoly ext_derivative(const ExtPoly& p);
ExtPoly ext_monic(ExtField& F, const ExtPoly& p);
// divisor must be nonzero with invertible leading coefficient (trim first)
std::pair<ExtPoly, ExtPoly> ext_divmod(ExtField& F, const ExtPoly& a, const ExtPoly& b);
// monic gcd; ext_gcd(p, 0) = monic p
ExtPoly ext_gcd(ExtField& F, const ExtPoly& a, const ExtPoly& b);
// p / gcd(p, p'), monic: same roots over the algebraic closure, all simple
ExtPoly ext_squarefree(ExtField& F, const ExtPoly& p);
// number of distinct real roots of x -> p(alpha, x), via Sturm over Q(alpha)
int ext_count_real_roots(ExtField& F, const ExtPoly& p);

}  // namespace trsect

#endif
