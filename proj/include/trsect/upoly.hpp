#ifndef TRSECT_UPOLY_HPP
#define TRSECT_UPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trsect/rational.hpp"

namespace trsect {

struct ZeroPolynomial : std::runtime_error {
  ZeroPolynomial() : std::runtime_error("operation undefined for the zero polynomial") {}
};

// Dense univariate polynomial over Q, coefficients ascending by degree.
// The zero polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rational& a);
  static UPoly x();  // the monomial y
  // c0 + c1 y + ... from an initializer of longs, for tests and small data
  static UPoly from_ints(const std::vector<long>& coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  const Rational& coeff(size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rational& a) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  UPoly shifted_up(unsigned k) const;  // multiply by y^k
  UPoly derivative() const;
  UPoly monic() const;
  Rational eval(const Rational& a) const;
  // image under y -> a + b*y
  UPoly compose_affine(const Rational& a, const Rational& b) const;
  UPoly reversed() const;  // y^deg * p(1/y)

  // Euclidean division; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  // Quotient when the division is known exact; nullopt on nonzero remainder.
  std::optional<UPoly> div_exact(const UPoly& d) const;

  std::string str(const std::string& var = "y") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
UPoly gcd_upoly(const UPoly& p, const UPoly& q);

// gcd of integer-coefficient polynomials given as ascending coefficient
// vectors (nonzero, trimmed). Modular images + CRT with a trial-division
// certificate; the result is primitive with positive leading coefficient.
std::vector<mpz_class> gcd_int_coeffs(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b);

// Monic p / gcd(p, p'); same real roots, all simple. Throws ZeroPolynomial.
UPoly squarefree_part(const UPoly& p);

// Sturm sequence of p (no squarefree preprocessing).
std::vector<UPoly> sturm_sequence(const UPoly& p);

// Sign variations of the sequence evaluated at a; zero values skipped.
int sturm_variations_at(const std::vector<UPoly>& seq, const Rational& a);
// Variations at -oo / +oo via leading-coefficient parity.
int sturm_variations_at_neg_inf(const std::vector<UPoly>& seq);
int sturm_variations_at_pos_inf(const std::vector<UPoly>& seq);

// Number of distinct real roots of p in (a, b], over the whole line, etc.
// p need not be squarefree; counting is done on its squarefree part.
int count_real_roots(const UPoly& p);
int count_real_roots_in(const UPoly& p, const Rational& a, const Rational& b);

// Cauchy bound: all real roots lie in (-B, B).
Rational root_bound(const UPoly& p);

// Descartes bound on the number of roots of p in the open interval (a, b).
// Exact when the returned value is 0 or 1.
int descartes_interval_bound(const UPoly& p, const Rational& a, const Rational& b);

}  // namespace trsect

#endif
