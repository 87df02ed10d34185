#ifndef TRSECT_RATIONAL_HPP
#define TRSECT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trsect {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den >= 1
// after canonicalize(), which every constructor below guarantees.
using Rational = mpq_class;

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Parses an integer, fraction ("41/8") or decimal literal ("0.311") into an
// exact rational. Decimals are read as printed: digits over a power of ten.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational num(parse_rational(s.substr(0, slash)));
    Rational den(parse_rational(s.substr(slash + 1)));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad numeric literal: " + s);
    mpz_class num(digits, 10);
    mpz_class den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  try {
    Rational q(s, 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad numeric literal: " + s);
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational pow_rat(const Rational& base, unsigned e) {
  Rational r(1);
  Rational b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

}  // namespace trsect

#endif
