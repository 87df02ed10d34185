#ifndef TRSECT_MPOLY_HPP
#define TRSECT_MPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trsect/upoly.hpp"

namespace trsect {

struct VarSetMismatch : std::runtime_error {
  VarSetMismatch() : std::runtime_error("operands live in different variable sets") {}
};

struct DegenerateInput : std::runtime_error {
  explicit DegenerateInput(const std::string& m) : std::runtime_error(m) {}
};

// Ordered variable names, partitioned into parameters y (first nparams names)
// and variables x (the rest). The partition is fixed per problem.
class VarSet {
 public:
  VarSet(std::vector<std::string> names, size_t nparams);
  static std::shared_ptr<const VarSet> make(std::vector<std::string> names, size_t nparams);

  size_t size() const { return names_.size(); }
  size_t nparams() const { return nparams_; }
  size_t nvars() const { return names_.size() - nparams_; }
  const std::string& name(size_t i) const { return names_[i]; }
  bool is_param(size_t i) const { return i < nparams_; }
  std::optional<size_t> index(const std::string& name) const;
  bool operator==(const VarSet& o) const {
    return names_ == o.names_ && nparams_ == o.nparams_;
  }

 private:
  std::vector<std::string> names_;
  size_t nparams_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;
using Exponents = std::vector<unsigned>;

enum class OrderKind {
  Grevlex,      // grevlex on all variables, first name largest
  BlockXoverY,  // grevlex on x dominating grevlex on y
  Lex,
};

struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  // true iff a < b
  bool less(const Exponents& a, const Exponents& b, const VarSet& vs) const;
};

// Sparse multivariate polynomial over Q. Canonical form: no zero
// coefficients stored; exponent keys unique (std::map keeps them sorted in a
// fixed order-independent way).
class MPoly {
 public:
  explicit MPoly(VarSetPtr vs) : vs_(std::move(vs)) {}
  static MPoly constant(VarSetPtr vs, const Rational& a);
  static MPoly variable(VarSetPtr vs, size_t idx);
  static MPoly monomial(VarSetPtr vs, const Exponents& e, const Rational& a);

  const VarSetPtr& varset() const { return vs_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // valid when is_constant()
  size_t nterms() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  int total_degree() const;
  int degree_in(size_t var) const;
  bool depends_on(size_t var) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rational& a) const;
  bool operator==(const MPoly& o) const;
  MPoly pow(unsigned e) const;

  void add_term(const Exponents& e, const Rational& a);

  // leading exponent vector with respect to an order; poly must be nonzero
  Exponents leading_exponents(const MonomialOrder& ord) const;
  const Rational& coeff(const Exponents& e) const;

  // coefficients as a univariate polynomial in `var`, ascending
  std::vector<MPoly> coeffs_in(size_t var) const;
  static MPoly from_coeffs_in(VarSetPtr vs, size_t var, const std::vector<MPoly>& cs);
  MPoly leading_coeff_in(size_t var) const;

  MPoly derivative(size_t var) const;
  MPoly substitute(size_t var, const MPoly& value) const;
  MPoly substitute(size_t var, const Rational& value) const;
  // evaluate at rational values for every variable
  Rational eval(const std::vector<Rational>& point) const;
  // evaluate the first nparams coordinates only (parameters)
  MPoly eval_params(const std::vector<Rational>& eta) const;

  // exact quotient, or nullopt when the division leaves a remainder
  std::optional<MPoly> div_exact(const MPoly& d) const;

  // positive rational c such that p/c has integer coprime coefficients
  Rational content_rat() const;
  MPoly primitive_rat() const;  // p / (sign(lc) * content)

  // translate to another varset with the same names (possibly reordered or
  // extended); missing names in `to` must not occur in the support
  MPoly transplant(const VarSetPtr& to) const;
  UPoly to_upoly(size_t var) const;  // must depend on `var` only
  static MPoly from_upoly(VarSetPtr vs, size_t var, const UPoly& p);

  std::string str() const;

 private:
  void check_same(const MPoly& o) const;
  VarSetPtr vs_;
  std::map<Exponents, Rational> terms_;
};

// Resultant of p, q with respect to variable v, equal to the determinant of
// the Sylvester matrix of p and q in v. Requires positive degree in v on
// both sides (DegenerateInput otherwise).
MPoly resultant(const MPoly& p, const MPoly& q, size_t v);

// res_v(p, dp/dv) / lc_v(p); requires deg_v(p) >= 2.
MPoly discriminant(const MPoly& p, size_t v);

// gcd over Q[all vars], normalized to have primitive integer coefficients
// and positive leading sign (grevlex). gcd(p, 0) = normalized p.
MPoly gcd_mpoly(const MPoly& p, const MPoly& q);

// product of the distinct irreducible factors (up to normalization)
MPoly squarefree_part_mpoly(const MPoly& p);

// content of p seen in Q[others][var]: gcd of the coefficients of powers of var
MPoly content_in(const MPoly& p, size_t var);

// Parser / printer for the shared textual syntax ("41*y^8 + 43*y^7 - y",
// implicit multiplication allowed, '/' divides by a constant).
MPoly parse_mpoly(const std::string& text, const VarSetPtr& vs);

}  // namespace trsect

#endif
