#ifndef TRSECT_GROEBNER_HPP
#define TRSECT_GROEBNER_HPP

#include <iosfwd>

#include "trsect/ratfun.hpp"

namespace trsect {

struct NotZeroDimensional : std::runtime_error {
  NotZeroDimensional()
      : std::runtime_error("ideal is not zero-dimensional over the parameter field") {}
};

struct ParametricSystem {
  VarSetPtr vars;
  std::vector<MPoly> equations;
};

// Input format: `params: y1 y2`, `vars: x1 x2`, then one polynomial per line.
// '#' starts a comment; the params line may be omitted for t = 0 systems.
ParametricSystem parse_system(std::istream& in);
ParametricSystem parse_system_text(const std::string& text);

// Polynomial in the x-block with rational-function-in-y coefficients,
// keyed by full-length exponent vectors whose parameter part is zero.
using ParamXPoly = std::map<Exponents, RatFun>;

class ParametricGB {
 public:
  // Reduced Groebner basis for grevlex(x) >> grevlex(y).
  const std::vector<MPoly>& generators() const { return gens_; }
  const VarSetPtr& vars() const { return vars_; }
  // Quotient basis: x-monomials under the staircase, ascending in grevlex(x).
  const std::vector<Exponents>& basis() const { return basis_; }
  size_t delta() const { return basis_.size(); }
  // x-leading monomial and its Q[y]-coefficient, per generator.
  const std::vector<Exponents>& xleads() const { return xleads_; }
  const std::vector<MPoly>& xlead_coeffs() const { return xlead_coeffs_; }
  // Squarefree non-specialization polynomial (in parameters only; 1 if none).
  const MPoly& winfty() const { return winfty_; }
  // Best-effort multiplicative split of winfty (content extraction only).
  const std::vector<MPoly>& winfty_factors() const { return winfty_factors_; }

  // Remainder of division by the basis; support lies in the staircase.
  ParamXPoly normal_form(const MPoly& p) const;
  // Coordinates of normal_form(monomial m * basis[j]) in the quotient basis.
  std::vector<RatFun> reduce_monomial_coords(const Exponents& xmono) const;

  friend ParametricGB groebner_basis(const ParametricSystem& sys);

 private:
  VarSetPtr vars_;
  std::vector<MPoly> gens_;
  std::vector<Exponents> xleads_;
  std::vector<MPoly> xlead_coeffs_;
  std::vector<Exponents> basis_;
  MPoly winfty_{nullptr};
  std::vector<MPoly> winfty_factors_;
  mutable std::map<Exponents, ParamXPoly> nf_cache_;
  // generators grouped by x-monomial with Q[y] coefficients, built lazily
  mutable std::vector<std::vector<std::pair<Exponents, MPoly>>> grouped_;
};

// Buchberger with the normal selection strategy and the coprime/chain
// criteria; throws NotZeroDimensional when the staircase is infinite.
ParametricGB groebner_basis(const ParametricSystem& sys);

enum class RadicalAudit { Ok, Suspect };

// Randomized precondition audit: specializes at random parameter points away
// from winfty = 0 and inspects eliminants for repeated factors.
RadicalAudit check_radical_generic(const ParametricGB& gb, int trials = 5, unsigned seed = 42);

// factor classification used by the winfty stratum handling
bool is_linear_in_some_param(const MPoly& f, size_t* which = nullptr);
std::optional<size_t> sole_variable(const MPoly& f);

}  // namespace trsect

#endif
