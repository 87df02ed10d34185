#ifndef TRSECT_HERMITE_HPP
#define TRSECT_HERMITE_HPP

#include "trsect/extension.hpp"
#include "trsect/groebner.hpp"

namespace trsect {

struct NonSpecializable : std::runtime_error {
  NonSpecializable() : std::runtime_error("parameter point lies on the non-specialization locus") {}
};

struct SymRatMatrix {
  std::vector<std::vector<Rational>> entries;  // symmetric
  size_t dim() const { return entries.size(); }
};

// Parametric Hermite matrix: entries[i][j] is the trace of multiplication by
// basis[i]*basis[j] on the generic quotient, a rational function in the
// parameters.
class HermiteMatrix {
 public:
  const VarSetPtr& vars() const { return vars_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Exponents>& basis() const { return basis_; }
  const RatFun& entry(size_t i, size_t j) const { return entries_[i][j]; }
  // non-specialization locus of the matrix itself: squarefree lcm of the
  // entry denominators (a divisor of gb_winfty)
  const MPoly& winfty() const { return winfty_; }
  // full non-specialization locus of the underlying Groebner basis; every
  // guarantee about specialized counts needs this one, not winfty()
  const MPoly& gb_winfty() const { return gb_winfty_; }
  const std::vector<MPoly>& gb_winfty_factors() const { return gb_winfty_factors_; }
  // numerator of det(entries): raw (content-normalized only) and with the
  // largest power of every gb_winfty factor removed
  const MPoly& wh_raw() const { return wh_raw_; }
  const MPoly& wh() const { return wh_; }
  // squarefree part of gb_winfty * wh
  const MPoly& w() const { return w_; }

  friend HermiteMatrix hermite_matrix(const ParametricSystem& sys);

 private:
  VarSetPtr vars_;
  std::vector<Exponents> basis_;
  std::vector<std::vector<RatFun>> entries_;
  MPoly winfty_{nullptr};
  MPoly gb_winfty_{nullptr};
  std::vector<MPoly> gb_winfty_factors_;
  MPoly wh_raw_{nullptr};
  MPoly wh_{nullptr};
  MPoly w_{nullptr};
};

// matrix of multiplication by g on the quotient basis: column j holds the
// coordinates of normal_form(g * basis[j])
std::vector<std::vector<RatFun>> mult_matrix(const MPoly& g, const ParametricGB& gb);

HermiteMatrix hermite_matrix(const ParametricSystem& sys);

// exact entrywise evaluation; NonSpecializable when winfty vanishes
SymRatMatrix specialize(const HermiteMatrix& H, const std::vector<Rational>& eta);

// signature and rank from the exact characteristic polynomial
std::pair<int, int> signature_rank(const SymRatMatrix& M);

// signature and rank of H specialized at an algebraic value of the single
// parameter (t = 1); exact arithmetic over Q(a)
std::pair<int, int> signature_rank_at(const HermiteMatrix& H, const RealAlgebraicNumber& a);

// signs of the leading principal minors at an algebraic parameter value (t = 1)
std::vector<int> minor_sign_sequence(const HermiteMatrix& H, const RealAlgebraicNumber& a);

// counts derived from a minor sign sequence; `real` is empty when the
// sequence is degenerate (interior zero) or the permanence/variation rule
// violates the conjugation constraints, in which case the caller must fall
// back to signature_rank_at
struct MinorCounts {
  std::optional<int> real;
  int rank = 0;
};
MinorCounts counts_from_minor_signs(const std::vector<int>& signs);

}  // namespace trsect

#endif
