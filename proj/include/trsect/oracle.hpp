#ifndef TRSECT_ORACLE_HPP
#define TRSECT_ORACLE_HPP

#include "trsect/mpoly.hpp"
#include "trsect/real_algebraic.hpp"

namespace trsect {

struct SeparationFailure : std::runtime_error {
  SeparationFailure() : std::runtime_error("no separating linear form found within the retry budget") {}
};

struct OracleNotZeroDimensional : std::runtime_error {
  OracleNotZeroDimensional() : std::runtime_error("system is not zero-dimensional") {}
};

// One isolating box per real solution, coordinate-wise rational intervals
// in the order of the x-variables of the input VarSet.
struct SolveResult {
  int complex_distinct = 0;
  int real_distinct = 0;
  std::vector<std::vector<std::pair<Rational, Rational>>> real_boxes;
  std::vector<Rational> separating_form;  // coefficients of the form used
};

// Brute-force count of the distinct complex / real solutions of a
// zero-dimensional system over Q. Equations must not depend on the
// parameter block of their VarSet (specialize first). Independent of the
// Groebner/Hermite pipeline: elimination is done by substitution into a
// random separating linear form and iterated resultants, certified by
// squarefreeness and cross-checked with a second form.
SolveResult oracle_count(const std::vector<MPoly>& eqs, unsigned seed = 20240801);

// Same count for a system whose coefficients live in Q(alpha): equations may
// additionally depend on parameter `ext_var`, which is bound to the real
// algebraic number alpha. Boxes are not produced on this path.
SolveResult oracle_count_ext(const std::vector<MPoly>& eqs, size_t ext_var,
                             const RealAlgebraicNumber& alpha, unsigned seed = 20240801);

// Eliminant of the given separating form, without squarefree processing or
// retries; nullopt when the projection degenerates. Used by audits that need
// to see multiplicities.
std::optional<UPoly> raw_eliminant(const std::vector<MPoly>& eqs,
                                   const std::vector<Rational>& lambda);

}  // namespace trsect

#endif
