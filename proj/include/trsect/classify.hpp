#ifndef TRSECT_CLASSIFY_HPP
#define TRSECT_CLASSIFY_HPP

#include "trsect/hermite.hpp"

namespace trsect {

struct TooManyParameters : std::runtime_error {
  TooManyParameters() : std::runtime_error("certified sampling supports at most three parameters") {}
};

struct Region {
  std::vector<Rational> sample;  // parameter point with w != 0
  std::string descriptor;        // interval (t = 1) or sign vector of w factors
  int real = 0;
  int complex_distinct = 0;
};

struct BoundaryPoint {
  RealAlgebraicNumber point;
  std::optional<int> real;             // empty: undetermined
  std::optional<int> complex_distinct;
  std::vector<int> minor_signs;        // recorded when computed
  std::string method;                  // minor-signs | extension | substitution
};

struct ClassificationReport {
  size_t delta = 0;
  MPoly w{nullptr};
  std::vector<Region> regions;
  std::vector<BoundaryPoint> boundary;       // t = 1 only
  std::vector<std::string> unresolved;       // strata we make no claim about
  int max_real = 0;                          // over regions and resolved boundary
};

// full classification over one parameter, boundary points included
ClassificationReport classify_1param(const ParametricSystem& sys);

// at least one rational point with w != 0 in every connected component of the
// complement of w = 0; open-cell cylindrical decomposition
std::vector<std::vector<Rational>> sample_open_cells(const MPoly& w);

// sample-point classification of the complement of w = 0; strata of wInfty
// are recursed into where possible, the wH locus is listed as unresolved
ClassificationReport classify_multiparam(const ParametricSystem& sys);

// partial report for one irreducible-over-Q factor of wInfty
struct StratumResult {
  std::vector<Region> regions;             // from substitution recursion
  std::vector<BoundaryPoint> boundary;     // from algebraic specialization
  std::vector<std::string> unresolved;
  int max_real = 0;
};
StratumResult handle_winfty_stratum(const ParametricSystem& sys, const MPoly& factor);

struct WitnessResult {
  std::optional<std::vector<Rational>> point;  // empty: ABSENT_ON_SAMPLED_CELLS
  int real = 0;
  std::vector<std::vector<std::pair<Rational, Rational>>> boxes;
  std::vector<std::string> unresolved;
};

// search for a parameter point with `target` real solutions: randomized
// sampling first, then certified cells, then resolved strata; every hit is
// re-verified by the independent oracle
WitnessResult find_witness(const ParametricSystem& sys, int target, unsigned seed = 20240802,
                           int random_tries = 400);

}  // namespace trsect

#endif
