#ifndef TRSECT_SECTIONS_HPP
#define TRSECT_SECTIONS_HPP

#include <iosfwd>

#include "trsect/classify.hpp"

namespace trsect {

struct DegenerateChart : std::runtime_error {
  DegenerateChart() : std::runtime_error("curve is contained in the chart hyperplane") {}
};

struct DegreeMismatch : std::runtime_error {
  explicit DegreeMismatch(const std::string& m) : std::runtime_error(m) {}
};

// Projective curve given by homogeneous equations in n+1 coordinates.
struct ProjectiveCurve {
  VarSetPtr coords;  // nparams = 0
  std::vector<MPoly> equations;
  std::optional<int> degree;  // declared section degree, checked when present
};

// Input format: `coords: x y z w`, optional `degree: 6`, then one homogeneous
// polynomial per line; '#' starts a comment.
ProjectiveCurve parse_curve(std::istream& in);
ProjectiveCurve parse_curve_text(const std::string& text);

// Hyperplane-section family in one chart: the hyperplane has coefficient 1 on
// coordinate `normalized`, coefficient 0 on the `pinned` coordinates, and one
// parameter per remaining coordinate. The curve is dehomogenized at `chart`
// and the normalized coordinate is eliminated through the hyperplane.
struct SectionProblem {
  size_t normalized = 0;
  size_t chart = 0;
  std::vector<size_t> pinned;
  ParametricSystem system;
  std::vector<size_t> param_coord;  // coordinate each parameter multiplies
  size_t delta = 0;                 // 0 until a Groebner basis has been run
};

SectionProblem section_system(const ProjectiveCurve& curve, size_t normalized, size_t chart,
                              const std::vector<size_t>& pinned = {}, bool check_degree = true);

using Boxes = std::vector<std::vector<std::pair<Rational, Rational>>>;

struct VerifyResult {
  int real = 0;
  int complex_distinct = 0;
  size_t dim = 0;  // dimension of the specialized quotient; rank < dim flags
                   // a multiple intersection point
  Boxes boxes;
};

// Count the affine intersection points of the curve with the hyperplane
// sum coeffs[i] * coord_i = 0, exactly, plus isolating boxes for display.
VerifyResult verify_hyperplane(const ProjectiveCurve& curve, const std::vector<Rational>& coeffs,
                               size_t chart = SIZE_MAX);

// distinct real / complex points of the curve cut by coordinate `chart` = 0
std::pair<int, int> infinity_points(const ProjectiveCurve& curve, size_t chart);

struct SectionVerdict {
  bool found = false;
  std::vector<Rational> hyperplane;  // projective coefficients, coord order
  int real = 0;
  Boxes boxes;
  size_t delta = 0;
  int inf_real = 0;      // curve points on the chart hyperplane at infinity
  int inf_complex = 0;
  std::vector<std::string> unresolved;  // empty iff the verdict is unconditional
};

// Search every hyperplane stratum (each coordinate normalized to 1 in one
// pass, earlier coefficients pinned to 0) for a simple totally real section
// of degree delta. `found` carries a certified witness; otherwise the result
// is NONE_SIMPLE on all strata outside the listed unresolved ones.
SectionVerdict totally_real_section(const ProjectiveCurve& curve, size_t chart = SIZE_MAX,
                                    unsigned seed = 20240803, int tries = 400, int jobs = 1);

struct FiberReport {
  size_t delta = 0;  // fiber degree: dimension of the Hermite matrix
  ClassificationReport affine;
  int inf_real = 0;  // the fiber at s = infinity
  int inf_complex = 0;
  int max_real = 0;
  bool totally_real = false;  // some fiber with delta distinct real points
  std::vector<std::string> unresolved;
};

// Classification of the pencil fibers {f = 0, q1 - s*q2 = 0} of a plane
// curve, over an affine chart, including the fiber at s = infinity. A common
// factor of q1 and q2 (a fixed component of the pencil) is divided out.
FiberReport fiber_classify(const MPoly& f, const MPoly& q1, const MPoly& q2,
                           size_t chart = SIZE_MAX);

}  // namespace trsect

#endif
