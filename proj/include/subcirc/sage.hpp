#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "subcirc/reduction.hpp"

namespace subcirc {

class EvaluationOverflowError : public Error {
 public:
  explicit EvaluationOverflowError(const std::string& what) : Error(what) {}
};

class WitnessMismatchError : public Error {
 public:
  explicit WitnessMismatchError(const std::string& what) : Error(what) {}
};

class NonCompactError : public Error {
 public:
  explicit NonCompactError(const std::string& what) : Error(what) {}
};

// f(x) = sum_alpha c_alpha exp(alpha . x)
struct Signomial {
  SupportSet support;
  Eigen::VectorXd coefficients;

  Signomial(SupportSet a, Eigen::VectorXd c) : support(std::move(a)), coefficients(std::move(c)) {
    if (coefficients.size() != support.size())
      throw DimensionError("coefficient count differs from |A|");
  }
};

// Compensated-summation evaluation; throws on |alpha.x| > 700.
double evaluate(const Signomial& f, const Vec& x);

struct AgeWitness {
  Circuit lambda;  // normalized form and sigma are used
};

enum class Membership { Member, Boundary, NonMember };
struct MembershipResult {
  Membership status = Membership::NonMember;
  double margin = 0.0;  // log-domain slack of the product inequality
};

// Product inequality of the lambda-witnessed AGE cone, compared in the log
// domain with exact handling of lambda and sigma. Relative tolerance 1e-9
// decides the boundary band.
MembershipResult age_membership(const Signomial& f, const AgeWitness& w);

// Index set of the Minkowski decomposition into witnessed cones.
std::vector<Circuit> sage_decomposition_summands(const SupportSet& a, const Polyhedron& x,
                                                 bool use_reduced);

struct ExtremalityResult {
  bool extremal = false;
  int which_case = 0;  // 1, 2: boundary two-term patterns; 3: three-term window
  std::string reason;
  double root = 0.0;  // case 3: location of the zero in [-1,1]
};
// Extreme-ray test for the interval X = [-1,1] over a sorted univariate
// support. Coefficients are floats; the defining identities are checked to
// 1e-9 relative tolerance.
ExtremalityResult interval_extreme_ray_check(const Signomial& f);

// Splits a single positive term over a compact X into two AGE members using
// the two-point circuit toward the first other support point.
std::pair<Signomial, Signomial> decompose_atomic(const Signomial& f, const Polyhedron& x);

struct SampleResult {
  double min_value = 0.0;
  Eigen::VectorXd argmin;
  int accepted = 0;
};
// Deterministic low-discrepancy (Halton) sampling with rejection inside the
// H-representation; seed shifts the sequence offset. A bounding box is
// required when X is unbounded.
SampleResult sample_nonnegativity(const Signomial& f, const Polyhedron& x, int n, uint64_t seed,
                                  const std::optional<std::pair<Eigen::VectorXd, Eigen::VectorXd>>&
                                      box = std::nullopt);

}  // namespace subcirc
