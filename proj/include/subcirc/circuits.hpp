#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subcirc/polyhedra.hpp"

namespace subcirc {

class NotInNBetaError : public Error {
 public:
  explicit NotInNBetaError(const std::string& what) : Error(what) {}
};

// The finite point set A in Q^n with a fixed index order. Acts as the linear
// operator nu -> A nu = sum_alpha alpha * nu_alpha.
class SupportSet {
 public:
  explicit SupportSet(std::vector<Vec> points);

  Index ambient_dim() const { return n_; }
  int size() const { return static_cast<int>(points_.size()); }
  const Vec& point(int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<Vec>& points() const { return points_; }
  const Mat& matrix() const { return mat_; }  // n x m, column j = point j
  Vec apply(const Vec& nu) const;
  int index_of(const Vec& p) const;  // -1 when absent

  static SupportSet grid(int k);  // {(i,j) : 1 <= i,j <= k}, lex order
  static SupportSet univariate(const std::vector<Rational>& xs);

  // For k1 x k2 integer grids, the (rows, cols) shape; nullopt otherwise.
  std::optional<std::pair<int, int>> grid_shape() const;
  int grid_index(int i, int j) const;  // lex position of point (i,j)

 private:
  std::vector<Vec> points_;
  Index n_ = 0;
  Mat mat_;
};

struct Certificate {
  std::string kind;        // which route produced it
  std::vector<int> tight;  // indices into that route's constraint/generator list
};

struct Circuit {
  Vec primitive;   // coprime integers, unique negative entry at beta
  Vec normalized;  // primitive scaled so normalized(beta) == -1
  int beta = -1;
  std::vector<int> support;
  std::vector<int> positive_support;
  Rational sigma;  // sigma_X(-A nu) of the normalized form
  Certificate certificate;
};

// Throws NotInNBetaError unless nu sums to zero with exactly one negative entry.
Circuit make_circuit(const SupportSet& a, const Vec& nu, const Rational& sigma_of_nu,
                     Certificate cert);

// Which beta a vector would belong to, when it lies in some N_beta.
std::optional<int> nbeta_index(const Vec& nu);

class CircuitFamily {
 public:
  CircuitFamily(SupportSet a, std::vector<Circuit> circuits);

  const SupportSet& support() const { return support_; }
  const std::vector<Circuit>& circuits() const { return circuits_; }
  int size() const { return static_cast<int>(circuits_.size()); }
  std::vector<int> counts_by_beta() const;
  bool contains_ray(const Vec& nu) const;
  const Circuit* find_ray(const Vec& nu) const;

 private:
  SupportSet support_;
  std::vector<Circuit> circuits_;  // canonical order: (beta, lex primitive)
};

// V-representation of N_beta = cone{e_alpha - e_beta : alpha != beta}.
VRep nbeta_generators(const SupportSet& a, int beta);

// General route: facet normals of P_beta = -A^T X + polar(N_beta) per beta.
CircuitFamily enumerate_circuits(const SupportSet& a, const Polyhedron& x, int parallel = 1);

// Cone route: extreme rays of {nu in N_beta : sigma_X(-A nu) <= 0}.
CircuitFamily enumerate_circuits_cone(const SupportSet& a, const Polyhedron& x);

enum class UnivariateShape { Line, HalfLine, Interval };
Polyhedron univariate_set(UnivariateShape shape);
CircuitFamily circuits_univariate(const SupportSet& a, UnivariateShape shape);

// Nonnegative orthant route via projections onto coordinate subsets.
CircuitFamily circuits_orthant(const SupportSet& a);

// Classical affine (simplicial) circuits: X = R^n.
CircuitFamily affine_circuits(const SupportSet& a);

struct IsCircuitResult {
  bool value = false;
  std::string reason;
  Certificate certificate;
};
IsCircuitResult is_circuit(const SupportSet& a, const Polyhedron& x, const Vec& nu);

struct NecessaryCheck {
  bool pass = false;
  std::string violation;  // set when pass == false
};
NecessaryCheck check_support_necessary(const SupportSet& a, const Polyhedron& x,
                                       const Circuit& lambda);

enum class SufficientVerdict { CertifiedCircuit, NotApplicable };
struct SufficientCheck {
  SufficientVerdict verdict = SufficientVerdict::NotApplicable;
  int which_case = 0;  // 1 = two-point support, 2 = full-dimensional kernel case
  std::string detail;
};
SufficientCheck check_edge_case_sufficient(const SupportSet& a, const Polyhedron& x,
                                           const Vec& normalized_lambda);

enum class ExclusionVerdict { Excluded, Inconclusive };
ExclusionVerdict check_cube_exclusion(const SupportSet& a, const Circuit& lambda);
struct GeneralExclusion {
  ExclusionVerdict verdict = ExclusionVerdict::Inconclusive;
  std::vector<int> j_set;  // J(lambda)
};
GeneralExclusion check_cube_exclusion_general(const SupportSet& a, const Circuit& lambda);

struct SliceCheck {
  bool equal = false;
  std::optional<Vec> counterexample;
};
// {lambda in Lambda_X : A lambda = 0} == affine circuits, X a full-dim cone.
SliceCheck cone_zero_slice_check(const SupportSet& a, const Polyhedron& x);

bool same_family(const CircuitFamily& a, const CircuitFamily& b);

}  // namespace subcirc
