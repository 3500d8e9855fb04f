#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "subcirc/numeric.hpp"

namespace subcirc {

class EmptyPolyhedronError : public Error {
 public:
  explicit EmptyPolyhedronError(const std::string& what = "polyhedron is empty") : Error(what) {}
};

class NotAConeError : public Error {
 public:
  explicit NotAConeError(const std::string& what = "input is not a cone") : Error(what) {}
};

class NotAMemberError : public Error {
 public:
  explicit NotAMemberError(const std::string& what = "vector is not a member of the cone") : Error(what) {}
};

// a·x ≤ b for inequalities, a·x = b for equations.
struct HalfSpace {
  Vec a;
  Rational b;
};

struct HRep {
  std::vector<HalfSpace> ineqs;
  std::vector<HalfSpace> eqs;
  Index dim = 0;
};

struct VRep {
  std::vector<Vec> vertices;
  std::vector<Vec> rays;       // primitive, pairwise non-proportional
  std::vector<Vec> lineality;  // linearly independent basis
  Index dim = 0;

  bool is_cone() const;  // vertices all zero (or absent)
  bool is_bounded() const { return rays.empty() && lineality.empty(); }
};

HalfSpace canonical_ineq(const HalfSpace& h);
HalfSpace canonical_eq(const HalfSpace& h);

// Extreme rays and lineality of {x : Ax ≥ 0, Ex = 0}.
// Rays come back primitive and sorted; tight sets refer to rows of A.
struct DdRay {
  Vec x;
  std::vector<int> tight;
};
struct DdResult {
  std::vector<DdRay> rays;
  std::vector<Vec> lineality;
};
DdResult double_description(const Mat& A, const Mat& E);

struct VertexEnumeration {
  VRep vrep;
  std::vector<std::vector<int>> vertex_tight;  // inequality indices per vertex
  std::vector<std::vector<int>> ray_tight;
};
VertexEnumeration vrep_from_hrep_certified(const HRep& h);  // throws EmptyPolyhedronError
VRep vrep_from_hrep(const HRep& h);

struct FacetEnumeration {
  HRep hrep;
  // Generator indices tight on each facet; vertices are indexed 0..nv-1,
  // rays nv..nv+nr-1, in the order of the input VRep.
  std::vector<std::vector<int>> facet_tight;
};
FacetEnumeration hrep_from_vrep_certified(const VRep& v);
HRep hrep_from_vrep(const VRep& v);

// Immutable polyhedron with lazily cached second representation.
// Cache fill is idempotent and guarded; concurrent readers are fine.
class Polyhedron {
 public:
  Polyhedron();
  static Polyhedron from_hrep(HRep h);
  static Polyhedron from_vrep(VRep v);
  static Polyhedron from_both(HRep h, VRep v);

  Index dim() const;
  bool has_hrep() const;
  bool has_vrep() const;
  const HRep& hrep() const;
  const VRep& vrep() const;

  bool contains(const Vec& x) const;
  bool is_cone() const;
  bool is_bounded() const;
  bool is_full_dim() const;
  Index lineality_dim() const;
  Polyhedron translated(const Vec& t) const;

 private:
  struct State;
  std::shared_ptr<State> s_;
};

// sup{y·x : x ∈ p}; nullopt encodes +infinity.
std::optional<Rational> support_function(const Polyhedron& p, const Vec& y);

VRep recession_cone(const Polyhedron& p);

VRep minkowski_sum(const VRep& a, const VRep& b);

// {y : y·x ≥ 0 for all x in the cone}.
VRep dual_cone(const VRep& c);

struct ExtremeCheck {
  bool extreme = false;
  std::vector<int> tight_facets;
};
// Throws NotAMemberError when g is outside the cone.
ExtremeCheck is_extreme_generator(const VRep& cone, const Vec& g);

// Exact feasibility helpers (thin wrappers over the rational simplex).
bool in_convex_hull(const Vec& x, const std::vector<Vec>& points);
bool in_generated(const Vec& x, const std::vector<Vec>& points, const std::vector<Vec>& rays,
                  const std::vector<Vec>& lineality);
// max over representations x = Σθp, Σθ = 1, θ ≥ 0 of min θ; nullopt when x ∉ conv.
std::optional<Rational> relint_hull_margin(const Vec& x, const std::vector<Vec>& points);
bool in_relint_hull(const Vec& x, const std::vector<Vec>& points);

std::vector<Vec> canonical_lineality_basis(const std::vector<Vec>& vectors);
// Canonical coset representative given an echelon lineality basis.
Vec reduce_mod_lineality(Vec x, const std::vector<Vec>& lineality);
VRep normalize_vrep(VRep v);
std::vector<Vec> prune_rays(const std::vector<Vec>& rays, const std::vector<Vec>& lineality);
std::vector<Vec> prune_points(const std::vector<Vec>& points, const std::vector<Vec>& rays,
                              const std::vector<Vec>& lineality);

// Image {Mx : x ∈ v} of a polyhedron under a linear map.
VRep linear_image(const Mat& m, const VRep& v);

Polyhedron preset_line();
Polyhedron preset_halfline();
Polyhedron preset_interval();
Polyhedron preset_rn(Index n);
Polyhedron preset_orthant(Index n);
Polyhedron preset_cube(Index n);

}  // namespace subcirc
