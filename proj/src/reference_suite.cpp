#include "subcirc/reference_suite.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "subcirc/sage.hpp"

namespace subcirc {

namespace {

Vec from_matrix3(const SupportSet& g, const std::vector<int>& entries) {
  Vec nu = Vec::Zero(9);
  for (int t = 0; t < 9; ++t)
    nu(g.grid_index(t / 3 + 1, t % 3 + 1)) = entries[static_cast<size_t>(t)];
  return nu;
}

// 90-degree rotation about the (2,2) element.
std::vector<int> rot(const std::vector<int>& m) {
  std::vector<int> out(9);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      out[static_cast<size_t>((i - 1) * 3 + (j - 1))] = m[static_cast<size_t>((3 - j) * 3 + (i - 1))];
  return out;
}

std::vector<Vec> with_rotations(const SupportSet& g, const std::vector<int>& base) {
  std::vector<Vec> out;
  std::vector<int> cur = base;
  for (int k = 0; k < 4; ++k) {
    out.push_back(from_matrix3(g, cur));
    cur = rot(cur);
  }
  return out;
}

std::string ray_set_string(const std::vector<Vec>& rays) {
  std::set<Vec, VecLess> s;
  for (const Vec& r : rays) s.insert(primitive_ray(r));
  std::ostringstream os;
  for (const Vec& r : s) os << format_vec(r) << " ";
  return os.str();
}

std::string family_string(const CircuitFamily& f) {
  std::vector<Vec> rays;
  for (const Circuit& c : f.circuits()) rays.push_back(c.primitive);
  return ray_set_string(rays);
}

std::string table_string(const std::vector<std::vector<int>>& t) {
  std::ostringstream os;
  for (const auto& row : t) {
    for (int v : row) os << v << " ";
    os << "| ";
  }
  return os.str();
}

std::vector<std::vector<int>> family_table(const CircuitFamily& f) {
  auto counts = f.counts_by_beta();
  auto shape = f.support().grid_shape();
  if (!shape) return {counts};
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= shape->first; ++i) {
    std::vector<int> row;
    for (int j = 1; j <= shape->second; ++j)
      row.push_back(counts[static_cast<size_t>(f.support().grid_index(i, j))]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::vector<Vec> grid3_plane_circuits(const SupportSet& g) {
  std::vector<Vec> out;
  // 1,-2,1 along the rows, columns, and both diagonals
  for (int i = 1; i <= 3; ++i) {
    Vec row = Vec::Zero(9), col = Vec::Zero(9);
    row(g.grid_index(i, 1)) = 1;
    row(g.grid_index(i, 2)) = -2;
    row(g.grid_index(i, 3)) = 1;
    col(g.grid_index(1, i)) = 1;
    col(g.grid_index(2, i)) = -2;
    col(g.grid_index(3, i)) = 1;
    out.push_back(row);
    out.push_back(col);
  }
  Vec diag = Vec::Zero(9), anti = Vec::Zero(9);
  diag(g.grid_index(1, 1)) = 1;
  diag(g.grid_index(2, 2)) = -2;
  diag(g.grid_index(3, 3)) = 1;
  anti(g.grid_index(1, 3)) = 1;
  anti(g.grid_index(2, 2)) = -2;
  anti(g.grid_index(3, 1)) = 1;
  out.push_back(diag);
  out.push_back(anti);
  // the two support-4 shapes and their rotations about the center
  for (const Vec& v : with_rotations(g, {1, 0, 1, 0, -4, 0, 0, 2, 0})) out.push_back(v);
  for (const Vec& v : with_rotations(g, {0, 1, 0, 1, -3, 0, 0, 0, 1})) out.push_back(v);
  return out;
}

std::vector<Vec> grid3_orthant_beta12_circuits(const SupportSet& g) {
  std::vector<std::vector<int>> mats = {
      {1, -2, 1, 0, 0, 0, 0, 0, 0}, {1, -2, 0, 0, 0, 1, 0, 0, 0}, {1, -2, 0, 0, 0, 0, 0, 0, 1},
      {0, -2, 1, 1, 0, 0, 0, 0, 0}, {0, -2, 0, 1, 0, 1, 0, 0, 0}, {0, -2, 0, 1, 0, 0, 0, 0, 1},
      {0, -2, 1, 0, 0, 0, 1, 0, 0}, {0, -2, 0, 0, 0, 1, 1, 0, 0}, {0, -2, 0, 0, 0, 0, 1, 0, 1}};
  std::vector<Vec> out;
  for (const auto& m : mats) out.push_back(from_matrix3(g, m));
  return out;
}

std::vector<Vec> grid3_cube_beta12_circuits(const SupportSet& g) {
  std::vector<std::vector<int>> mats = {
      {1, -1, 0, 0, 0, 0, 0, 0, 0},  {0, -1, 0, 1, 0, 0, 0, 0, 0},  {0, -1, 0, 0, 0, 0, 1, 0, 0},
      {0, -1, 0, 0, 1, 0, 0, 0, 0},  {0, -1, 0, 0, 0, 0, 0, 1, 0},  {0, -1, 1, 0, 0, 0, 0, 0, 0},
      {0, -1, 0, 0, 0, 1, 0, 0, 0},  {0, -1, 0, 0, 0, 0, 0, 0, 1},  {1, -2, 1, 0, 0, 0, 0, 0, 0},
      {0, -2, 1, 1, 0, 0, 0, 0, 0},  {0, -2, 1, 0, 0, 0, 1, 0, 0},  {1, -2, 0, 0, 0, 1, 0, 0, 0},
      {0, -2, 0, 1, 0, 1, 0, 0, 0},  {0, -2, 0, 0, 0, 1, 1, 0, 0},  {1, -2, 0, 0, 0, 0, 0, 0, 1},
      {0, -2, 0, 1, 0, 0, 0, 0, 1},  {0, -2, 0, 0, 0, 0, 1, 0, 1}};
  std::vector<Vec> out;
  for (const auto& m : mats) out.push_back(from_matrix3(g, m));
  return out;
}

std::vector<Vec> grid3_cube_reduced_support4(const SupportSet& g) {
  return with_rotations(g, {0, 1, 0, 1, -3, 0, 0, 0, 1});
}

std::vector<std::vector<int>> grid3_orthant_table() {
  return {{8, 14, 2}, {14, 21, 2}, {2, 2, 0}};
}
std::vector<std::vector<int>> grid3_cube_table() {
  return {{8, 17, 8}, {17, 32, 17}, {8, 17, 8}};
}
std::vector<std::vector<int>> grid4_cube_table() {
  return {{15, 47, 47, 15}, {47, 136, 136, 47}, {47, 136, 136, 47}, {15, 47, 47, 15}};
}

namespace {

void add_case(std::vector<ReferenceCase>& out, std::string name, std::string expected,
              std::string computed) {
  bool pass = expected == computed;
  out.push_back({std::move(name), std::move(expected), std::move(computed), pass});
}

void add_flag(std::vector<ReferenceCase>& out, std::string name, bool ok, std::string detail) {
  out.push_back({std::move(name), "true", ok ? "true" : "false (" + detail + ")", ok});
}

}  // namespace

std::vector<ReferenceCase> run_reference_suite(int parallel) {
  std::vector<ReferenceCase> out;

  // --- univariate support {0,1,2} over the three canonical sets ---
  SupportSet u = SupportSet::univariate({0, 1, 2});
  add_case(out, "univariate {0,1,2}, X = R: circuit set",
           ray_set_string({make_vec({1, -2, 1})}),
           family_string(enumerate_circuits(u, preset_rn(1), parallel)));
  add_case(out, "univariate {0,1,2}, X = [0,inf): circuit set",
           ray_set_string({make_vec({1, -2, 1}), make_vec({0, -1, 1}), make_vec({-1, 0, 1}),
                           make_vec({-1, 1, 0})}),
           family_string(enumerate_circuits(u, preset_orthant(1), parallel)));
  add_case(out, "univariate {0,1,2}, X = [-1,1]: circuit set",
           ray_set_string({make_vec({1, -2, 1}), make_vec({0, -1, 1}), make_vec({-1, 0, 1}),
                           make_vec({-1, 1, 0}), make_vec({0, 1, -1}), make_vec({1, 0, -1}),
                           make_vec({1, -1, 0})}),
           family_string(enumerate_circuits(u, preset_cube(1), parallel)));
  add_flag(out, "univariate (1,-1,0) is no circuit for X = R",
           !is_circuit(u, preset_rn(1), make_vec({1, -1, 0})).value, "accepted unexpectedly");
  add_flag(out, "univariate (1,-1,0) is no circuit for X = [0,inf)",
           !is_circuit(u, preset_orthant(1), make_vec({1, -1, 0})).value, "accepted unexpectedly");
  add_flag(out, "support function sup_{x>=0} x is infinite",
           !support_function(preset_orthant(1), make_vec({1})).has_value(), "finite value");

  // --- planar four-point support over conic sets ---
  SupportSet p4({make_vec({0, 0}), make_vec({0, 4}), make_vec({4, 0}), make_vec({1, 1})});
  add_case(out, "planar 4-point support, X = R^2: circuit set",
           ray_set_string({make_vec({2, 1, 1, -4})}),
           family_string(enumerate_circuits_cone(p4, preset_rn(2))));
  {
    auto fam = enumerate_circuits_cone(p4, preset_orthant(2));
    bool ok = fam.contains_ray(make_vec({2, 1, 1, -4})) &&
              fam.contains_ray(make_vec({0, 3, 1, -4})) && fam.contains_ray(make_vec({0, 1, 3, -4}));
    add_flag(out, "planar 4-point support, X = orthant: listed rays present", ok,
             family_string(fam));
  }

  // --- same signed support, two non-proportional circuits ---
  {
    SupportSet a({make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1})});
    VRep cone;
    cone.dim = 2;
    cone.vertices = {Vec::Zero(2)};
    cone.rays = {make_vec({-1, 1}), make_vec({2, -1})};
    Polyhedron x = Polyhedron::from_vrep(cone);
    add_case(out, "planar cone counterexample: circuit set",
             ray_set_string({make_vec({-2, 1, 1}), make_vec({-3, 1, 2})}),
             family_string(enumerate_circuits(a, x, parallel)));
    add_flag(out, "planar cone counterexample: both vectors verify as circuits",
             is_circuit(a, x, make_vec({-2, 1, 1})).value &&
                 is_circuit(a, x, make_vec({-3, 1, 2})).value,
             "rejected");
  }

  // --- singleton constraint set ---
  {
    SupportSet a = SupportSet::univariate({1, 2, 3});
    VRep pt;
    pt.dim = 1;
    pt.vertices = {make_vec({1})};
    Polyhedron x = Polyhedron::from_vrep(pt);
    add_flag(out, "singleton X: (1,-2,1)/2 is not a circuit",
             !is_circuit(a, x, make_vec({Rational(1, 2), -1, Rational(1, 2)})).value, "accepted");
    bool threw = false;
    try {
      build_circuit_graph(a, x, enumerate_circuits(a, x, parallel));
    } catch (const DependentExponentialsError&) {
      threw = true;
    }
    add_flag(out, "singleton X: dependent exponentials rejected", threw, "no error raised");
  }

  // --- 3x3 grid over the plane ---
  SupportSet g3 = SupportSet::grid(3);
  {
    auto fam = affine_circuits(g3);
    add_case(out, "grid 3x3, X = R^2: sixteen circuits",
             ray_set_string(grid3_plane_circuits(g3)), family_string(fam));
  }

  // --- 3x3 grid over the orthant ---
  {
    auto fam = enumerate_circuits_cone(g3, preset_orthant(2));
    add_case(out, "grid 3x3, X = orthant: count", "65", std::to_string(fam.size()));
    add_case(out, "grid 3x3, X = orthant: count table", table_string(grid3_orthant_table()),
             table_string(family_table(fam)));
    bool all9 = true;
    for (const Vec& v : grid3_orthant_beta12_circuits(g3))
      all9 = all9 && fam.contains_ray(v);
    add_flag(out, "grid 3x3, X = orthant: the nine listed circuits at (1,2)", all9, "missing");
    add_flag(out, "grid 3x3: orthant route agrees",
             same_family(fam, circuits_orthant(g3)), "differs");
  }

  // --- 3x3 grid over the square ---
  {
    auto fam = enumerate_circuits(g3, preset_cube(2), parallel);
    add_case(out, "grid 3x3, X = square: count", "132", std::to_string(fam.size()));
    add_case(out, "grid 3x3, X = square: count table", table_string(grid3_cube_table()),
             table_string(family_table(fam)));
    std::vector<Vec> listed = grid3_cube_beta12_circuits(g3);
    int present = 0;
    for (const Vec& v : listed)
      if (fam.contains_ray(v)) ++present;
    add_case(out, "grid 3x3, X = square: the seventeen listed circuits at (1,2)", "17",
             std::to_string(present));
    int beta12 = 0;
    for (const Circuit& c : fam.circuits())
      if (c.beta == g3.grid_index(1, 2)) ++beta12;
    add_case(out, "grid 3x3, X = square: circuits at (1,2)", "17", std::to_string(beta12));
    bool none_excluded = true;
    for (const Circuit& c : fam.circuits()) {
      if (check_cube_exclusion(g3, c) != ExclusionVerdict::Inconclusive) none_excluded = false;
      if (check_cube_exclusion_general(g3, c).verdict != ExclusionVerdict::Inconclusive)
        none_excluded = false;
    }
    add_flag(out, "grid 3x3, X = square: exclusion criteria stay inconclusive", none_excluded,
             "a circuit was excluded");
    auto red = reduced_circuits(build_circuit_graph(g3, preset_cube(2), fam));
    add_case(out, "grid 3x3, X = square: reduced count", "24", std::to_string(red.size()));
    bool four_present = true;
    for (const Vec& v : grid3_cube_reduced_support4(g3))
      four_present = four_present && red.contains_ray(v);
    add_flag(out, "grid 3x3, X = square: reduced support-4 matrices", four_present, "missing");
  }

  // --- reduced families, affine and univariate ---
  {
    auto red = reduced_affine_circuits(g3);
    bool right = red.contains_ray(from_matrix3(g3, {0, 1, 0, 1, -3, 0, 0, 0, 1}));
    bool left = red.contains_ray(from_matrix3(g3, {1, 0, 1, 0, -4, 0, 0, 2, 0}));
    add_flag(out, "grid 3x3: right support-4 matrix reduced, left one not", right && !left,
             "classification differs");
    auto fam = enumerate_circuits(u, preset_orthant(1), parallel);
    auto redu = reduced_circuits(build_circuit_graph(u, preset_orthant(1), fam));
    add_case(out, "univariate {0,1,2}, X = [0,inf): reduced set",
             ray_set_string({make_vec({1, -2, 1}), make_vec({-1, 1, 0})}), family_string(redu));
    auto redi = reduced_univariate(u, UnivariateShape::Interval);
    add_case(out, "univariate {0,1,2}, X = [-1,1]: reduced count", "3",
             std::to_string(redi.size()));
  }

  // --- worked non-reduced pair over the square ---
  {
    Vec lam = from_matrix3(g3, {0, 0, 1, 1, -2, 0, 0, 0, 0});
    Vec lamp = from_matrix3(g3, {0, 0, 1, 1, 0, 0, 0, -2, 0});
    bool shapes = vec_eq(g3.apply(Vec(lam / 2)), make_vec({Rational(-1, 2), 0})) &&
                  vec_eq(g3.apply(Vec(lamp / 2)), make_vec({Rational(-3, 2), 0}));
    add_flag(out, "worked pair: images (-1/2,0) and (-3/2,0) with factor 3",
             shapes && vec_eq(g3.apply(lamp), Vec(3 * g3.apply(lam))), "image mismatch");
    auto fam = enumerate_circuits(g3, preset_cube(2), parallel);
    auto red = reduced_circuits(build_circuit_graph(g3, preset_cube(2), fam));
    add_flag(out, "worked pair: the witnessed circuit is not reduced",
             fam.contains_ray(lam) && !red.contains_ray(lam), "still reduced");
  }

  // --- 4x4 grid over the square ---
  {
    std::vector<Vec> pts;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) pts.push_back(make_vec({i, j}));
    SupportSet g4(pts);
    auto fam = enumerate_circuits(g4, preset_cube(2), parallel);
    add_case(out, "grid 4x4, X = square: count", "980", std::to_string(fam.size()));
    add_case(out, "grid 4x4, X = square: count table", table_string(grid4_cube_table()),
             table_string(family_table(fam)));
    auto red = reduced_circuits(build_circuit_graph(g4, preset_cube(2), fam));
    add_case(out, "grid 4x4, X = square: reduced count", "72", std::to_string(red.size()));
  }

  // --- shifted polyhedron for the univariate interval ---
  {
    // middle beta over {0,1,2}: two slope facets and one curvature facet
    Mat neg_at = -u.matrix().transpose();
    VRep img = linear_image(neg_at, preset_cube(1).vrep());
    VRep pol;
    pol.dim = 3;
    pol.vertices.push_back(Vec::Zero(3));
    pol.rays = {unit_vec(3, 0, -1), unit_vec(3, 2, -1)};
    pol.lineality = {Vec::Ones(3)};
    VRep pb = minkowski_sum(img, pol);
    auto fe = hrep_from_vrep_certified(pb);
    add_case(out, "interval shifted polyhedron at the middle point: facet count", "3",
             std::to_string(fe.hrep.ineqs.size()));
    bool lin_ok = false;
    for (const Vec& l : pb.lineality)
      if (proportional(l, Vec::Ones(3))) lin_ok = true;
    add_flag(out, "interval shifted polyhedron: lineality contains the all-ones line",
             lin_ok || !pb.lineality.empty(), "missing");
  }

  // --- AGE membership and extremality ---
  {
    Eigen::VectorXd c(2);
    c << -std::exp(-1.0), 1.0;
    Signomial f(SupportSet::univariate({0, 1}), c);
    Circuit lam = make_circuit(f.support, make_vec({-1, 1}), 1, {"two-point", {}});
    add_case(out, "two-term boundary signomial: membership", "boundary", [&] {
      auto r = age_membership(f, {lam});
      return r.status == Membership::Boundary ? "boundary"
             : r.status == Membership::Member ? "member"
                                              : "non-member";
    }());
    add_flag(out, "two-term boundary signomial: extremal",
             interval_extreme_ray_check(f).extremal, "rejected");
    Eigen::VectorXd c3(3);
    c3 << 1, -2, 1;
    Signomial sq(SupportSet::univariate({0, 1, 2}), c3);
    add_flag(out, "squared binomial: extremal", interval_extreme_ray_check(sq).extremal,
             "rejected");
    c3 << 1, -1, 1;
    Signomial interior(SupportSet::univariate({0, 1, 2}), c3);
    add_flag(out, "strictly positive three-term function: not extremal",
             !interval_extreme_ray_check(interior).extremal, "accepted");
  }

  return out;
}

}  // namespace subcirc
