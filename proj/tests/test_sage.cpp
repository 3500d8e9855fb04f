#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "subcirc/sage.hpp"

using namespace subcirc;

namespace {

Signomial make_f(std::vector<Rational> support, std::vector<double> coeffs) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) c(static_cast<Eigen::Index>(i)) = coeffs[i];
  return Signomial(SupportSet::univariate(support), c);
}

Circuit witness_for(const SupportSet& a, const Polyhedron& x, const Vec& nu) {
  auto sigma = support_function(x, Vec(-a.apply(nu)));
  REQUIRE(sigma.has_value());
  return make_circuit(a, nu, *sigma, {"test", {}});
}

}  // namespace

TEST_CASE("evaluation") {
  Signomial f = make_f({0, 1, 2}, {1, -2, 1});
  CHECK(evaluate(f, make_vec({0})) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(evaluate(f, make_vec({1})) == doctest::Approx(std::pow(1 - std::exp(1.0), 2.0) - 0.0)
                                          .epsilon(1e-12));

  Signomial g = make_f({0, 1}, {-std::exp(-1.0), 1});
  CHECK(evaluate(g, make_vec({-1})) == doctest::Approx(0.0).epsilon(1e-14));

  Signomial one = make_f({0}, {1});
  CHECK(evaluate(one, make_vec({5})) == 1.0);
  CHECK_THROWS_AS(evaluate(one, make_vec({5, 5})), DimensionError);

  Signomial steep = make_f({1000}, {1});
  CHECK_THROWS_AS(evaluate(steep, make_vec({1})), EvaluationOverflowError);
}

TEST_CASE("age membership verdicts") {
  SupportSet a = SupportSet::univariate({0, 1, 2});
  Polyhedron x = preset_cube(1);
  Circuit lam = witness_for(a, x, make_vec({1, -2, 1}));
  CHECK(lam.sigma == 0);

  Eigen::VectorXd c(3);
  c << 1, -2, 1;
  auto r = age_membership(Signomial(a, c), {lam});
  CHECK(r.status == Membership::Boundary);

  c << 1, -2.1, 1;
  CHECK(age_membership(Signomial(a, c), {lam}).status == Membership::NonMember);

  c << 1, -1.9, 1;
  CHECK(age_membership(Signomial(a, c), {lam}).status == Membership::Member);

  c << 1, 2, 1;  // all nonnegative
  CHECK(age_membership(Signomial(a, c), {lam}).status == Membership::Member);

  c << 0, -2, 1;  // vanishing coefficient over the positive support
  CHECK(age_membership(Signomial(a, c), {lam}).status == Membership::NonMember);

  c << 1, -2, -1;  // a second negative entry
  CHECK(age_membership(Signomial(a, c), {lam}).status == Membership::NonMember);
}

TEST_CASE("age membership at the two-point boundary") {
  SupportSet a = SupportSet::univariate({0, 1});
  Polyhedron x = preset_cube(1);
  Circuit lam = witness_for(a, x, make_vec({-1, 1}));
  CHECK(lam.sigma == 1);
  Eigen::VectorXd c(2);
  c << -std::exp(-1.0), 1;
  auto r = age_membership(Signomial(a, c), {lam});
  CHECK(r.status == Membership::Boundary);
  // sampled soundness: the boundary function is nonnegative on X
  auto sr = sample_nonnegativity(Signomial(a, c), x, 2000, 1);
  CHECK(sr.min_value >= -1e-9);
}

TEST_CASE("sampled nonnegativity flags a violating function") {
  SupportSet a = SupportSet::univariate({0, 1, 2});
  Polyhedron x = preset_cube(1);
  Eigen::VectorXd c(3);
  c << 1, -2.1, 1;
  auto sr = sample_nonnegativity(Signomial(a, c), x, 5000, 7);
  CHECK(sr.min_value < 0.0);
  CHECK(std::abs(sr.argmin(0)) < 0.5);  // the violation sits near the origin

  c << 1, 0, 0;
  auto one = sample_nonnegativity(Signomial(a, c), x, 100, 3);
  CHECK(one.min_value == 1.0);
  CHECK_THROWS_AS(sample_nonnegativity(Signomial(a, c), preset_halfline(), 10, 0), Error);
}

TEST_CASE("decomposition summand lists") {
  SupportSet a = SupportSet::univariate({0, 1, 2});
  CHECK(sage_decomposition_summands(a, preset_orthant(1), true).size() == 2);
  CHECK(sage_decomposition_summands(a, preset_orthant(1), false).size() == 4);
  CHECK(sage_decomposition_summands(a, preset_cube(1), true).size() == 3);
  SupportSet simplex({make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1})});
  CHECK(sage_decomposition_summands(simplex, preset_rn(2), true).empty());
}

TEST_CASE("interval summand list matches the closed form") {
  for (int m = 3; m <= 6; ++m) {
    std::vector<Rational> pts;
    for (int i = 0; i < m; ++i) pts.push_back(i);
    SupportSet a = SupportSet::univariate(pts);
    auto reduced = sage_decomposition_summands(a, preset_cube(1), true);
    CHECK(static_cast<int>(reduced.size()) == m);  // 2 boundary pairs + (m-2) triples
    int pairs = 0, triples = 0;
    for (const Circuit& c : reduced) (c.support.size() == 2 ? pairs : triples) += 1;
    CHECK(pairs == 2);
    CHECK(triples == m - 2);
  }
}

TEST_CASE("extreme ray checker") {
  // two-term boundary function over {0,1}
  Signomial f1 = make_f({0, 1}, {-std::exp(-1.0), 1});
  auto r1 = interval_extreme_ray_check(f1);
  CHECK(r1.extremal);
  CHECK(r1.which_case == 1);

  // the symmetric square over {0,1,2}
  Signomial f2 = make_f({0, 1, 2}, {1, -2, 1});
  auto r2 = interval_extreme_ray_check(f2);
  CHECK(r2.extremal);
  CHECK(r2.which_case == 3);
  CHECK(r2.root == doctest::Approx(0.0));

  // strictly interior product condition
  Signomial f3 = make_f({0, 1, 2}, {1, -1, 1});
  CHECK(!interval_extreme_ray_check(f3).extremal);

  // wrong shape: non-consecutive three-term support
  Signomial f4 = make_f({0, 1, 2, 3}, {1, -2, 0, 1});
  CHECK(!interval_extreme_ray_check(f4).extremal);

  // mirrored boundary pair over the top of the support
  Signomial f5 = make_f({0, 1, 2}, {0, 1, -std::exp(-1.0)});
  auto r5 = interval_extreme_ray_check(f5);
  CHECK(r5.extremal);
  CHECK(r5.which_case == 2);

  CHECK_THROWS_AS(interval_extreme_ray_check(make_f({1, 0}, {1, 1})), Error);
}

TEST_CASE("accepted three-term functions vanish at the reported root") {
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> coeff(0.2, 3.0);
  std::uniform_int_distribution<int> gap(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int a0 = 0, a1 = a0 + gap(rng), a2 = a1 + gap(rng);
    double lm = double(a2 - a1) / double(a2 - a0);
    double lp = double(a1 - a0) / double(a2 - a0);
    double cm = coeff(rng), cp = coeff(rng);
    double ci = -std::pow(cm / lm, lm) * std::pow(cp / lp, lp);
    Signomial f = make_f({a0, a1, a2}, {cm, ci, cp});
    auto r = interval_extreme_ray_check(f);
    double x_star = std::log(cm * lp / (cp * lm)) / double(a2 - a0);
    if (!r.extremal) {
      CHECK(std::abs(x_star) > 1.0 - 1e-9);  // rejected only when the zero leaves [-1,1]
      continue;
    }
    CHECK(r.which_case == 3);
    CHECK(std::abs(evaluate(f, make_vec({rational_from_double(x_star)}))) <= 1e-8);
    auto sr = sample_nonnegativity(f, preset_cube(1), 2000, trial);
    CHECK(sr.min_value >= -1e-9);
  }
}

TEST_CASE("atomic decomposition") {
  SupportSet a = SupportSet::univariate({0, 1});
  Polyhedron x = preset_cube(1);
  Eigen::VectorXd c(2);
  c << 1, 0;
  auto [f1, f2] = decompose_atomic(Signomial(a, c), x);
  CHECK(f1.coefficients(0) == 1.0);
  CHECK(f1.coefficients(1) == -std::exp(-1.0));
  CHECK(f2.coefficients(1) == std::exp(-1.0));
  // exact cancellation in coefficient space
  CHECK((f1.coefficients + f2.coefficients - c).isZero(0.0));

  CHECK_THROWS_AS(decompose_atomic(Signomial(a, c), preset_halfline()), NonCompactError);
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
  CHECK_THROWS_AS(decompose_atomic(Signomial(a, zero), x), Error);
  SupportSet single({make_vec({0})});
  Eigen::VectorXd c1(1);
  c1 << 1;
  CHECK_THROWS_AS(decompose_atomic(Signomial(single, c1), x), Error);
}

TEST_CASE("atomic decomposition parts are members on planar supports") {
  SupportSet g = SupportSet::grid(2);
  Polyhedron x = preset_cube(2);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(4);
  c(2) = 3.5;
  auto [f1, f2] = decompose_atomic(Signomial(g, c), x);
  CHECK((f1.coefficients + f2.coefficients - c).isZero(0.0));
  auto s1 = sample_nonnegativity(f1, x, 3000, 11);
  auto s2 = sample_nonnegativity(f2, x, 3000, 11);
  CHECK(s1.min_value >= -1e-9);
  CHECK(s2.min_value >= -1e-9);
}

TEST_CASE("random members of witnessed cones are nonnegative on samples") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> pos(0.1, 5.0), marg(1e-6, 0.5);
  SupportSet a = SupportSet::univariate({0, 1, 2});
  Polyhedron x = preset_cube(1);
  auto fam = enumerate_circuits(a, x);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Circuit& lam = fam.circuits()[static_cast<size_t>(trial) % fam.circuits().size()];
    Eigen::VectorXd c = Eigen::VectorXd::Zero(3);
    double lhs = 0.0;
    for (int al : lam.positive_support) {
      c(al) = pos(rng);
      double la = lam.normalized(al).get_d();
      lhs += la * (std::log(c(al)) - std::log(la));
    }
    c(lam.beta) = -std::exp(lhs - lam.sigma.get_d() - marg(rng));
    Signomial f(a, c);
    auto verdict = age_membership(f, {lam});
    CHECK(verdict.status == Membership::Member);
    auto sr = sample_nonnegativity(f, x, 500, trial);
    CHECK(sr.min_value >= -1e-9);
    ++checked;
  }
  CHECK(checked == 60);
}
