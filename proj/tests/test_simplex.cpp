#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "subcirc/simplex.hpp"

using namespace subcirc;
using lp::Problem;
using lp::Rel;
using lp::Status;

TEST_CASE("simple maximization") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x,y >= 0  -> (8/5, 6/5), value 14/5
  Problem p;
  int x = p.add_var(true), y = p.add_var(true);
  p.add_constraint({{x, 1}, {y, 2}}, Rel::Le, 4);
  p.add_constraint({{x, 3}, {y, 1}}, Rel::Le, 6);
  p.set_objective({{x, 1}, {y, 1}});
  auto r = p.solve();
  REQUIRE(r.status == Status::Optimal);
  CHECK(r.objective == Rational(14, 5));
  CHECK(r.x(0) == Rational(8, 5));
  CHECK(r.x(1) == Rational(6, 5));
}

TEST_CASE("infeasible system") {
  Problem p;
  int x = p.add_var(true);
  p.add_constraint({{x, 1}}, Rel::Ge, 2);
  p.add_constraint({{x, 1}}, Rel::Le, 1);
  CHECK(p.solve().status == Status::Infeasible);
}

TEST_CASE("unbounded objective") {
  Problem p;
  int x = p.add_var(true);
  p.add_constraint({{x, 1}}, Rel::Ge, 1);
  p.set_objective({{x, 1}});
  CHECK(p.solve().status == Status::Unbounded);
}

TEST_CASE("free variables and equalities") {
  // x free, y >= 0: x + y = 1, x - y = -3  ->  x = -1, y = 2
  Problem p;
  int x = p.add_var(false), y = p.add_var(true);
  p.add_constraint({{x, 1}, {y, 1}}, Rel::Eq, 1);
  p.add_constraint({{x, 1}, {y, -1}}, Rel::Eq, -3);
  p.set_objective({{x, 1}});
  auto r = p.solve();
  REQUIRE(r.status == Status::Optimal);
  CHECK(r.x(0) == -1);
  CHECK(r.x(1) == 2);
}

TEST_CASE("redundant rows do not break phase 1") {
  Problem p;
  int x = p.add_var(true), y = p.add_var(true);
  p.add_constraint({{x, 1}, {y, 1}}, Rel::Eq, 2);
  p.add_constraint({{x, 2}, {y, 2}}, Rel::Eq, 4);  // duplicate
  p.set_objective({{x, 1}});
  auto r = p.solve();
  REQUIRE(r.status == Status::Optimal);
  CHECK(r.objective == 2);
}

TEST_CASE("degenerate problems terminate (Bland)") {
  // classic cycling-prone instance solved exactly
  Problem p;
  int x1 = p.add_var(true), x2 = p.add_var(true), x3 = p.add_var(true), x4 = p.add_var(true);
  p.add_constraint({{x1, Rational(1, 2)}, {x2, Rational(-11, 2)}, {x3, Rational(-5, 2)}, {x4, 9}},
                   Rel::Le, 0);
  p.add_constraint({{x1, Rational(1, 2)}, {x2, Rational(-3, 2)}, {x3, Rational(-1, 2)}, {x4, 1}},
                   Rel::Le, 0);
  p.add_constraint({{x1, 1}}, Rel::Le, 1);
  p.set_objective({{x1, 10}, {x2, -57}, {x3, -9}, {x4, -24}});
  auto r = p.solve();
  REQUIRE(r.status == Status::Optimal);
  CHECK(r.objective == 1);
}

TEST_CASE("random feasibility agrees with a Fourier-Motzkin oracle") {
  // Independent check of {x : Ax <= b} feasibility on small random systems.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4), rowsd(1, 6);
  auto fm_feasible = [](std::vector<std::pair<Vec, Rational>> sys, Index nvars) {
    for (Index v = 0; v < nvars; ++v) {
      std::vector<std::pair<Vec, Rational>> lows, highs, rest;
      for (auto& [a, b] : sys) {
        if (a(v) > 0) highs.push_back({a, b});
        else if (a(v) < 0) lows.push_back({a, b});
        else rest.push_back({a, b});
      }
      for (auto& [al, bl] : lows)
        for (auto& [ah, bh] : highs) {
          Vec a = al * ah(v) - ah * al(v);
          Rational b = bl * ah(v) - bh * al(v);
          a(v) = 0;
          rest.push_back({a, b});
        }
      sys = rest;
    }
    for (auto& [a, b] : sys)
      if (b < 0) return false;
    return true;
  };
  for (int t = 0; t < 60; ++t) {
    Index n = 3;
    int m = rowsd(rng);
    std::vector<std::pair<Vec, Rational>> sys;
    Problem p;
    std::vector<int> vars;
    for (Index i = 0; i < n; ++i) vars.push_back(p.add_var(false));
    for (int i = 0; i < m; ++i) {
      Vec a(n);
      for (Index j = 0; j < n; ++j) a(j) = entry(rng);
      Rational b = entry(rng);
      sys.push_back({a, b});
      std::vector<std::pair<int, Rational>> terms;
      for (Index j = 0; j < n; ++j) terms.push_back({vars[j], a(j)});
      p.add_constraint(terms, Rel::Le, b);
    }
    bool lp_feasible = p.solve().status == Status::Optimal;
    CHECK(lp_feasible == fm_feasible(sys, n));
  }
}
