#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "subcirc/numeric.hpp"

using namespace subcirc;

TEST_CASE("rational parsing and formatting round-trips exactly") {
  CHECK(format_rational(parse_rational("22/7")) == "22/7");
  CHECK(format_rational(parse_rational("-22/7")) == "-22/7");
  CHECK(format_rational(parse_rational("5")) == "5");
  CHECK(format_rational(parse_rational("4/6")) == "2/3");  // canonicalized
  CHECK(format_rational(parse_rational("0/9")) == "0");
  CHECK(parse_rational("1/3") + parse_rational("1/6") == parse_rational("1/2"));
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("rational_from_double is exact on representable values") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-0.75) == Rational(-3, 4));
  CHECK(rational_from_double(3.0) == 3);
}

TEST_CASE("primitive_ray canonical representatives") {
  CHECK(vec_eq(primitive_ray(make_vec({Rational(1, 2), -1, Rational(1, 2)})), make_vec({1, -2, 1})));
  CHECK(vec_eq(primitive_ray(make_vec({2, -4, 2})), make_vec({1, -2, 1})));
  Vec fixed = make_vec({0, 3, 1, -4});
  CHECK(vec_eq(primitive_ray(fixed), fixed));
  CHECK_THROWS_AS(primitive_ray(Vec::Zero(3)), Error);
}

TEST_CASE("primitive_ray properties: idempotence and scale invariance") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), len(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Vec v(len(rng));
    bool zero = true;
    for (Index i = 0; i < v.size(); ++i) {
      v(i) = Rational(num(rng), den(rng));
      if (v(i) != 0) zero = false;
    }
    if (zero) continue;
    Vec p = primitive_ray(v);
    CHECK(vec_eq(primitive_ray(p), p));
    Rational c(den(rng), den(rng));
    CHECK(vec_eq(primitive_ray(Vec(c * v)), p));
    // coprime integer entries
    Int g = 0;
    for (Index i = 0; i < p.size(); ++i) {
      CHECK(p(i).get_den() == 1);
      g = gcd(g, p(i).get_num());
    }
    CHECK(g == 1);
  }
}

TEST_CASE("lex ordering") {
  Vec a = make_vec({1, 2, 3}), b = make_vec({1, 3, 0});
  CHECK(lex_compare(a, b) < 0);
  CHECK(lex_compare(b, a) > 0);
  CHECK(lex_compare(a, a) == 0);
  CHECK(VecLess{}(a, b));
}
