#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subcirc/json_io.hpp"

using namespace subcirc;

TEST_CASE("rational JSON round trip is bit-exact") {
  for (const char* s : {"22/7", "-22/7", "5", "0", "-1/3"}) {
    Rational q = parse_rational(s);
    CHECK(rational_from_json(rational_to_json(q)) == q);
    CHECK(rational_to_json(q).get<std::string>() == s);
  }
  CHECK(rational_from_json(Json(3)) == 3);
  CHECK(rational_from_json(Json(0.25)) == Rational(1, 4));
  CHECK_THROWS_AS(rational_from_json(Json("1.5")), ParseError);
}

TEST_CASE("polyhedron JSON requires exactly one representation on input") {
  Json both;
  both["hrep"] = hrep_to_json(preset_cube(1).hrep());
  both["vrep"] = vrep_to_json(preset_cube(1).vrep());
  CHECK_THROWS_AS(polyhedron_from_json(both), ParseError);
  CHECK_THROWS_AS(polyhedron_from_json(Json::object()), ParseError);

  Json h;
  h["hrep"] = hrep_to_json(preset_cube(2).hrep());
  Polyhedron p = polyhedron_from_json(h);
  CHECK(p.vrep().vertices.size() == 4);

  Json v;
  v["vrep"] = vrep_to_json(preset_orthant(2).vrep());
  Polyhedron q = polyhedron_from_json(v);
  CHECK(q.hrep().ineqs.size() == 2);
}

TEST_CASE("representation round trips through JSON") {
  HRep h = preset_cube(2).hrep();
  HRep h2 = hrep_from_json(hrep_to_json(h));
  CHECK(h2.ineqs.size() == h.ineqs.size());
  for (size_t i = 0; i < h.ineqs.size(); ++i) {
    CHECK(vec_eq(h2.ineqs[i].a, h.ineqs[i].a));
    CHECK(h2.ineqs[i].b == h.ineqs[i].b);
  }
  VRep v = preset_orthant(3).vrep();
  VRep v2 = vrep_from_json(vrep_to_json(v));
  CHECK(v2.vertices.size() == v.vertices.size());
  CHECK(v2.rays.size() == v.rays.size());
}

TEST_CASE("family JSON carries counts, tables, and certificates") {
  SupportSet g = SupportSet::grid(3);
  auto fam = enumerate_circuits_cone(g, preset_orthant(2));
  Json j = family_to_json(fam);
  CHECK(j["count"] == 65);
  CHECK(j["count_by_beta"] == Json::parse("[[8,14,2],[14,21,2],[2,2,0]]"));
  CHECK(j["circuits"].size() == 65);
  const Json& first = j["circuits"][0];
  CHECK(first.contains("beta"));
  CHECK(first.contains("nu"));
  CHECK(first.contains("support"));
  CHECK(first.contains("sigma"));
  CHECK(first.contains("normalized_nu"));
  CHECK(first.contains("certificate"));
}

TEST_CASE("univariate family table is a single row") {
  SupportSet u = SupportSet::univariate({0, 1, 2});
  auto fam = circuits_univariate(u, UnivariateShape::Interval);
  Json t = counts_table(fam);
  CHECK(t.size() == 1);
  CHECK(t[0].size() == 3);
  int total = 0;
  for (const Json& v : t[0]) total += v.get<int>();
  CHECK(total == 7);
}

TEST_CASE("signomial JSON accepts rational strings and floats") {
  Json j;
  j["support"] = Json::parse("[[0],[1]]");
  j["coefficients"] = Json::parse("[\"-1/2\", 1.0]");
  Signomial f = signomial_from_json(j);
  CHECK(f.coefficients(0) == -0.5);
  CHECK(f.coefficients(1) == 1.0);
  Json back = signomial_to_json(f);
  CHECK(back["coefficients"].size() == 2);
}

TEST_CASE("canonical serialization is deterministic") {
  SupportSet g = SupportSet::grid(3);
  auto f1 = enumerate_circuits(g, preset_cube(2), 4);
  auto f2 = enumerate_circuits(g, preset_cube(2), 1);
  CHECK(family_to_json(f1).dump() == family_to_json(f2).dump());
  CHECK(fnv1a_hex(family_to_json(f1).dump()) == fnv1a_hex(family_to_json(f2).dump()));
  CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}
