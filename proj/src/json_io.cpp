#include "subcirc/json_io.hpp"

#include <map>
#include <set>

namespace subcirc {

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  throw ParseError("expected a rational literal, got " + j.dump());
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  Vec v(static_cast<Index>(j.size()));
  Index i = 0;
  for (const Json& e : j) v(i++) = rational_from_json(e);
  return v;
}

Json hrep_to_json(const HRep& h) {
  Json out;
  Json ineqs = Json::array();
  for (const HalfSpace& q : h.ineqs)
    ineqs.push_back(Json{{"a", vec_to_json(q.a)}, {"b", rational_to_json(q.b)}});
  Json eqs = Json::array();
  for (const HalfSpace& q : h.eqs)
    eqs.push_back(Json{{"a", vec_to_json(q.a)}, {"b", rational_to_json(q.b)}});
  out["ineqs"] = std::move(ineqs);
  out["eqs"] = std::move(eqs);
  out["dim"] = h.dim;
  return out;
}

HRep hrep_from_json(const Json& j) {
  HRep h;
  Index dim = -1;
  auto read_rows = [&](const char* key, std::vector<HalfSpace>& target) {
    if (!j.contains(key)) return;
    for (const Json& row : j.at(key)) {
      HalfSpace q{vec_from_json(row.at("a")), rational_from_json(row.at("b"))};
      if (dim < 0) dim = q.a.size();
      if (q.a.size() != dim) throw ParseError("inconsistent half-space dimensions");
      target.push_back(std::move(q));
    }
  };
  read_rows("ineqs", h.ineqs);
  read_rows("eqs", h.eqs);
  if (j.contains("dim")) dim = j.at("dim").get<Index>();
  if (dim < 0) throw ParseError("H-representation without a derivable dimension");
  h.dim = dim;
  return h;
}

Json vrep_to_json(const VRep& v) {
  Json out;
  Json verts = Json::array(), rays = Json::array(), lin = Json::array();
  for (const Vec& p : v.vertices) verts.push_back(vec_to_json(p));
  for (const Vec& r : v.rays) rays.push_back(vec_to_json(r));
  for (const Vec& l : v.lineality) lin.push_back(vec_to_json(l));
  out["vertices"] = std::move(verts);
  out["rays"] = std::move(rays);
  out["lineality"] = std::move(lin);
  out["dim"] = v.dim;
  return out;
}

VRep vrep_from_json(const Json& j) {
  VRep v;
  Index dim = -1;
  auto read = [&](const char* key, std::vector<Vec>& target) {
    if (!j.contains(key)) return;
    for (const Json& e : j.at(key)) {
      Vec p = vec_from_json(e);
      if (dim < 0) dim = p.size();
      if (p.size() != dim) throw ParseError("inconsistent generator dimensions");
      target.push_back(std::move(p));
    }
  };
  read("vertices", v.vertices);
  read("rays", v.rays);
  read("lineality", v.lineality);
  if (j.contains("dim")) dim = j.at("dim").get<Index>();
  if (dim < 0) throw ParseError("V-representation without a derivable dimension");
  v.dim = dim;
  return v;
}

Json polyhedron_to_json(const Polyhedron& p) {
  Json out;
  if (p.has_hrep()) out["hrep"] = hrep_to_json(p.hrep());
  if (p.has_vrep()) out["vrep"] = vrep_to_json(p.vrep());
  return out;
}

Polyhedron polyhedron_from_json(const Json& j) {
  const bool has_h = j.contains("hrep"), has_v = j.contains("vrep");
  if (has_h == has_v)
    throw ParseError("polyhedron input needs exactly one of \"hrep\" or \"vrep\"");
  if (has_h) return Polyhedron::from_hrep(hrep_from_json(j.at("hrep")));
  return Polyhedron::from_vrep(vrep_from_json(j.at("vrep")));
}

Json circuit_to_json(const Circuit& c) {
  Json out;
  out["beta"] = c.beta;
  out["nu"] = vec_to_json(c.primitive);
  out["support"] = c.support;
  out["sigma"] = rational_to_json(c.sigma);
  out["normalized_nu"] = vec_to_json(c.normalized);
  out["certificate"] = Json{{"kind", c.certificate.kind}, {"tight", c.certificate.tight}};
  return out;
}

Json counts_table(const CircuitFamily& f) {
  std::vector<int> counts = f.counts_by_beta();
  const SupportSet& a = f.support();
  Json table = Json::array();
  if (auto shape = a.grid_shape()) {
    std::set<Rational> rows, cols;
    for (const Vec& p : a.points()) {
      rows.insert(p(0));
      cols.insert(p(1));
    }
    for (const Rational& r : rows) {
      Json row = Json::array();
      for (const Rational& c : cols) {
        int idx = a.index_of(make_vec({r, c}));
        row.push_back(counts[static_cast<size_t>(idx)]);
      }
      table.push_back(std::move(row));
    }
  } else {
    table.push_back(counts);
  }
  return table;
}

Json family_to_json(const CircuitFamily& f) {
  Json out;
  out["support"] = support_points_to_json(f.support());
  out["count"] = f.size();
  out["count_by_beta"] = counts_table(f);
  Json circuits = Json::array();
  for (const Circuit& c : f.circuits()) circuits.push_back(circuit_to_json(c));
  out["circuits"] = std::move(circuits);
  return out;
}

Json signomial_to_json(const Signomial& f) {
  Json out;
  out["support"] = support_points_to_json(f.support);
  Json coeffs = Json::array();
  for (Eigen::Index i = 0; i < f.coefficients.size(); ++i) coeffs.push_back(f.coefficients(i));
  out["coefficients"] = std::move(coeffs);
  return out;
}

Signomial signomial_from_json(const Json& j) {
  SupportSet a = support_from_json(j.at("support"));
  const Json& cj = j.at("coefficients");
  Eigen::VectorXd c(static_cast<Eigen::Index>(cj.size()));
  Eigen::Index i = 0;
  for (const Json& e : cj) {
    if (e.is_string())
      c(i++) = parse_rational(e.get<std::string>()).get_d();
    else
      c(i++) = e.get<double>();
  }
  return Signomial(std::move(a), std::move(c));
}

Json membership_to_json(const MembershipResult& r) {
  Json out;
  switch (r.status) {
    case Membership::Member: out["status"] = "member"; break;
    case Membership::Boundary: out["status"] = "boundary"; break;
    case Membership::NonMember: out["status"] = "non-member"; break;
  }
  out["margin"] = r.margin;
  return out;
}

Json support_points_to_json(const SupportSet& a) {
  Json out = Json::array();
  for (const Vec& p : a.points()) out.push_back(vec_to_json(p));
  return out;
}

SupportSet support_from_json(const Json& j) {
  const Json& pts = j.is_object() && j.contains("points") ? j.at("points") : j;
  if (!pts.is_array() || pts.empty()) throw ParseError("support must be a non-empty array");
  std::vector<Vec> points;
  for (const Json& e : pts) points.push_back(vec_from_json(e));
  return SupportSet(std::move(points));
}

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace subcirc
