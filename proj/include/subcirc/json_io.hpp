#pragma once

#include <json.hpp>

#include "subcirc/reduction.hpp"
#include "subcirc/sage.hpp"

namespace subcirc {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json hrep_to_json(const HRep& h);
HRep hrep_from_json(const Json& j);
Json vrep_to_json(const VRep& v);
VRep vrep_from_json(const Json& j);

// {"hrep": ...} and/or {"vrep": ...}; input requires exactly one of them.
Json polyhedron_to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const Json& j);

Json circuit_to_json(const Circuit& c);
// count_by_beta is emitted as the paper-style grid table when the support is
// a full integer grid, and as a single row otherwise.
Json family_to_json(const CircuitFamily& f);
Json counts_table(const CircuitFamily& f);

Json signomial_to_json(const Signomial& f);
Signomial signomial_from_json(const Json& j);

Json membership_to_json(const MembershipResult& r);

Json support_points_to_json(const SupportSet& a);
SupportSet support_from_json(const Json& j);

// FNV-1a over the canonical serialization; the determinism checksum.
std::string fnv1a_hex(const std::string& data);

}  // namespace subcirc
