#pragma once

#include <optional>

#include "subcirc/circuits.hpp"

namespace subcirc {

class DependentExponentialsError : public Error {
 public:
  explicit DependentExponentialsError(const std::string& what) : Error(what) {}
};

class NotPointedError : public Error {
 public:
  explicit NotPointedError(const std::string& what) : Error(what) {}
};

struct ExtendedCircuit {
  Circuit circuit;
  Vec extended;  // (normalized nu, sigma), length |A| + 1
};

// cone(extended normalized circuits, (0,1)); carrier of reducedness
struct CircuitGraph {
  SupportSet support;
  std::vector<ExtendedCircuit> generators;
  Vec distinguished;  // (0,...,0,1)
  Vec positivity_certificate;  // strictly positive on every generator

  CircuitGraph(SupportSet a, std::vector<ExtendedCircuit> gens, Vec dist, Vec cert)
      : support(std::move(a)),
        generators(std::move(gens)),
        distinguished(std::move(dist)),
        positivity_certificate(std::move(cert)) {}
};

// Throws DependentExponentialsError when two support points project equally
// onto the direction space of aff(X); NotPointedError on an internal defect.
CircuitGraph build_circuit_graph(const SupportSet& a, const Polyhedron& x,
                                 const CircuitFamily& family);

CircuitFamily reduced_circuits(const CircuitGraph& g);

struct NonreducedWitness {
  int beta_prime = -1;
  Vec lambda_prime;  // normalized, negative entry at beta_prime
  Rational gamma;
};
// One entry per circuit of the family: a witness when certified non-reduced,
// nullopt when the combinatorial search is inconclusive.
std::vector<std::optional<NonreducedWitness>> filter_nonreduced_combinatorial(
    const SupportSet& a, const CircuitFamily& family);

// Flags circuits with a support-set point inside conv(supp lambda) but outside
// supp lambda; the witness is that point's index.
std::vector<std::optional<int>> filter_convex_hull(const SupportSet& a,
                                                   const CircuitFamily& family);

CircuitFamily reduced_affine_circuits(const SupportSet& a);

CircuitFamily reduced_univariate(const SupportSet& a, UnivariateShape shape);

SliceCheck reduced_cone_zero_slice_check(const SupportSet& a, const Polyhedron& x);

}  // namespace subcirc
