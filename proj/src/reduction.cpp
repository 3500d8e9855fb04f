#include "subcirc/reduction.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "subcirc/linalg.hpp"
#include "subcirc/simplex.hpp"

namespace subcirc {

namespace {

Vec extend(const Vec& nu, const Rational& sigma) {
  Vec out(nu.size() + 1);
  out.head(nu.size()) = nu;
  out(nu.size()) = sigma;
  return out;
}

}  // namespace

CircuitGraph build_circuit_graph(const SupportSet& a, const Polyhedron& x,
                                 const CircuitFamily& family) {
  // Independence of x -> exp(alpha^T x) on X is required for the graph to be
  // pointed; pairwise-distinct projections of A onto the direction space of
  // aff(X) are the exact criterion used here. Two points project equally iff
  // their difference is orthogonal to every direction of X.
  const VRep& xv = x.vrep();
  std::vector<Vec> dirs = xv.lineality;
  for (const Vec& r : xv.rays) dirs.push_back(r);
  for (size_t i = 1; i < xv.vertices.size(); ++i)
    dirs.push_back(Vec(xv.vertices[i] - xv.vertices[0]));
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j) {
      Vec d = a.point(i) - a.point(j);
      bool orthogonal = true;
      for (const Vec& dir : dirs)
        if (d.dot(dir) != 0) {
          orthogonal = false;
          break;
        }
      if (orthogonal)
        throw DependentExponentialsError("support points " + format_vec(a.point(i)) + " and " +
                                         format_vec(a.point(j)) +
                                         " have equal projections onto the directions of X");
    }

  std::vector<ExtendedCircuit> gens;
  for (const Circuit& c : family.circuits())
    gens.push_back({c, extend(c.normalized, c.sigma)});
  Vec dist = unit_vec(a.size() + 1, a.size());

  std::vector<Vec> rays;
  for (const ExtendedCircuit& g : gens) rays.push_back(g.extended);
  rays.push_back(dist);

  // Pointedness by Gordan's theorem: no nontrivial nonnegative combination of
  // the generators vanishes iff a strictly separating functional exists.
  const Index d = a.size() + 1;
  {
    lp::Problem prob;
    std::vector<int> mu;
    for (size_t i = 0; i < rays.size(); ++i) mu.push_back(prob.add_var(true));
    for (Index row = 0; row < d; ++row) {
      std::vector<std::pair<int, Rational>> terms;
      for (size_t i = 0; i < rays.size(); ++i) terms.push_back({mu[i], rays[i](row)});
      prob.add_constraint(terms, lp::Rel::Eq, 0);
    }
    std::vector<std::pair<int, Rational>> ones;
    for (int v : mu) ones.push_back({v, 1});
    prob.add_constraint(ones, lp::Rel::Eq, 1);
    if (prob.solve().status == lp::Status::Optimal)
      throw NotPointedError("circuit graph contains a line; this contradicts the pointedness of "
                            "the extended-form cone and indicates a defect");
  }

  // The functional itself, by a restricted master with violation augmentation:
  // maximize the worst margin over a working subset, then add violated rows.
  Vec cert;
  {
    std::vector<size_t> working;
    for (size_t i = 0; i < rays.size() && i < 2 * static_cast<size_t>(d); ++i) working.push_back(i);
    for (;;) {
      lp::Problem prob;
      std::vector<int> cv;
      for (Index j = 0; j < d; ++j) cv.push_back(prob.add_var(false));
      int t = prob.add_var(false);
      for (size_t i : working) {
        std::vector<std::pair<int, Rational>> terms;
        for (Index j = 0; j < d; ++j) terms.push_back({cv[static_cast<size_t>(j)], rays[i](j)});
        terms.push_back({t, -1});
        prob.add_constraint(terms, lp::Rel::Ge, 0);
      }
      for (Index j = 0; j < d; ++j) {
        prob.add_constraint({{cv[static_cast<size_t>(j)], 1}}, lp::Rel::Le, 1);
        prob.add_constraint({{cv[static_cast<size_t>(j)], 1}}, lp::Rel::Ge, -1);
      }
      prob.set_objective({{t, 1}});
      lp::Result res = prob.solve();
      if (res.status != lp::Status::Optimal || res.objective <= 0)
        throw NotPointedError("no strictly separating functional for the circuit graph");
      Vec c(d);
      for (Index j = 0; j < d; ++j) c(j) = res.x(j);
      bool violated = false;
      for (size_t i = 0; i < rays.size(); ++i) {
        if (c.dot(rays[i]) <= 0) {
          working.push_back(i);
          violated = true;
        }
      }
      if (!violated) {
        cert = std::move(c);
        break;
      }
    }
  }
  return CircuitGraph(family.support(), std::move(gens), std::move(dist), std::move(cert));
}

namespace {

// One H-representation of the graph cone, then a tight-rank certificate per
// generator. Exact, but facet counts explode on large graphs.
std::vector<Circuit> reduced_by_facets(const CircuitGraph& g) {
  VRep cone;
  cone.dim = g.support.size() + 1;
  cone.vertices.push_back(Vec::Zero(cone.dim));
  std::set<Vec, VecLess> uniq;
  for (const ExtendedCircuit& e : g.generators) uniq.insert(primitive_ray(e.extended));
  uniq.insert(g.distinguished);
  cone.rays.assign(uniq.begin(), uniq.end());

  FacetEnumeration fe = hrep_from_vrep_certified(cone);
  std::vector<Circuit> out;
  for (const ExtendedCircuit& e : g.generators) {
    Vec gvec = primitive_ray(e.extended);
    std::vector<Vec> tight;
    for (const HalfSpace& q : fe.hrep.ineqs)
      if (q.a.dot(gvec) == q.b) tight.push_back(q.a);
    for (const HalfSpace& q : fe.hrep.eqs) tight.push_back(q.a);
    Mat m(static_cast<Index>(tight.size()), cone.dim);
    for (size_t i = 0; i < tight.size(); ++i) m.row(static_cast<Index>(i)) = tight[i].transpose();
    if (rank(m) == cone.dim - 1) out.push_back(e.circuit);  // pointedness verified earlier
  }
  return out;
}

// Membership LP per generator: extreme iff not a nonnegative combination of
// the other generators. The hull and witness filters certify most non-reduced
// circuits first, so only survivors pay for the large LP.
std::vector<Circuit> reduced_by_membership(const CircuitGraph& g) {
  std::vector<Circuit> cs;
  for (const ExtendedCircuit& e : g.generators) cs.push_back(e.circuit);
  CircuitFamily family(g.support, std::move(cs));
  auto hull = filter_convex_hull(g.support, family);
  auto witness = filter_nonreduced_combinatorial(g.support, family);

  std::vector<Vec> rays;
  for (const Circuit& c : family.circuits()) {
    Vec ext(c.normalized.size() + 1);
    ext.head(c.normalized.size()) = c.normalized;
    ext(c.normalized.size()) = c.sigma;
    rays.push_back(primitive_ray(ext));
  }
  rays.push_back(g.distinguished);

  std::vector<size_t> survivors;
  for (size_t i = 0; i < static_cast<size_t>(family.size()); ++i)
    if (!hull[i] && !witness[i]) survivors.push_back(i);
  std::vector<char> extreme(survivors.size(), 0);
  std::vector<std::future<void>> tasks;
  const size_t shards = std::max<size_t>(1, std::thread::hardware_concurrency());
  for (size_t s = 0; s < shards; ++s) {
    tasks.push_back(std::async(std::launch::async, [&, s] {
      for (size_t k = s; k < survivors.size(); k += shards) {
        size_t i = survivors[k];
        std::vector<Vec> others;
        for (size_t j = 0; j < rays.size(); ++j)
          if (j != i) others.push_back(rays[j]);
        if (!in_generated(rays[i], {}, others, {})) extreme[k] = 1;
      }
    }));
  }
  for (auto& t : tasks) t.get();
  std::vector<Circuit> out;
  for (size_t k = 0; k < survivors.size(); ++k)
    if (extreme[k]) out.push_back(family.circuits()[survivors[k]]);
  return out;
}

}  // namespace

CircuitFamily reduced_circuits(const CircuitGraph& g) {
  constexpr size_t kFacetRouteLimit = 300;
  std::vector<Circuit> out = g.generators.size() <= kFacetRouteLimit ? reduced_by_facets(g)
                                                                     : reduced_by_membership(g);
  return CircuitFamily(g.support, std::move(out));
}

std::vector<std::optional<NonreducedWitness>> filter_nonreduced_combinatorial(
    const SupportSet& a, const CircuitFamily& family) {
  std::vector<std::optional<NonreducedWitness>> out;
  for (const Circuit& lambda : family.circuits()) {
    std::optional<NonreducedWitness> witness;
    Vec alambda = a.apply(lambda.normalized);
    std::set<int> supp(lambda.support.begin(), lambda.support.end());
    for (int beta_prime = 0; beta_prime < a.size() && !witness; ++beta_prime) {
      if (supp.count(beta_prime)) continue;
      // lambda' in N_{beta'} normalized, (lambda')^+ inside supp(lambda),
      // A lambda' = gamma A lambda with gamma >= 0 a free unknown
      lp::Problem prob;
      std::vector<int> th;  // lambda'_alpha over supp(lambda)
      for (size_t i = 0; i < lambda.support.size(); ++i) th.push_back(prob.add_var(true));
      int gv = prob.add_var(true);
      for (Index row = 0; row < a.ambient_dim(); ++row) {
        std::vector<std::pair<int, Rational>> terms;
        for (size_t i = 0; i < lambda.support.size(); ++i)
          terms.push_back({th[i], a.point(lambda.support[i])(row)});
        terms.push_back({gv, -alambda(row)});
        prob.add_constraint(terms, lp::Rel::Eq, a.point(beta_prime)(row));
      }
      std::vector<std::pair<int, Rational>> ones;
      for (int t : th) ones.push_back({t, 1});
      prob.add_constraint(ones, lp::Rel::Eq, 1);
      auto res = prob.solve();
      if (res.status != lp::Status::Optimal) continue;
      NonreducedWitness w;
      w.beta_prime = beta_prime;
      w.gamma = res.x(static_cast<Index>(lambda.support.size()));
      w.lambda_prime = Vec::Zero(a.size());
      for (size_t i = 0; i < lambda.support.size(); ++i)
        w.lambda_prime(lambda.support[i]) = res.x(static_cast<Index>(i));
      w.lambda_prime(beta_prime) = -1;
      witness = std::move(w);
    }
    out.push_back(std::move(witness));
  }
  return out;
}

std::vector<std::optional<int>> filter_convex_hull(const SupportSet& a,
                                                   const CircuitFamily& family) {
  std::vector<std::optional<int>> out;
  for (const Circuit& lambda : family.circuits()) {
    std::optional<int> flag;
    std::vector<Vec> supp_pts;
    for (int s : lambda.support) supp_pts.push_back(a.point(s));
    std::set<int> supp(lambda.support.begin(), lambda.support.end());
    for (int p = 0; p < a.size() && !flag; ++p) {
      if (supp.count(p)) continue;
      if (in_convex_hull(a.point(p), supp_pts)) flag = p;
    }
    out.push_back(flag);
  }
  return out;
}

CircuitFamily reduced_affine_circuits(const SupportSet& a) {
  CircuitFamily all = affine_circuits(a);
  std::vector<Circuit> keep;
  auto hull_flags = filter_convex_hull(a, all);
  for (size_t i = 0; i < hull_flags.size(); ++i)
    if (!hull_flags[i]) keep.push_back(all.circuits()[i]);
  return CircuitFamily(a, std::move(keep));
}

CircuitFamily reduced_univariate(const SupportSet& a, UnivariateShape shape) {
  if (a.ambient_dim() != 1)
    throw DimensionError("reduced_univariate: support set is not one-dimensional");
  const int m = a.size();
  if (shape == UnivariateShape::Interval && m < 3)
    throw Error("reduced_univariate: the interval closed form needs at least three points");
  Polyhedron x = univariate_set(shape);
  std::vector<int> order(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a.point(i)(0) < a.point(j)(0); });
  auto val = [&](int s) { return a.point(order[static_cast<size_t>(s)])(0); };

  std::vector<Circuit> out;
  auto emit = [&](const Vec& nu_sorted) {
    Vec nu = Vec::Zero(m);
    for (int s = 0; s < m; ++s) nu(order[static_cast<size_t>(s)]) = nu_sorted(s);
    auto sigma = support_function(x, Vec(-a.apply(nu)));
    out.push_back(make_circuit(a, nu, *sigma, {"reduced-closed-form", {}}));
  };

  // consecutive-triple circuits, present in every shape with m >= 3
  for (int i = 1; i + 1 < m; ++i) {
    Vec nu = Vec::Zero(m);
    nu(i - 1) = val(i + 1) - val(i);
    nu(i) = -(val(i + 1) - val(i - 1));
    nu(i + 1) = val(i) - val(i - 1);
    emit(nu);
  }
  if (shape == UnivariateShape::HalfLine || shape == UnivariateShape::Interval) {
    if (m >= 2) {
      Vec nu = Vec::Zero(m);
      nu(1) = 1;
      nu(0) = -1;
      emit(nu);
    }
  }
  if (shape == UnivariateShape::Interval) {
    Vec nu = Vec::Zero(m);
    nu(m - 2) = 1;
    nu(m - 1) = -1;
    emit(nu);
  }
  return CircuitFamily(a, std::move(out));
}

SliceCheck reduced_cone_zero_slice_check(const SupportSet& a, const Polyhedron& x) {
  if (!x.is_cone() || !x.is_full_dim())
    throw NotAConeError("reduced_cone_zero_slice_check: X must be a full-dimensional cone");
  CircuitFamily fam = enumerate_circuits_cone(a, x);
  CircuitFamily red = reduced_circuits(build_circuit_graph(a, x, fam));
  CircuitFamily affred = reduced_affine_circuits(a);
  std::set<Vec, VecLess> slice, rn;
  for (const Circuit& c : red.circuits())
    if (is_zero(a.apply(c.primitive))) slice.insert(c.primitive);
  for (const Circuit& c : affred.circuits()) rn.insert(c.primitive);
  for (const Vec& v : slice)
    if (!rn.count(v)) return {false, v};
  for (const Vec& v : rn)
    if (!slice.count(v)) return {false, v};
  return {true, std::nullopt};
}

}  // namespace subcirc
