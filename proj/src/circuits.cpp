#include "subcirc/circuits.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "subcirc/linalg.hpp"
#include "subcirc/simplex.hpp"

namespace subcirc {

namespace {

constexpr const char* kFacetRoute = "facet-of-shifted-polyhedron";
constexpr const char* kConeRoute = "sigma-cone-edge";
constexpr const char* kClosedForm = "closed-form";
constexpr const char* kOrthantRoute = "orthant-support-criterion";

std::vector<Vec> support_points(const SupportSet& a, const std::vector<int>& idx) {
  std::vector<Vec> pts;
  for (int i : idx) pts.push_back(a.point(i));
  return pts;
}

}  // namespace

// ---------------------------------------------------------------------------
// SupportSet
// ---------------------------------------------------------------------------

SupportSet::SupportSet(std::vector<Vec> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error("support set must be non-empty");
  n_ = points_[0].size();
  std::set<Vec, VecLess> seen;
  for (const Vec& p : points_) {
    if (p.size() != n_) throw DimensionError("support points of mixed dimension");
    if (!seen.insert(p).second) throw Error("duplicate support point " + format_vec(p));
  }
  mat_.resize(n_, static_cast<Index>(points_.size()));
  for (size_t j = 0; j < points_.size(); ++j) mat_.col(static_cast<Index>(j)) = points_[j];
}

Vec SupportSet::apply(const Vec& nu) const {
  if (nu.size() != static_cast<Index>(points_.size()))
    throw DimensionError("coefficient vector length differs from |A|");
  return mat_ * nu;
}

int SupportSet::index_of(const Vec& p) const {
  for (size_t i = 0; i < points_.size(); ++i)
    if (vec_eq(points_[i], p)) return static_cast<int>(i);
  return -1;
}

SupportSet SupportSet::grid(int k) {
  std::vector<Vec> pts;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) pts.push_back(make_vec({i, j}));
  return SupportSet(std::move(pts));
}

SupportSet SupportSet::univariate(const std::vector<Rational>& xs) {
  std::vector<Vec> pts;
  for (const Rational& x : xs) pts.push_back(make_vec({x}));
  return SupportSet(std::move(pts));
}

std::optional<std::pair<int, int>> SupportSet::grid_shape() const {
  if (n_ != 2) return std::nullopt;
  std::set<Rational> rows, cols;
  for (const Vec& p : points_) {
    if (p(0).get_den() != 1 || p(1).get_den() != 1) return std::nullopt;
    rows.insert(p(0));
    cols.insert(p(1));
  }
  if (rows.size() * cols.size() != points_.size()) return std::nullopt;
  for (const Rational& r : rows)
    for (const Rational& c : cols)
      if (index_of(make_vec({r, c})) < 0) return std::nullopt;
  return std::make_pair(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
}

int SupportSet::grid_index(int i, int j) const {
  int idx = index_of(make_vec({i, j}));
  if (idx < 0) throw Error("not a grid point");
  return idx;
}

// ---------------------------------------------------------------------------
// Circuit construction
// ---------------------------------------------------------------------------

std::optional<int> nbeta_index(const Vec& nu) {
  Rational sum = 0;
  int negatives = 0, beta = -1;
  for (Index i = 0; i < nu.size(); ++i) {
    sum += nu(i);
    if (nu(i) < 0) {
      ++negatives;
      beta = static_cast<int>(i);
    }
  }
  if (sum != 0 || negatives != 1) return std::nullopt;
  return beta;
}

Circuit make_circuit(const SupportSet& a, const Vec& nu, const Rational& sigma_of_nu,
                     Certificate cert) {
  if (nu.size() != a.size()) throw DimensionError("circuit vector length differs from |A|");
  auto beta = nbeta_index(nu);
  if (!beta) throw NotInNBetaError("vector " + format_vec(nu) + " is not in any N_beta");
  Circuit c;
  c.beta = *beta;
  c.primitive = primitive_ray(nu);
  c.normalized = c.primitive / -c.primitive(c.beta);
  c.sigma = sigma_of_nu / -nu(c.beta);  // sigma scales linearly along the ray
  for (Index i = 0; i < nu.size(); ++i) {
    if (nu(i) != 0) c.support.push_back(static_cast<int>(i));
    if (nu(i) > 0) c.positive_support.push_back(static_cast<int>(i));
  }
  c.certificate = std::move(cert);
  return c;
}

CircuitFamily::CircuitFamily(SupportSet a, std::vector<Circuit> circuits)
    : support_(std::move(a)), circuits_(std::move(circuits)) {
  std::sort(circuits_.begin(), circuits_.end(), [](const Circuit& x, const Circuit& y) {
    if (x.beta != y.beta) return x.beta < y.beta;
    return lex_compare(x.primitive, y.primitive) < 0;
  });
  for (size_t i = 1; i < circuits_.size(); ++i)
    if (vec_eq(circuits_[i].primitive, circuits_[i - 1].primitive))
      throw Error("duplicate circuit in family: " + format_vec(circuits_[i].primitive));
}

std::vector<int> CircuitFamily::counts_by_beta() const {
  std::vector<int> counts(static_cast<size_t>(support_.size()), 0);
  for (const Circuit& c : circuits_) ++counts[static_cast<size_t>(c.beta)];
  return counts;
}

bool CircuitFamily::contains_ray(const Vec& nu) const { return find_ray(nu) != nullptr; }

const Circuit* CircuitFamily::find_ray(const Vec& nu) const {
  if (is_zero(nu)) return nullptr;
  Vec p = primitive_ray(nu);
  for (const Circuit& c : circuits_)
    if (vec_eq(c.primitive, p)) return &c;
  return nullptr;
}

bool same_family(const CircuitFamily& a, const CircuitFamily& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (!vec_eq(a.circuits()[static_cast<size_t>(i)].primitive,
                b.circuits()[static_cast<size_t>(i)].primitive))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration routes
// ---------------------------------------------------------------------------

VRep nbeta_generators(const SupportSet& a, int beta) {
  const Index m = a.size();
  if (beta < 0 || beta >= a.size()) throw Error("beta index out of range");
  VRep v;
  v.dim = m;
  v.vertices.push_back(Vec::Zero(m));
  for (Index al = 0; al < m; ++al) {
    if (al == beta) continue;
    Vec r = Vec::Zero(m);
    r(al) = 1;
    r(beta) = -1;
    v.rays.push_back(r);
  }
  std::sort(v.rays.begin(), v.rays.end(), VecLess{});
  return v;
}

namespace {

// polar(N_beta) = R*1 + cone{-e_alpha : alpha != beta}
VRep nbeta_polar(Index m, int beta) {
  VRep v;
  v.dim = m;
  v.vertices.push_back(Vec::Zero(m));
  for (Index al = 0; al < m; ++al)
    if (al != beta) v.rays.push_back(unit_vec(m, al, -1));
  v.lineality.push_back(Vec::Ones(m));
  return v;
}

std::vector<Circuit> circuits_for_beta(const SupportSet& a, const Polyhedron& x, int beta,
                                       const VRep& x_vrep) {
  const Index m = a.size();
  Mat neg_at = -a.matrix().transpose();  // m x n
  VRep image = linear_image(neg_at, x_vrep);
  VRep pbeta = minkowski_sum(image, nbeta_polar(m, beta));
  FacetEnumeration fe = hrep_from_vrep_certified(pbeta);
  if (!fe.hrep.eqs.empty()) throw Error("shifted polyhedron unexpectedly not full-dimensional");
  std::vector<Circuit> out;
  for (size_t f = 0; f < fe.hrep.ineqs.size(); ++f) {
    const Vec& nu = fe.hrep.ineqs[f].a;
    const Rational& offset = fe.hrep.ineqs[f].b;
    auto b = nbeta_index(nu);
    if (!b || *b != beta) throw Error("facet normal " + format_vec(nu) + " escaped N_beta");
    auto sigma = support_function(x, Vec(-a.apply(nu)));
    if (!sigma || *sigma != offset)
      throw Error("facet offset disagrees with the support function value");
    out.push_back(make_circuit(a, nu, offset, {kFacetRoute, fe.facet_tight[f]}));
  }
  return out;
}

}  // namespace

CircuitFamily enumerate_circuits(const SupportSet& a, const Polyhedron& x, int parallel) {
  const VRep& xv = x.vrep();  // force the conversion once, before any fan-out
  std::vector<Circuit> all;
  if (parallel <= 1 || a.size() == 1) {
    for (int beta = 0; beta < a.size(); ++beta) {
      auto part = circuits_for_beta(a, x, beta, xv);
      all.insert(all.end(), part.begin(), part.end());
    }
  } else {
    std::vector<std::future<std::vector<Circuit>>> tasks;
    for (int beta = 0; beta < a.size(); ++beta)
      tasks.push_back(
          std::async(std::launch::async, [&, beta] { return circuits_for_beta(a, x, beta, xv); }));
    for (auto& t : tasks) {
      auto part = t.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  return CircuitFamily(a, std::move(all));
}

CircuitFamily enumerate_circuits_cone(const SupportSet& a, const Polyhedron& x) {
  const VRep& xv = x.vrep();
  if (!xv.is_cone()) throw NotAConeError("enumerate_circuits_cone: X is not a cone");
  const Index m = a.size();
  std::vector<Circuit> all;
  for (int beta = 0; beta < a.size(); ++beta) {
    std::vector<Vec> arows, erows;
    for (Index al = 0; al < m; ++al)
      if (al != static_cast<Index>(beta)) arows.push_back(unit_vec(m, al));
    for (const Vec& r : xv.rays) arows.push_back(Vec(a.matrix().transpose() * r));
    erows.push_back(Vec::Ones(m));
    for (const Vec& l : xv.lineality) erows.push_back(Vec(a.matrix().transpose() * l));
    Mat am(static_cast<Index>(arows.size()), m), em(static_cast<Index>(erows.size()), m);
    for (size_t i = 0; i < arows.size(); ++i) am.row(static_cast<Index>(i)) = arows[i].transpose();
    for (size_t i = 0; i < erows.size(); ++i) em.row(static_cast<Index>(i)) = erows[i].transpose();
    DdResult dd = double_description(am, em);
    if (!dd.lineality.empty()) throw Error("sigma-cone unexpectedly contains a line");
    for (const DdRay& r : dd.rays) all.push_back(make_circuit(a, r.x, 0, {kConeRoute, r.tight}));
  }
  return CircuitFamily(a, std::move(all));
}

Polyhedron univariate_set(UnivariateShape shape) {
  switch (shape) {
    case UnivariateShape::Line: return preset_rn(1);
    case UnivariateShape::HalfLine: return preset_orthant(1);
    case UnivariateShape::Interval: return preset_cube(1);
  }
  throw Error("unknown univariate shape");
}

CircuitFamily circuits_univariate(const SupportSet& a, UnivariateShape shape) {
  if (a.ambient_dim() != 1)
    throw DimensionError("circuits_univariate: support set is not one-dimensional");
  const int m = a.size();
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
    if (!sigma) throw Error("closed-form circuit has infinite support function value");
    out.push_back(make_circuit(a, nu, *sigma, {kClosedForm, {}}));
  };

  // three-term circuits, common to every shape
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Vec nu = Vec::Zero(m);
        nu(i) = val(k) - val(j);
        nu(j) = -(val(k) - val(i));
        nu(k) = val(j) - val(i);
        emit(nu);
      }
  if (shape == UnivariateShape::HalfLine) {
    for (int j = 0; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Vec nu = Vec::Zero(m);
        nu(k) = 1;
        nu(j) = -1;
        emit(nu);
      }
  }
  if (shape == UnivariateShape::Interval) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        Vec nu = Vec::Zero(m);
        nu(j) = 1;
        nu(i) = -1;
        emit(nu);
      }
  }
  return CircuitFamily(a, std::move(out));
}

CircuitFamily affine_circuits(const SupportSet& a) {
  const Index m = a.size();
  std::vector<Circuit> all;
  for (int beta = 0; beta < a.size(); ++beta) {
    std::vector<Vec> arows, erows;
    for (Index al = 0; al < m; ++al)
      if (al != static_cast<Index>(beta)) arows.push_back(unit_vec(m, al));
    erows.push_back(Vec::Ones(m));
    for (Index r = 0; r < a.ambient_dim(); ++r)
      erows.push_back(Vec(a.matrix().row(r).transpose()));
    Mat am(static_cast<Index>(arows.size()), m), em(static_cast<Index>(erows.size()), m);
    for (size_t i = 0; i < arows.size(); ++i) am.row(static_cast<Index>(i)) = arows[i].transpose();
    for (size_t i = 0; i < erows.size(); ++i) em.row(static_cast<Index>(i)) = erows[i].transpose();
    DdResult dd = double_description(am, em);
    for (const DdRay& r : dd.rays) all.push_back(make_circuit(a, r.x, 0, {kConeRoute, r.tight}));
  }
  return CircuitFamily(a, std::move(all));
}

CircuitFamily circuits_orthant(const SupportSet& a) {
  const Index n = a.ambient_dim();
  const int m = a.size();
  std::map<Vec, Circuit, VecLess> found;

  // two-point circuits: e_alpha - e_beta with alpha >= beta componentwise
  for (int beta = 0; beta < m; ++beta)
    for (int al = 0; al < m; ++al) {
      if (al == beta) continue;
      bool dominates = true;
      for (Index j = 0; j < n; ++j)
        if (a.point(al)(j) < a.point(beta)(j)) {
          dominates = false;
          break;
        }
      if (!dominates) continue;
      Vec nu = Vec::Zero(m);
      nu(al) = 1;
      nu(beta) = -1;
      Circuit c = make_circuit(a, nu, 0, {kOrthantRoute, {}});
      found.emplace(c.primitive, std::move(c));
    }

  // lifted affine circuits of coordinate projections whose complement
  // coordinates of A lambda are strictly positive
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Index> sel;
    for (Index j = 0; j < n; ++j)
      if (mask & (1u << j)) sel.push_back(j);
    std::map<Vec, std::vector<int>, VecLess> fibers;
    for (int i = 0; i < m; ++i) {
      Vec proj(static_cast<Index>(sel.size()));
      for (size_t t = 0; t < sel.size(); ++t) proj(static_cast<Index>(t)) = a.point(i)(sel[t]);
      fibers[proj].push_back(i);
    }
    if (fibers.size() < 3) continue;  // projected affine circuits need >= 3 points
    std::vector<Vec> proj_points;
    std::vector<std::vector<int>> proj_fibers;
    for (auto& [p, f] : fibers) {
      proj_points.push_back(p);
      proj_fibers.push_back(f);
    }
    SupportSet projected(proj_points);
    CircuitFamily base = affine_circuits(projected);
    for (const Circuit& pc : base.circuits()) {
      const std::vector<int>& supp = pc.support;
      std::vector<size_t> choice(supp.size(), 0);
      for (;;) {
        Vec nu = Vec::Zero(m);
        for (size_t t = 0; t < supp.size(); ++t) {
          int orig = proj_fibers[static_cast<size_t>(supp[t])][choice[t]];
          nu(orig) = pc.primitive(supp[t]);
        }
        Vec anu = a.apply(nu);
        bool strict = true;
        for (Index j = 0; j < n; ++j) {
          if (mask & (1u << j)) continue;
          if (anu(j) <= 0) {
            strict = false;
            break;
          }
        }
        if (strict) {
          std::vector<int> cert;
          for (Index j : sel) cert.push_back(static_cast<int>(j));
          Circuit c = make_circuit(a, nu, 0, {kOrthantRoute, cert});
          found.emplace(c.primitive, std::move(c));
        }
        size_t t = 0;
        while (t < supp.size()) {
          if (++choice[t] < proj_fibers[static_cast<size_t>(supp[t])].size()) break;
          choice[t] = 0;
          ++t;
        }
        if (t == supp.size()) break;
      }
    }
  }

  std::vector<Circuit> all;
  for (auto& [p, c] : found) all.push_back(std::move(c));
  return CircuitFamily(a, std::move(all));
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

IsCircuitResult is_circuit(const SupportSet& a, const Polyhedron& x, const Vec& nu) {
  if (nu.size() != a.size()) throw DimensionError("is_circuit: vector length differs from |A|");
  auto beta = nbeta_index(nu);
  if (!beta) return {false, "not in any N_beta (needs zero sum and a single negative entry)", {}};
  auto sigma = support_function(x, Vec(-a.apply(nu)));
  if (!sigma) return {false, "support function value is infinite", {}};
  auto per_beta = circuits_for_beta(a, x, *beta, x.vrep());
  Vec p = primitive_ray(nu);
  for (const Circuit& c : per_beta)
    if (vec_eq(c.primitive, p)) return {true, "", c.certificate};
  return {false, "not an outer facet normal of the shifted polyhedron", {}};
}

NecessaryCheck check_support_necessary(const SupportSet& a, const Polyhedron& x,
                                       const Circuit& lambda) {
  (void)x;  // the criterion itself only involves the supports
  std::vector<Vec> supp_pts = support_points(a, lambda.support);
  for (int al : lambda.positive_support) {
    if (in_relint_hull(a.point(al), supp_pts))
      return {false,
              "positive support point " + format_vec(a.point(al)) + " lies in relint conv(supp)"};
  }
  std::vector<Vec> pos_pts = support_points(a, lambda.positive_support);
  if (in_convex_hull(a.point(lambda.beta), pos_pts) && !is_zero(a.apply(lambda.normalized)))
    return {false, "beta lies in conv(positive support) but A lambda != 0"};
  return {true, ""};
}

SufficientCheck check_edge_case_sufficient(const SupportSet& a, const Polyhedron& x,
                                           const Vec& normalized_lambda) {
  auto beta = nbeta_index(normalized_lambda);
  if (!beta) throw NotInNBetaError("check_edge_case_sufficient: not in any N_beta");
  if (normalized_lambda(*beta) != -1)
    throw Error("check_edge_case_sufficient: lambda must be normalized");

  std::vector<int> pos;
  for (Index i = 0; i < normalized_lambda.size(); ++i)
    if (normalized_lambda(i) > 0) pos.push_back(static_cast<int>(i));
  std::vector<Vec> pos_pts = support_points(a, pos);

  // beta in conv(lambda+) - rec(X)*, decided by one exact conic feasibility
  const VRep rec = recession_cone(x);
  lp::Problem prob;
  std::vector<int> th;
  for (size_t i = 0; i < pos_pts.size(); ++i) th.push_back(prob.add_var(true));
  std::vector<int> cv;
  for (Index j = 0; j < a.ambient_dim(); ++j) cv.push_back(prob.add_var(false));
  for (Index row = 0; row < a.ambient_dim(); ++row) {
    std::vector<std::pair<int, Rational>> terms;
    for (size_t i = 0; i < pos_pts.size(); ++i) terms.push_back({th[i], pos_pts[i](row)});
    terms.push_back({cv[static_cast<size_t>(row)], -1});
    prob.add_constraint(terms, lp::Rel::Eq, a.point(*beta)(row));
  }
  std::vector<std::pair<int, Rational>> ones;
  for (int v : th) ones.push_back({v, 1});
  prob.add_constraint(ones, lp::Rel::Eq, 1);
  for (const Vec& r : rec.rays) {
    std::vector<std::pair<int, Rational>> terms;
    for (Index j = 0; j < a.ambient_dim(); ++j) terms.push_back({cv[static_cast<size_t>(j)], r(j)});
    prob.add_constraint(terms, lp::Rel::Ge, 0);
  }
  for (const Vec& l : rec.lineality) {
    std::vector<std::pair<int, Rational>> terms;
    for (Index j = 0; j < a.ambient_dim(); ++j) terms.push_back({cv[static_cast<size_t>(j)], l(j)});
    prob.add_constraint(terms, lp::Rel::Eq, 0);
  }
  if (prob.solve().status != lp::Status::Optimal)
    return {SufficientVerdict::NotApplicable, 0, "beta outside conv(lambda+) - rec(X)*"};

  if (pos_pts.size() > 1) {
    Mat diffs(static_cast<Index>(pos_pts.size()) - 1, a.ambient_dim());
    for (size_t i = 1; i < pos_pts.size(); ++i)
      diffs.row(static_cast<Index>(i - 1)) = (pos_pts[i] - pos_pts[0]).transpose();
    if (rank(diffs) != static_cast<Index>(pos_pts.size()) - 1)
      return {SufficientVerdict::NotApplicable, 0, "lambda+ affinely dependent"};
  }

  int support_size = static_cast<int>(pos.size()) + 1;
  if (support_size == 2) return {SufficientVerdict::CertifiedCircuit, 1, "two-point support"};
  if (x.is_full_dim() && in_convex_hull(a.point(*beta), pos_pts) &&
      is_zero(a.apply(normalized_lambda)))
    return {SufficientVerdict::CertifiedCircuit, 2, "full-dimensional X, barycentric lambda"};
  return {SufficientVerdict::NotApplicable, 0, "no case applies"};
}

ExclusionVerdict check_cube_exclusion(const SupportSet& a, const Circuit& lambda) {
  if (lambda.support.size() < 3) return ExclusionVerdict::Inconclusive;
  const Vec& beta = a.point(lambda.beta);
  for (Index j = 0; j < a.ambient_dim(); ++j) {
    bool all_le = true, all_ge = true;
    for (int al : lambda.positive_support) {
      if (a.point(al)(j) > beta(j)) all_le = false;
      if (a.point(al)(j) < beta(j)) all_ge = false;
    }
    if (!all_le && !all_ge) return ExclusionVerdict::Inconclusive;
  }
  return ExclusionVerdict::Excluded;
}

GeneralExclusion check_cube_exclusion_general(const SupportSet& a, const Circuit& lambda) {
  GeneralExclusion out;
  if (lambda.support.size() < 3) return out;
  const Vec& beta = a.point(lambda.beta);
  Vec alambda = a.apply(lambda.normalized);
  std::vector<bool> in_j(static_cast<size_t>(a.ambient_dim()), false);
  for (Index j = 0; j < a.ambient_dim(); ++j)
    if (beta(j) == alambda(j)) {
      in_j[static_cast<size_t>(j)] = true;
      out.j_set.push_back(static_cast<int>(j));
    }

  auto agrees_outside_j = [&](int al) {
    for (Index j = 0; j < a.ambient_dim(); ++j)
      if (!in_j[static_cast<size_t>(j)] && a.point(al)(j) != beta(j)) return false;
    return true;
  };
  auto agrees_on_j = [&](int al) {
    for (int j : out.j_set)
      if (a.point(al)(j) != beta(j)) return false;
    return true;
  };

  // beta satisfies both membership conditions; assigning it to the first
  // class makes the empty-J case coincide with the one-sided test above
  std::vector<int> a2;
  for (int al : lambda.support) {
    bool first = agrees_outside_j(al);
    bool second = agrees_on_j(al);
    if (!first && !second) return out;  // not a disjoint decomposition
    if (first && second && al != lambda.beta) return out;
    if (!first && second) a2.push_back(al);
  }
  if (a2.empty()) return out;

  for (Index j = 0; j < a.ambient_dim(); ++j) {
    if (in_j[static_cast<size_t>(j)]) continue;
    bool all_le = true, all_ge = true;
    for (int al : a2) {
      if (a.point(al)(j) > beta(j)) all_le = false;
      if (a.point(al)(j) < beta(j)) all_ge = false;
    }
    if (!all_le && !all_ge) return out;
  }
  out.verdict = ExclusionVerdict::Excluded;
  return out;
}

SliceCheck cone_zero_slice_check(const SupportSet& a, const Polyhedron& x) {
  if (!x.is_cone() || !x.is_full_dim())
    throw NotAConeError("cone_zero_slice_check: X must be a full-dimensional cone");
  CircuitFamily xfam = enumerate_circuits_cone(a, x);
  CircuitFamily affine = affine_circuits(a);
  std::set<Vec, VecLess> slice;
  for (const Circuit& c : xfam.circuits())
    if (is_zero(a.apply(c.primitive))) slice.insert(c.primitive);
  std::set<Vec, VecLess> rn;
  for (const Circuit& c : affine.circuits()) rn.insert(c.primitive);
  for (const Vec& v : slice)
    if (!rn.count(v)) return {false, v};
  for (const Vec& v : rn)
    if (!slice.count(v)) return {false, v};
  return {true, std::nullopt};
}

}  // namespace subcirc
