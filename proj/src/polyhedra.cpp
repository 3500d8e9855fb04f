#include "subcirc/polyhedra.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

#include "subcirc/linalg.hpp"
#include "subcirc/simplex.hpp"

namespace subcirc {

namespace {

Vec concat(const Vec& head, const Rational& tail) {
  Vec out(head.size() + 1);
  out.head(head.size()) = head;
  out(head.size()) = tail;
  return out;
}

Mat stack_rows(const std::vector<Vec>& rows, Index cols) {
  Mat m(static_cast<Index>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return m;
}

std::vector<Vec> sorted_unique(std::vector<Vec> vs) {
  std::sort(vs.begin(), vs.end(), VecLess{});
  vs.erase(std::unique(vs.begin(), vs.end(), vec_eq), vs.end());
  return vs;
}

}  // namespace

bool VRep::is_cone() const {
  for (const Vec& v : vertices)
    if (!subcirc::is_zero(v)) return false;
  return true;
}

HalfSpace canonical_ineq(const HalfSpace& h) {
  Vec joint = concat(h.a, h.b);
  joint = primitive_ray(joint);  // positive scaling keeps the inequality
  return {joint.head(h.a.size()), joint(h.a.size())};
}

HalfSpace canonical_eq(const HalfSpace& h) {
  Vec joint = concat(h.a, h.b);
  joint = primitive_ray(joint);
  for (Index i = 0; i < joint.size(); ++i) {
    if (joint(i) == 0) continue;
    if (joint(i) < 0) joint = -joint;
    break;
  }
  return {joint.head(h.a.size()), joint(h.a.size())};
}

// ---------------------------------------------------------------------------
// Double description for {x : Ax >= 0, Ex = 0}.
//
// The lineality space (kernel of the full system) is split off first and the
// pointed part is processed in quotient coordinates; adjacency of rays uses
// the algebraic rank criterion, which stays correct on degenerate cones.
// Constraints are inserted in ascending lexicographic order of their
// canonical normals, so the output is deterministic.
// ---------------------------------------------------------------------------
DdResult double_description(const Mat& A, const Mat& E) {
  const Index d = A.cols() > 0 ? A.cols() : E.cols();
  DdResult out;

  // Coordinates for the subspace {Ex = 0}.
  std::vector<Vec> b0 = E.rows() > 0 ? kernel_basis(E) : std::vector<Vec>();
  if (E.rows() == 0)
    for (Index j = 0; j < d; ++j) b0.push_back(unit_vec(d, j));
  if (b0.empty()) return out;
  const Index s = static_cast<Index>(b0.size());
  Mat b0m(d, s);
  for (Index j = 0; j < s; ++j) b0m.col(j) = b0[static_cast<size_t>(j)];

  Mat a1 = A.rows() > 0 ? Mat(A * b0m) : Mat(0, s);

  std::vector<Vec> l1 = kernel_basis(a1);
  for (const Vec& l : l1) out.lineality.push_back(primitive_ray(Vec(b0m * l)));
  if (static_cast<Index>(l1.size()) == s) return out;  // the cone is a subspace

  std::vector<Vec> c1 = complete_to_basis(l1, s);
  const Index q = static_cast<Index>(c1.size());
  Mat c1m(s, q);
  for (Index j = 0; j < q; ++j) c1m.col(j) = c1[static_cast<size_t>(j)];

  // Canonical constraint rows in quotient coordinates.
  Mat a2 = a1 * c1m;
  std::vector<Vec> rows;
  for (Index i = 0; i < a2.rows(); ++i) {
    Vec r = a2.row(i).transpose();
    if (is_zero(r)) continue;
    rows.push_back(primitive_ray(r));
  }
  rows = sorted_unique(rows);

  // Initial simplicial cone from the first maximal independent row set.
  std::vector<Vec> proc;
  Mat basis_rows(0, q);
  for (const Vec& r : rows) {
    if (static_cast<Index>(proc.size()) == q) break;
    Mat trial(basis_rows.rows() + 1, q);
    trial.topRows(basis_rows.rows()) = basis_rows;
    trial.row(basis_rows.rows()) = r.transpose();
    if (rank(trial) == trial.rows()) {
      basis_rows = trial;
      proc.push_back(r);
    }
  }
  if (static_cast<Index>(proc.size()) != q)
    throw Error("double_description: quotient cone is not pointed");

  std::vector<Vec> rays;
  for (Index k = 0; k < q; ++k) {
    auto col = solve_linear(basis_rows, unit_vec(q, k));
    rays.push_back(primitive_ray(*col));
  }

  auto tight_rows = [&](const Vec& z) {
    std::vector<int> t;
    for (size_t i = 0; i < proc.size(); ++i)
      if (proc[i].dot(z) == 0) t.push_back(static_cast<int>(i));
    return t;
  };

  const bool trace = std::getenv("SUBCIRC_DD_TRACE") != nullptr;
  for (const Vec& row : rows) {
    if (trace)
      std::fprintf(stderr, "dd: %zu/%zu rows processed, %zu rays\n", proc.size(), rows.size(),
                   rays.size());
    if (std::find_if(proc.begin(), proc.end(), [&](const Vec& p) { return vec_eq(p, row); }) !=
        proc.end())
      continue;
    std::vector<Vec> pos, zero, neg;
    for (const Vec& r : rays) {
      int sg = sign(row.dot(r));
      (sg > 0 ? pos : sg < 0 ? neg : zero).push_back(r);
    }
    if (!neg.empty()) {
      std::vector<Vec> created;
      for (const Vec& p : pos) {
        std::vector<int> tp = tight_rows(p);
        for (const Vec& n : neg) {
          std::vector<int> tn = tight_rows(n);
          std::vector<int> common;
          std::set_intersection(tp.begin(), tp.end(), tn.begin(), tn.end(),
                                std::back_inserter(common));
          if (static_cast<Index>(common.size()) < q - 2) continue;
          Mat sub(static_cast<Index>(common.size()), q);
          for (size_t i = 0; i < common.size(); ++i)
            sub.row(static_cast<Index>(i)) = proc[static_cast<size_t>(common[i])].transpose();
          if (rank(sub) != q - 2) continue;
          Vec w = row.dot(p) * n - row.dot(n) * p;
          created.push_back(primitive_ray(w));
        }
      }
      rays = pos;
      rays.insert(rays.end(), zero.begin(), zero.end());
      rays.insert(rays.end(), created.begin(), created.end());
    }
    proc.push_back(row);
  }

  std::vector<Vec> lifted;
  for (const Vec& z : rays) lifted.push_back(primitive_ray(Vec(b0m * (c1m * z))));
  std::sort(lifted.begin(), lifted.end(), VecLess{});
  for (Vec& x : lifted) {
    DdRay r;
    r.x = std::move(x);
    for (Index i = 0; i < A.rows(); ++i)
      if (A.row(i).dot(r.x) == 0) r.tight.push_back(static_cast<int>(i));
    out.rays.push_back(std::move(r));
  }
  std::vector<Vec> lin = canonical_lineality_basis(out.lineality);
  out.lineality = lin;
  return out;
}

// ---------------------------------------------------------------------------
// Representation conversions through the homogenization cone.
// ---------------------------------------------------------------------------

VertexEnumeration vrep_from_hrep_certified(const HRep& h) {
  const Index d = h.dim;
  std::vector<Vec> arows, erows;
  for (const HalfSpace& q : h.ineqs) arows.push_back(concat(Vec(-q.a), q.b));
  arows.push_back(unit_vec(d + 1, d));  // t >= 0
  for (const HalfSpace& q : h.eqs) erows.push_back(concat(q.a, -q.b));
  DdResult dd = double_description(stack_rows(arows, d + 1), stack_rows(erows, d + 1));

  VertexEnumeration out;
  out.vrep.dim = d;
  for (const Vec& l : dd.lineality) {
    if (l(d) != 0) throw Error("vrep_from_hrep: lineality with nonzero homogenizing coordinate");
    out.vrep.lineality.push_back(primitive_ray(Vec(l.head(d))));
  }
  out.vrep.lineality = canonical_lineality_basis(out.vrep.lineality);

  // Generators reduced to canonical representatives modulo the lineality
  // space; every constraint normal is orthogonal to it, so tight sets are
  // unaffected.
  const int trow = static_cast<int>(h.ineqs.size());
  std::vector<std::pair<Vec, std::vector<int>>> verts, rays;
  for (const DdRay& r : dd.rays) {
    Rational t = r.x(d);
    std::vector<int> cert;
    for (int i : r.tight)
      if (i != trow) cert.push_back(i);
    if (t > 0)
      verts.push_back({reduce_mod_lineality(Vec(r.x.head(d) / t), out.vrep.lineality), cert});
    else
      rays.push_back(
          {primitive_ray(reduce_mod_lineality(Vec(r.x.head(d)), out.vrep.lineality)), cert});
  }
  auto by_vec = [](const auto& a, const auto& b) { return lex_compare(a.first, b.first) < 0; };
  std::sort(verts.begin(), verts.end(), by_vec);
  std::sort(rays.begin(), rays.end(), by_vec);
  for (auto& [v, c] : verts) {
    out.vrep.vertices.push_back(std::move(v));
    out.vertex_tight.push_back(std::move(c));
  }
  for (auto& [r, c] : rays) {
    out.vrep.rays.push_back(std::move(r));
    out.ray_tight.push_back(std::move(c));
  }
  if (out.vrep.vertices.empty()) throw EmptyPolyhedronError();
  return out;
}

VRep vrep_from_hrep(const HRep& h) { return vrep_from_hrep_certified(h).vrep; }

FacetEnumeration hrep_from_vrep_certified(const VRep& v) {
  VRep in = v;
  if (in.vertices.empty()) {
    if (in.rays.empty() && in.lineality.empty()) throw EmptyPolyhedronError("empty V-representation");
    in.vertices.push_back(Vec::Zero(in.dim));  // cone apex
  }
  const Index d = in.dim;
  std::vector<Vec> grows, erows;
  for (const Vec& p : in.vertices) grows.push_back(concat(p, 1));
  for (const Vec& r : in.rays) grows.push_back(concat(r, 0));
  for (const Vec& l : in.lineality) erows.push_back(concat(l, 0));
  DdResult dd = double_description(stack_rows(grows, d + 1), stack_rows(erows, d + 1));

  FacetEnumeration out;
  out.hrep.dim = d;
  for (const DdRay& r : dd.rays) {
    Vec a = r.x.head(d);
    if (is_zero(a)) continue;  // the trivial t >= 0 facet of the homogenization
    out.hrep.ineqs.push_back(canonical_ineq({Vec(-a), r.x(d)}));
    out.facet_tight.push_back(r.tight);
  }
  for (const Vec& l : dd.lineality) {
    Vec a = l.head(d);
    if (is_zero(a)) throw Error("hrep_from_vrep: implied equation 0 = c");
    out.hrep.eqs.push_back(canonical_eq({a, -l(d)}));
  }
  // Canonical facet order, certificates kept aligned.
  std::vector<size_t> order(out.hrep.ineqs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    return lex_compare(concat(out.hrep.ineqs[i].a, out.hrep.ineqs[i].b),
                       concat(out.hrep.ineqs[j].a, out.hrep.ineqs[j].b)) < 0;
  });
  FacetEnumeration sorted;
  sorted.hrep.dim = d;
  sorted.hrep.eqs = out.hrep.eqs;
  for (size_t i : order) {
    sorted.hrep.ineqs.push_back(out.hrep.ineqs[i]);
    sorted.facet_tight.push_back(out.facet_tight[i]);
  }
  std::sort(sorted.hrep.eqs.begin(), sorted.hrep.eqs.end(), [](const HalfSpace& x, const HalfSpace& y) {
    return lex_compare(concat(x.a, x.b), concat(y.a, y.b)) < 0;
  });
  return sorted;
}

HRep hrep_from_vrep(const VRep& v) { return hrep_from_vrep_certified(v).hrep; }

// ---------------------------------------------------------------------------
// Polyhedron
// ---------------------------------------------------------------------------

struct Polyhedron::State {
  mutable std::mutex mu;
  mutable std::optional<HRep> h;
  mutable std::optional<VRep> v;
  Index dim = 0;
};

Polyhedron::Polyhedron() : s_(std::make_shared<State>()) {}

Polyhedron Polyhedron::from_hrep(HRep h) {
  Polyhedron p;
  p.s_->dim = h.dim;
  p.s_->h = std::move(h);
  return p;
}

Polyhedron Polyhedron::from_vrep(VRep v) {
  if (v.vertices.empty() && v.rays.empty() && v.lineality.empty())
    throw EmptyPolyhedronError("empty V-representation");
  if (v.vertices.empty()) v.vertices.push_back(Vec::Zero(v.dim));
  Polyhedron p;
  p.s_->dim = v.dim;
  p.s_->v = std::move(v);
  return p;
}

Polyhedron Polyhedron::from_both(HRep h, VRep v) {
  Polyhedron p;
  p.s_->dim = h.dim;
  p.s_->h = std::move(h);
  p.s_->v = std::move(v);
  return p;
}

Index Polyhedron::dim() const { return s_->dim; }
bool Polyhedron::has_hrep() const {
  std::lock_guard<std::mutex> g(s_->mu);
  return s_->h.has_value();
}
bool Polyhedron::has_vrep() const {
  std::lock_guard<std::mutex> g(s_->mu);
  return s_->v.has_value();
}

const HRep& Polyhedron::hrep() const {
  std::lock_guard<std::mutex> g(s_->mu);
  if (!s_->h) s_->h = hrep_from_vrep(*s_->v);
  return *s_->h;
}

const VRep& Polyhedron::vrep() const {
  std::lock_guard<std::mutex> g(s_->mu);
  if (!s_->v) s_->v = vrep_from_hrep(*s_->h);
  return *s_->v;
}

bool Polyhedron::contains(const Vec& x) const {
  const HRep& h = hrep();
  for (const HalfSpace& q : h.ineqs)
    if (q.a.dot(x) > q.b) return false;
  for (const HalfSpace& q : h.eqs)
    if (q.a.dot(x) != q.b) return false;
  return true;
}

bool Polyhedron::is_cone() const { return vrep().is_cone(); }
bool Polyhedron::is_bounded() const { return vrep().is_bounded(); }

bool Polyhedron::is_full_dim() const {
  const VRep& v = vrep();
  std::vector<Vec> dirs = v.lineality;
  for (const Vec& r : v.rays) dirs.push_back(r);
  for (size_t i = 1; i < v.vertices.size(); ++i) dirs.push_back(Vec(v.vertices[i] - v.vertices[0]));
  if (dirs.empty()) return dim() == 0;
  return rank(stack_rows(dirs, dim())) == dim();
}

Index Polyhedron::lineality_dim() const { return static_cast<Index>(vrep().lineality.size()); }

Polyhedron Polyhedron::translated(const Vec& t) const {
  const VRep& v = vrep();
  VRep out = v;
  for (Vec& p : out.vertices) p += t;
  return Polyhedron::from_vrep(out);
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

std::optional<Rational> support_function(const Polyhedron& p, const Vec& y) {
  if (y.size() != p.dim()) throw DimensionError("support_function: dimension mismatch");
  const VRep& v = p.vrep();
  for (const Vec& r : v.rays)
    if (y.dot(r) > 0) return std::nullopt;
  for (const Vec& l : v.lineality)
    if (y.dot(l) != 0) return std::nullopt;
  std::optional<Rational> best;
  for (const Vec& vert : v.vertices) {
    Rational val = y.dot(vert);
    if (!best || val > *best) best = val;
  }
  return best;
}

VRep recession_cone(const Polyhedron& p) {
  const VRep& v = p.vrep();
  VRep out;
  out.dim = p.dim();
  out.vertices.push_back(Vec::Zero(out.dim));
  out.rays = v.rays;
  out.lineality = v.lineality;
  return out;
}

VRep minkowski_sum(const VRep& a, const VRep& b) {
  if (a.dim != b.dim) throw DimensionError("minkowski_sum: dimension mismatch");
  VRep out;
  out.dim = a.dim;
  std::vector<Vec> verts;
  for (const Vec& va : a.vertices)
    for (const Vec& vb : b.vertices) verts.push_back(Vec(va + vb));
  std::vector<Vec> rays = a.rays;
  rays.insert(rays.end(), b.rays.begin(), b.rays.end());
  std::vector<Vec> lin = a.lineality;
  lin.insert(lin.end(), b.lineality.begin(), b.lineality.end());
  out.lineality = canonical_lineality_basis(lin);
  out.rays = rays;
  out.vertices = verts;
  out = normalize_vrep(std::move(out));
  out.rays = prune_rays(out.rays, out.lineality);
  out.vertices = prune_points(out.vertices, out.rays, out.lineality);
  return out;
}

VRep dual_cone(const VRep& c) {
  if (!c.is_cone()) throw NotAConeError();
  Mat a = stack_rows(c.rays, c.dim);
  Mat e = stack_rows(c.lineality, c.dim);
  DdResult dd = double_description(a, e);
  VRep out;
  out.dim = c.dim;
  out.vertices.push_back(Vec::Zero(c.dim));
  for (const DdRay& r : dd.rays) out.rays.push_back(r.x);
  out.lineality = dd.lineality;
  return normalize_vrep(std::move(out));
}

ExtremeCheck is_extreme_generator(const VRep& cone, const Vec& g) {
  if (!cone.is_cone()) throw NotAConeError("is_extreme_generator: expects a cone");
  if (!in_generated(g, {}, cone.rays, cone.lineality)) throw NotAMemberError();
  FacetEnumeration fe = hrep_from_vrep_certified(cone);
  ExtremeCheck out;
  std::vector<Vec> tight;
  for (size_t i = 0; i < fe.hrep.ineqs.size(); ++i) {
    if (fe.hrep.ineqs[i].a.dot(g) == fe.hrep.ineqs[i].b) {
      out.tight_facets.push_back(static_cast<int>(i));
      tight.push_back(fe.hrep.ineqs[i].a);
    }
  }
  for (const HalfSpace& q : fe.hrep.eqs) tight.push_back(q.a);
  Index lin = static_cast<Index>(cone.lineality.size());
  out.extreme = !is_zero(g) && rank(stack_rows(tight, cone.dim)) == cone.dim - 1 - lin;
  return out;
}

// ---------------------------------------------------------------------------
// Feasibility helpers
// ---------------------------------------------------------------------------

bool in_generated(const Vec& x, const std::vector<Vec>& points, const std::vector<Vec>& rays,
                  const std::vector<Vec>& lineality) {
  const Index d = x.size();
  lp::Problem prob;
  std::vector<int> tp, tr, tl;
  for (size_t i = 0; i < points.size(); ++i) tp.push_back(prob.add_var(true));
  for (size_t i = 0; i < rays.size(); ++i) tr.push_back(prob.add_var(true));
  for (size_t i = 0; i < lineality.size(); ++i) tl.push_back(prob.add_var(false));
  for (Index row = 0; row < d; ++row) {
    std::vector<std::pair<int, Rational>> terms;
    for (size_t i = 0; i < points.size(); ++i) terms.push_back({tp[i], points[i](row)});
    for (size_t i = 0; i < rays.size(); ++i) terms.push_back({tr[i], rays[i](row)});
    for (size_t i = 0; i < lineality.size(); ++i) terms.push_back({tl[i], lineality[i](row)});
    prob.add_constraint(terms, lp::Rel::Eq, x(row));
  }
  if (!points.empty()) {
    std::vector<std::pair<int, Rational>> terms;
    for (int t : tp) terms.push_back({t, 1});
    prob.add_constraint(terms, lp::Rel::Eq, 1);
  }
  return prob.solve().status == lp::Status::Optimal;
}

bool in_convex_hull(const Vec& x, const std::vector<Vec>& points) {
  return !points.empty() && in_generated(x, points, {}, {});
}

std::optional<Rational> relint_hull_margin(const Vec& x, const std::vector<Vec>& points) {
  if (points.empty()) return std::nullopt;
  lp::Problem prob;
  std::vector<int> th;
  for (size_t i = 0; i < points.size(); ++i) th.push_back(prob.add_var(true));
  int t = prob.add_var(false);
  for (Index row = 0; row < x.size(); ++row) {
    std::vector<std::pair<int, Rational>> terms;
    for (size_t i = 0; i < points.size(); ++i) terms.push_back({th[i], points[i](row)});
    prob.add_constraint(terms, lp::Rel::Eq, x(row));
  }
  std::vector<std::pair<int, Rational>> ones;
  for (int v : th) ones.push_back({v, 1});
  prob.add_constraint(ones, lp::Rel::Eq, 1);
  for (int v : th) prob.add_constraint({{v, 1}, {t, -1}}, lp::Rel::Ge, 0);
  prob.set_objective({{t, 1}});
  lp::Result res = prob.solve();
  if (res.status != lp::Status::Optimal) return std::nullopt;
  return res.objective;
}

bool in_relint_hull(const Vec& x, const std::vector<Vec>& points) {
  auto m = relint_hull_margin(x, points);
  return m && *m > 0;
}

std::vector<Vec> canonical_lineality_basis(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return {};
  Rref e = rref(stack_rows(vectors, vectors[0].size()));
  std::vector<Vec> out;
  for (size_t r = 0; r < e.pivot_cols.size(); ++r)
    out.push_back(primitive_ray(Vec(e.m.row(static_cast<Index>(r)).transpose())));
  std::sort(out.begin(), out.end(), VecLess{});
  return out;
}

Vec reduce_mod_lineality(Vec x, const std::vector<Vec>& lineality) {
  for (const Vec& l : lineality) {
    Index p = -1;
    for (Index i = 0; i < l.size(); ++i)
      if (l(i) != 0) { p = i; break; }
    if (p >= 0 && x(p) != 0) x -= (x(p) / l(p)) * l;
  }
  return x;
}

VRep normalize_vrep(VRep v) {
  // Ray directions whose negation also lies in the cone span hidden lines;
  // they must move into the lineality space before any extremality reasoning.
  std::vector<Vec> lin = v.lineality;
  for (const Vec& r : v.rays) {
    if (is_zero(r)) continue;
    if (in_generated(Vec(-r), {}, v.rays, v.lineality)) lin.push_back(r);
  }
  v.lineality = canonical_lineality_basis(lin);
  std::vector<Vec> rays;
  for (const Vec& r : v.rays) {
    Vec rr = reduce_mod_lineality(r, v.lineality);
    if (!is_zero(rr)) rays.push_back(primitive_ray(rr));
  }
  v.rays = sorted_unique(rays);
  std::vector<Vec> verts;
  for (const Vec& p : v.vertices) verts.push_back(reduce_mod_lineality(p, v.lineality));
  v.vertices = sorted_unique(verts);
  return v;
}

std::vector<Vec> prune_rays(const std::vector<Vec>& rays, const std::vector<Vec>& lineality) {
  std::vector<Vec> cand;
  for (const Vec& r : rays)
    if (!is_zero(r)) cand.push_back(primitive_ray(r));
  cand = sorted_unique(cand);
  std::vector<Vec> kept;
  for (size_t i = 0; i < cand.size(); ++i) {
    std::vector<Vec> others;
    for (size_t j = 0; j < cand.size(); ++j)
      if (j != i) others.push_back(cand[j]);
    if (!in_generated(cand[i], {}, others, lineality)) kept.push_back(cand[i]);
  }
  return kept;
}

std::vector<Vec> prune_points(const std::vector<Vec>& points, const std::vector<Vec>& rays,
                              const std::vector<Vec>& lineality) {
  std::vector<Vec> cand = sorted_unique(points);
  std::vector<Vec> kept;
  for (size_t i = 0; i < cand.size(); ++i) {
    std::vector<Vec> others;
    for (size_t j = 0; j < cand.size(); ++j)
      if (j != i) others.push_back(cand[j]);
    if (others.empty() || !in_generated(cand[i], others, rays, lineality))
      kept.push_back(cand[i]);
  }
  return kept;
}

VRep linear_image(const Mat& m, const VRep& v) {
  if (m.cols() != v.dim) throw DimensionError("linear_image: dimension mismatch");
  VRep out;
  out.dim = m.rows();
  for (const Vec& p : v.vertices) out.vertices.push_back(Vec(m * p));
  out.vertices = sorted_unique(out.vertices);
  std::vector<Vec> rays;
  for (const Vec& r : v.rays) {
    Vec img = m * r;
    if (!is_zero(img)) rays.push_back(primitive_ray(img));
  }
  for (const Vec& l : v.lineality) {
    Vec img = m * l;
    if (!is_zero(img)) out.lineality.push_back(img);
  }
  out.rays = rays;
  out = normalize_vrep(std::move(out));
  out.rays = prune_rays(out.rays, out.lineality);
  out.vertices = prune_points(out.vertices, out.rays, out.lineality);
  return out;
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

Polyhedron preset_line() { return preset_rn(1); }

Polyhedron preset_halfline() { return preset_orthant(1); }

Polyhedron preset_interval() { return preset_cube(1); }

Polyhedron preset_rn(Index n) {
  HRep h;
  h.dim = n;
  VRep v;
  v.dim = n;
  v.vertices.push_back(Vec::Zero(n));
  for (Index i = 0; i < n; ++i) v.lineality.push_back(unit_vec(n, i));
  return Polyhedron::from_both(h, v);
}

Polyhedron preset_orthant(Index n) {
  HRep h;
  h.dim = n;
  for (Index i = 0; i < n; ++i) h.ineqs.push_back(canonical_ineq({unit_vec(n, i, -1), 0}));
  VRep v;
  v.dim = n;
  v.vertices.push_back(Vec::Zero(n));
  for (Index i = 0; i < n; ++i) v.rays.push_back(unit_vec(n, i));
  return Polyhedron::from_both(h, v);
}

Polyhedron preset_cube(Index n) {
  if (n > 20) throw Error("preset_cube: dimension too large");
  HRep h;
  h.dim = n;
  for (Index i = 0; i < n; ++i) {
    h.ineqs.push_back(canonical_ineq({unit_vec(n, i), 1}));
    h.ineqs.push_back(canonical_ineq({unit_vec(n, i, -1), 1}));
  }
  VRep v;
  v.dim = n;
  for (Index mask = 0; mask < (Index(1) << n); ++mask) {
    Vec vert(n);
    for (Index i = 0; i < n; ++i) vert(i) = (mask >> i) & 1 ? 1 : -1;
    v.vertices.push_back(vert);
  }
  std::sort(v.vertices.begin(), v.vertices.end(), VecLess{});
  return Polyhedron::from_both(h, v);
}

}  // namespace subcirc
