#include "subcirc/sage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace subcirc {

namespace {

constexpr double kRelTol = 1e-9;

double to_double(const Rational& q) { return q.get_d(); }

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

double evaluate(const Signomial& f, const Vec& x) {
  if (x.size() != f.support.ambient_dim())
    throw DimensionError("evaluate: point dimension differs from the support");
  double sum = 0.0, comp = 0.0;  // Kahan
  for (int i = 0; i < f.support.size(); ++i) {
    Rational dot = f.support.point(i).dot(x);
    double e = to_double(dot);
    if (std::abs(e) > 700.0)
      throw EvaluationOverflowError("exponent magnitude exceeds 700");
    double term = f.coefficients(i) * std::exp(e);
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

MembershipResult age_membership(const Signomial& f, const AgeWitness& w) {
  const Circuit& lam = w.lambda;
  if (lam.normalized.size() != f.support.size())
    throw WitnessMismatchError("witness length differs from |A|");
  if (lam.normalized(lam.beta) != -1)
    throw WitnessMismatchError("witness is not normalized");
  const int beta = lam.beta;
  for (int i = 0; i < f.support.size(); ++i)
    if (i != beta && f.coefficients(i) < 0) return {Membership::NonMember, -HUGE_VAL};
  double cb = f.coefficients(beta);
  if (cb >= 0) return {Membership::Member, HUGE_VAL};
  // 0^0 convention: a vanishing coefficient on the positive support forces the
  // product to zero, so membership needs c_beta >= 0.
  for (int al : lam.positive_support)
    if (f.coefficients(al) == 0.0) return {Membership::NonMember, -HUGE_VAL};

  double lhs = 0.0;
  for (int al : lam.positive_support) {
    double la = to_double(lam.normalized(al));
    lhs += la * (std::log(f.coefficients(al)) - std::log(la));
  }
  double rhs = std::log(-cb) + to_double(lam.sigma);
  double margin = lhs - rhs;
  if (close_rel(lhs, rhs, kRelTol)) return {Membership::Boundary, margin};
  return {margin > 0 ? Membership::Member : Membership::NonMember, margin};
}

std::vector<Circuit> sage_decomposition_summands(const SupportSet& a, const Polyhedron& x,
                                                 bool use_reduced) {
  CircuitFamily fam = enumerate_circuits(a, x);
  if (fam.size() == 0) return {};
  if (!use_reduced) return fam.circuits();
  CircuitFamily red = reduced_circuits(build_circuit_graph(a, x, fam));
  return red.circuits();
}

ExtremalityResult interval_extreme_ray_check(const Signomial& f) {
  const SupportSet& a = f.support;
  if (a.ambient_dim() != 1)
    throw DimensionError("interval_extreme_ray_check: univariate supports only");
  const int m = a.size();
  for (int i = 0; i + 1 < m; ++i)
    if (a.point(i)(0) >= a.point(i + 1)(0))
      throw Error("interval_extreme_ray_check: support must be sorted ascending");

  std::vector<int> nz;
  for (int i = 0; i < m; ++i)
    if (f.coefficients(i) != 0.0) nz.push_back(i);

  auto alpha = [&](int i) { return to_double(a.point(i)(0)); };

  if (nz.size() == 2) {
    // boundary patterns exp(a2 x) - exp(a1 - a2) exp(a1 x) and its mirror
    int lo = nz[0], hi = nz[1];
    double clo = f.coefficients(lo), chi = f.coefficients(hi);
    if (lo == 0 && hi == 1 && chi > 0 && clo < 0 &&
        close_rel(-clo / chi, std::exp(alpha(0) - alpha(1)), kRelTol))
      return {true, 1, "lowest-pair boundary pattern", 0.0};
    if (lo == m - 2 && hi == m - 1 && clo > 0 && chi < 0 &&
        close_rel(-chi / clo, std::exp(alpha(m - 2) - alpha(m - 1)), kRelTol))
      return {true, 2, "highest-pair boundary pattern", 0.0};
    return {false, 0, "two-term coefficients do not match a boundary pattern", 0.0};
  }

  if (nz.size() == 3 && nz[0] + 1 == nz[1] && nz[1] + 1 == nz[2]) {
    int i = nz[1];
    double cm = f.coefficients(i - 1), ci = f.coefficients(i), cp = f.coefficients(i + 1);
    if (cm <= 0 || cp <= 0 || ci >= 0)
      return {false, 0, "three-term signs do not match", 0.0};
    double lm = (alpha(i + 1) - alpha(i)) / (alpha(i + 1) - alpha(i - 1));
    double lp = (alpha(i) - alpha(i - 1)) / (alpha(i + 1) - alpha(i - 1));
    double want = -std::pow(cm / lm, lm) * std::pow(cp / lp, lp);
    if (!close_rel(ci, want, kRelTol))
      return {false, 0, "middle coefficient off the witnessed boundary", 0.0};
    double ratio = std::log(cm * lp / (cp * lm));
    double spread = alpha(i + 1) - alpha(i - 1);
    if (ratio < -spread - kRelTol || ratio > spread + kRelTol)
      return {false, 0, "zero of the function falls outside [-1,1]", 0.0};
    return {true, 3, "three-term boundary pattern with interior zero", ratio / spread};
  }

  return {false, 0, "support shape outside the classified cases", 0.0};
}

std::pair<Signomial, Signomial> decompose_atomic(const Signomial& f, const Polyhedron& x) {
  if (!x.is_bounded()) throw NonCompactError("decompose_atomic: X must be compact");
  if (f.support.size() < 2) throw Error("decompose_atomic: need at least two support points");
  int al = -1;
  for (int i = 0; i < f.support.size(); ++i) {
    if (f.coefficients(i) == 0.0) continue;
    if (al >= 0 || f.coefficients(i) < 0)
      throw Error("decompose_atomic: expects exactly one positive term");
    al = i;
  }
  if (al < 0) throw Error("decompose_atomic: expects exactly one positive term");
  int beta = al == 0 ? 1 : 0;  // first other point in index order
  Vec lam = Vec::Zero(f.support.size());
  lam(al) = 1;
  lam(beta) = -1;
  auto s = support_function(x, Vec(-f.support.apply(lam)));
  if (!s) throw Error("decompose_atomic: support function value unexpectedly infinite");
  double shifted = f.coefficients(al) * std::exp(-to_double(*s));
  Eigen::VectorXd c1 = Eigen::VectorXd::Zero(f.support.size());
  c1(al) = f.coefficients(al);
  c1(beta) = -shifted;
  Eigen::VectorXd c2 = Eigen::VectorXd::Zero(f.support.size());
  c2(beta) = shifted;
  Signomial f1(f.support, c1), f2(f.support, c2);

  Circuit wc = make_circuit(f.support, lam, *s, {"two-point", {}});
  auto m1 = age_membership(f1, {wc});
  auto m2 = age_membership(f2, {wc});
  if (m1.status == Membership::NonMember || m2.status == Membership::NonMember)
    throw Error("decompose_atomic: parts failed the membership check");
  return {std::move(f1), std::move(f2)};
}

namespace {

double halton(uint64_t index, uint64_t base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

constexpr uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

}  // namespace

SampleResult sample_nonnegativity(const Signomial& f, const Polyhedron& x, int n, uint64_t seed,
                                  const std::optional<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& box) {
  const Index d = x.dim();
  if (d > static_cast<Index>(std::size(kPrimes)))
    throw Error("sample_nonnegativity: dimension too large for the Halton bases");
  Eigen::VectorXd lo(d), hi(d);
  if (box) {
    lo = box->first;
    hi = box->second;
  } else {
    if (!x.is_bounded())
      throw Error("sample_nonnegativity: unbounded X needs an explicit sampling box");
    const VRep& v = x.vrep();
    for (Index j = 0; j < d; ++j) {
      Rational mn = v.vertices[0](j), mx = v.vertices[0](j);
      for (const Vec& vert : v.vertices) {
        mn = std::min(mn, vert(j));
        mx = std::max(mx, vert(j));
      }
      lo(j) = to_double(mn);
      hi(j) = to_double(mx);
    }
  }

  SampleResult out;
  out.min_value = std::numeric_limits<double>::infinity();
  out.argmin = Eigen::VectorXd::Zero(d);
  uint64_t index = seed + 1;
  int accepted = 0;
  uint64_t guard = 0;
  const uint64_t guard_limit = 1000ull * static_cast<uint64_t>(n) + 1000;
  while (accepted < n && guard < guard_limit) {
    ++guard;
    Eigen::VectorXd pt(d);
    for (Index j = 0; j < d; ++j)
      pt(j) = lo(j) + (hi(j) - lo(j)) * halton(index, kPrimes[j]);
    ++index;
    Vec exact(d);
    for (Index j = 0; j < d; ++j) exact(j) = rational_from_double(pt(j));
    if (!x.contains(exact)) continue;
    ++accepted;
    double val = evaluate(f, exact);
    if (val < out.min_value) {
      out.min_value = val;
      out.argmin = pt;
    }
  }
  out.accepted = accepted;
  return out;
}

}  // namespace subcirc
