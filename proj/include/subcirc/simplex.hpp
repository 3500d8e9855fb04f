#pragma once

#include <utility>
#include <vector>

#include "subcirc/numeric.hpp"

namespace subcirc::lp {

enum class Rel { Le, Ge, Eq };
enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Vec x;               // values of the user variables
  Rational objective;  // defined when Optimal
};

// Exact rational simplex (dense tableau, Bland's rule). Maximizes.
// Problem sizes in this project are tiny; clarity over speed.
class Problem {
 public:
  int add_var(bool nonneg) {
    nonneg_.push_back(nonneg);
    obj_.push_back(0);
    return static_cast<int>(nonneg_.size()) - 1;
  }

  void add_constraint(std::vector<std::pair<int, Rational>> terms, Rel rel, Rational rhs) {
    rows_.push_back({std::move(terms), rel, std::move(rhs)});
  }

  void set_objective(const std::vector<std::pair<int, Rational>>& terms) {
    for (auto& c : obj_) c = 0;
    for (const auto& [i, c] : terms) obj_[static_cast<size_t>(i)] += c;
  }

  Result solve() const;

 private:
  struct Row {
    std::vector<std::pair<int, Rational>> terms;
    Rel rel;
    Rational rhs;
  };
  std::vector<bool> nonneg_;
  std::vector<Rational> obj_;
  std::vector<Row> rows_;
};

namespace detail {

struct Tableau {
  Mat t;                   // m x (n+1); last column is the rhs
  std::vector<int> basis;  // size m

  Index m() const { return t.rows(); }
  Index n() const { return t.cols() - 1; }

  void pivot(Index r, Index c) {
    t.row(r) /= t(r, c);
    for (Index i = 0; i < m(); ++i) {
      if (i == r || t(i, c) == 0) continue;
      t.row(i) -= t(i, c) * t.row(r);
    }
    basis[static_cast<size_t>(r)] = static_cast<int>(c);
  }

  Vec reduced_costs(const std::vector<Rational>& cost) const {
    Vec row0 = Vec::Zero(n() + 1);
    for (Index j = 0; j <= n(); ++j) {
      Rational v = 0;
      for (Index i = 0; i < m(); ++i)
        v += cost[static_cast<size_t>(basis[static_cast<size_t>(i)])] * t(i, j);
      row0(j) = v;
    }
    for (Index j = 0; j < n(); ++j) row0(j) -= cost[static_cast<size_t>(j)];
    return row0;
  }

  // Dantzig pivoting with a Bland fallback once degeneracy stalls progress;
  // returns false on unboundedness.
  bool optimize(const std::vector<Rational>& cost) {
    Vec row0 = reduced_costs(cost);
    const long bland_after = 4 * (m() + n()) + 64;
    long iter = 0;
    for (;;) {
      ++iter;
      const bool bland = iter > bland_after;
      Index enter = -1;
      if (bland) {
        for (Index j = 0; j < n(); ++j)
          if (row0(j) < 0) { enter = j; break; }
      } else {
        for (Index j = 0; j < n(); ++j)
          if (row0(j) < 0 && (enter < 0 || row0(j) < row0(enter))) enter = j;
      }
      if (enter < 0) return true;
      Index leave = -1;
      Rational best;
      for (Index i = 0; i < m(); ++i) {
        if (t(i, enter) <= 0) continue;
        Rational ratio = t(i, n()) / t(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      Rational scale = row0(enter) / t(leave, enter);
      row0 -= scale * t.row(leave).transpose();
      row0(enter) = 0;
      pivot(leave, enter);
    }
  }
};

}  // namespace detail

inline Result Problem::solve() const {
  // Column layout: nonneg var -> one column; free var -> (plus, minus) pair.
  std::vector<std::pair<Index, Index>> var_cols;
  Index ncols = 0;
  for (bool nn : nonneg_) {
    if (nn) {
      var_cols.push_back({ncols, -1});
      ncols += 1;
    } else {
      var_cols.push_back({ncols, ncols + 1});
      ncols += 2;
    }
  }
  const Index nslack = static_cast<Index>(rows_.size());
  const Index m = static_cast<Index>(rows_.size());
  Index slack_base = ncols;
  ncols += nslack;  // one slack/surplus column per row; unused for Eq
  Index art_base = ncols;
  ncols += m;

  Mat t = Mat::Zero(m, ncols + 1);
  for (Index i = 0; i < m; ++i) {
    const auto& row = rows_[static_cast<size_t>(i)];
    for (const auto& [vi, c] : row.terms) {
      auto [cp, cm] = var_cols[static_cast<size_t>(vi)];
      t(i, cp) += c;
      if (cm >= 0) t(i, cm) -= c;
    }
    if (row.rel == Rel::Le) t(i, slack_base + i) = 1;
    if (row.rel == Rel::Ge) t(i, slack_base + i) = -1;
    t(i, ncols) = row.rhs;
    if (t(i, ncols) < 0) t.row(i) = -t.row(i);
    t(i, art_base + i) = 1;
  }

  detail::Tableau tab{std::move(t), {}};
  tab.basis.resize(static_cast<size_t>(m));
  for (Index i = 0; i < m; ++i) tab.basis[static_cast<size_t>(i)] = static_cast<int>(art_base + i);

  // Phase 1: maximize -sum(artificials).
  std::vector<Rational> phase1(static_cast<size_t>(ncols), 0);
  for (Index j = art_base; j < art_base + m; ++j) phase1[static_cast<size_t>(j)] = -1;
  tab.optimize(phase1);  // bounded below by construction
  Rational art_sum = 0;
  for (Index i = 0; i < m; ++i)
    if (tab.basis[static_cast<size_t>(i)] >= art_base) art_sum += tab.t(i, ncols);
  if (art_sum != 0) return {Status::Infeasible, Vec(), 0};

  // Pivot zero-level artificials out; rows that cannot be pivoted are redundant.
  std::vector<Index> keep;
  for (Index i = 0; i < m; ++i) {
    if (tab.basis[static_cast<size_t>(i)] < art_base) {
      keep.push_back(i);
      continue;
    }
    Index c = -1;
    for (Index j = 0; j < art_base; ++j)
      if (tab.t(i, j) != 0) { c = j; break; }
    if (c >= 0) {
      tab.pivot(i, c);
      keep.push_back(i);
    }
  }
  Mat t2(static_cast<Index>(keep.size()), art_base + 1);
  std::vector<int> basis2;
  for (size_t k = 0; k < keep.size(); ++k) {
    t2.row(static_cast<Index>(k)).head(art_base) = tab.t.row(keep[k]).head(art_base);
    t2(static_cast<Index>(k), art_base) = tab.t(keep[k], ncols);
    basis2.push_back(tab.basis[static_cast<size_t>(keep[k])]);
  }
  detail::Tableau tab2{std::move(t2), std::move(basis2)};

  std::vector<Rational> phase2(static_cast<size_t>(art_base), 0);
  for (size_t vi = 0; vi < var_cols.size(); ++vi) {
    auto [cp, cm] = var_cols[vi];
    phase2[static_cast<size_t>(cp)] += obj_[vi];
    if (cm >= 0) phase2[static_cast<size_t>(cm)] -= obj_[vi];
  }
  if (!tab2.optimize(phase2)) return {Status::Unbounded, Vec(), 0};

  Vec cols = Vec::Zero(art_base);
  for (Index i = 0; i < tab2.m(); ++i)
    cols(tab2.basis[static_cast<size_t>(i)]) = tab2.t(i, tab2.n());
  Vec x(static_cast<Index>(var_cols.size()));
  Rational objective = 0;
  for (size_t vi = 0; vi < var_cols.size(); ++vi) {
    auto [cp, cm] = var_cols[vi];
    x(static_cast<Index>(vi)) = cols(cp) - (cm >= 0 ? cols(cm) : Rational(0));
    objective += obj_[vi] * x(static_cast<Index>(vi));
  }
  return {Status::Optimal, std::move(x), std::move(objective)};
}

}  // namespace subcirc::lp
