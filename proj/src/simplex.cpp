#include "lpgame/simplex.hpp"

#include <algorithm>

#include "lpgame/errors.hpp"

namespace lpgame {

void GeneralLP::validate() const {
  if (cost.dim() != num_vars()) throw DimensionError("GeneralLP: cost dimension");
  if (rhs.dim() != num_rows()) throw DimensionError("GeneralLP: rhs dimension");
  if (row_sense.size() != num_rows()) throw DimensionError("GeneralLP: row sense count");
  if (var_bound.size() != num_vars()) throw DimensionError("GeneralLP: var bound count");
}

namespace {

struct CanonCol {
  bool slack;
  std::size_t index;  // original variable index, or original row index for slacks
  int sign;           // split sign for variable columns
};

// Equality form A x = b with b >= 0 and all variables nonnegative, as a
// maximization. Free variables are split x = x+ - x-, Ge rows negated,
// slack added per inequality row, then rows with negative rhs negated.
// row_mult[i] relates canonical row i back to original row i on the
// structural part; slack_sign[i] is the slack coefficient after flips.
struct Canonical {
  Mat a;
  Vec b;
  Vec c;
  std::vector<CanonCol> cols;
  std::vector<int> row_mult;
  std::vector<int> slack_sign;  // 0 when the row has no slack
};

Canonical canonicalize(const GeneralLP& lp) {
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_vars();

  Canonical canon;
  for (std::size_t j = 0; j < n; ++j) {
    canon.cols.push_back({false, j, +1});
    if (lp.var_bound[j] == VarBound::Free) canon.cols.push_back({false, j, -1});
  }
  std::vector<std::size_t> slack_col(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.row_sense[i] != RowSense::Eq) {
      slack_col[i] = canon.cols.size();
      canon.cols.push_back({true, i, +1});
    }
  }

  const std::size_t ncols = canon.cols.size();
  canon.a = Mat(m, ncols);
  canon.b = Vec(m);
  canon.c = Vec(ncols);
  canon.row_mult.assign(m, 1);
  canon.slack_sign.assign(m, 0);

  const Rat obj_sign = lp.objective == Objective::Maximize ? 1 : -1;
  for (std::size_t col = 0; col < ncols; ++col) {
    const CanonCol& cc = canon.cols[col];
    if (!cc.slack) canon.c[col] = obj_sign * Rat(cc.sign) * lp.cost[cc.index];
  }

  for (std::size_t i = 0; i < m; ++i) {
    const int s1 = lp.row_sense[i] == RowSense::Ge ? -1 : 1;
    Rat rhs = Rat(s1) * lp.rhs[i];
    const int s2 = rhs < 0 ? -1 : 1;
    canon.row_mult[i] = s1 * s2;
    canon.b[i] = Rat(s2) * rhs;
    for (std::size_t col = 0; col < ncols; ++col) {
      const CanonCol& cc = canon.cols[col];
      if (cc.slack) continue;
      canon.a(i, col) = Rat(s1 * s2 * cc.sign) * lp.constraints(i, cc.index);
    }
    if (lp.row_sense[i] != RowSense::Eq) {
      canon.slack_sign[i] = s2;
      canon.a(i, slack_col[i]) = s2;
    }
  }
  return canon;
}

struct Tableau {
  Mat t;    // B^{-1} A over the current column set
  Vec xb;   // B^{-1} b, kept >= 0
  std::vector<std::size_t> basis;
};

void pivot(Tableau& tab, std::size_t row, std::size_t col) {
  Rat inv = 1 / tab.t(row, col);
  for (std::size_t j = 0; j < tab.t.cols(); ++j) tab.t(row, j) *= inv;
  tab.xb[row] *= inv;
  for (std::size_t i = 0; i < tab.t.rows(); ++i) {
    if (i == row || tab.t(i, col) == 0) continue;
    Rat f = tab.t(i, col);
    for (std::size_t j = 0; j < tab.t.cols(); ++j) tab.t(i, j) -= f * tab.t(row, j);
    tab.xb[i] -= f * tab.xb[row];
  }
  tab.basis[row] = col;
}

enum class PhaseStatus { Optimal, Unbounded };

// Bland's rule: smallest-index entering column with positive reduced cost;
// smallest ratio leaving row, ties broken by smallest basic variable index.
PhaseStatus run_phase(Tableau& tab, const Vec& costs, std::size_t* unbounded_col) {
  const std::size_t m = tab.t.rows();
  const std::size_t ncols = tab.t.cols();
  for (std::size_t iter = 0;; ++iter) {
    LPGAME_CHECK(iter < 1000000);
    Vec cb(m);
    for (std::size_t i = 0; i < m; ++i) cb[i] = costs[tab.basis[i]];

    std::size_t entering = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      Rat reduced = costs[j];
      for (std::size_t i = 0; i < m; ++i) {
        if (tab.t(i, j) != 0) reduced -= cb[i] * tab.t(i, j);
      }
      if (reduced > 0) {
        entering = j;
        break;
      }
    }
    if (entering == ncols) return PhaseStatus::Optimal;

    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.t(i, entering) <= 0) continue;
      Rat ratio = tab.xb[i] / tab.t(i, entering);
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      if (unbounded_col != nullptr) *unbounded_col = entering;
      return PhaseStatus::Unbounded;
    }
    pivot(tab, leave, entering);
  }
}

Vec map_point(const Canonical& canon, const GeneralLP& lp, const Vec& xbar) {
  Vec x(lp.num_vars());
  for (std::size_t col = 0; col < canon.cols.size(); ++col) {
    const CanonCol& cc = canon.cols[col];
    if (!cc.slack) x[cc.index] += Rat(cc.sign) * xbar[col];
  }
  return x;
}

void verify_primal_feasible(const GeneralLP& lp, const Vec& x) {
  Vec ax = lp.constraints * x;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    switch (lp.row_sense[i]) {
      case RowSense::Le: LPGAME_CHECK(ax[i] <= lp.rhs[i]); break;
      case RowSense::Eq: LPGAME_CHECK(ax[i] == lp.rhs[i]); break;
      case RowSense::Ge: LPGAME_CHECK(ax[i] >= lp.rhs[i]); break;
    }
  }
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (lp.var_bound[j] == VarBound::NonNegative) LPGAME_CHECK(x[j] >= 0);
  }
}

// Dual conventions from the header, with the maximization orientation
// flipped for minimization problems.
void verify_dual_feasible(const GeneralLP& lp, const Vec& y) {
  const Rat s = lp.objective == Objective::Maximize ? 1 : -1;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    if (lp.row_sense[i] == RowSense::Le) LPGAME_CHECK(s * y[i] >= 0);
    if (lp.row_sense[i] == RowSense::Ge) LPGAME_CHECK(s * y[i] <= 0);
  }
  Vec yta = left_mul(y, lp.constraints);
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    Rat slack = s * (yta[j] - lp.cost[j]);
    if (lp.var_bound[j] == VarBound::NonNegative) {
      LPGAME_CHECK(slack >= 0);
    } else {
      LPGAME_CHECK(slack == 0);
    }
  }
}

void verify_farkas(const GeneralLP& lp, const Vec& y) {
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    if (lp.row_sense[i] == RowSense::Le) LPGAME_CHECK(y[i] >= 0);
    if (lp.row_sense[i] == RowSense::Ge) LPGAME_CHECK(y[i] <= 0);
  }
  Vec yta = left_mul(y, lp.constraints);
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (lp.var_bound[j] == VarBound::NonNegative) {
      LPGAME_CHECK(yta[j] >= 0);
    } else {
      LPGAME_CHECK(yta[j] == 0);
    }
  }
  LPGAME_CHECK(dot(y, lp.rhs) < 0);
}

void verify_ray(const GeneralLP& lp, const Vec& ray) {
  Vec ar = lp.constraints * ray;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    switch (lp.row_sense[i]) {
      case RowSense::Le: LPGAME_CHECK(ar[i] <= 0); break;
      case RowSense::Eq: LPGAME_CHECK(ar[i] == 0); break;
      case RowSense::Ge: LPGAME_CHECK(ar[i] >= 0); break;
    }
  }
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (lp.var_bound[j] == VarBound::NonNegative) LPGAME_CHECK(ray[j] >= 0);
  }
  Rat gain = dot(lp.cost, ray);
  if (lp.objective == Objective::Maximize) {
    LPGAME_CHECK(gain > 0);
  } else {
    LPGAME_CHECK(gain < 0);
  }
}

}  // namespace

SimplexOutcome simplex_solve(const GeneralLP& lp) {
  lp.validate();
  Canonical canon = canonicalize(lp);
  const std::size_t m = canon.a.rows();
  const std::size_t nreal = canon.cols.size();

  // Phase one: artificial basis, maximize minus the artificial sum.
  Tableau tab{hstack(canon.a, Mat::identity(m)), canon.b, {}};
  for (std::size_t i = 0; i < m; ++i) tab.basis.push_back(nreal + i);
  Vec phase1_costs(nreal + m);
  for (std::size_t i = 0; i < m; ++i) phase1_costs[nreal + i] = -1;

  PhaseStatus st = run_phase(tab, phase1_costs, nullptr);
  LPGAME_CHECK(st == PhaseStatus::Optimal);
  Rat phase1_value = 0;
  for (std::size_t i = 0; i < m; ++i) phase1_value += phase1_costs[tab.basis[i]] * tab.xb[i];

  if (phase1_value < 0) {
    // The phase-one dual proves Farkas infeasibility of the canonical
    // equality system; map it back through the row flips.
    Mat ext = hstack(canon.a, Mat::identity(m));
    Mat basis_mat = select_cols(ext, tab.basis);
    Vec cb(m);
    for (std::size_t i = 0; i < m; ++i) cb[i] = phase1_costs[tab.basis[i]];
    auto y_canon = solve_linear(basis_mat.transposed(), cb);
    LPGAME_CHECK(y_canon.has_value());
    Vec y(lp.num_rows());
    for (std::size_t i = 0; i < m; ++i) y[i] = Rat(canon.row_mult[i]) * (*y_canon)[i];
    verify_farkas(lp, y);
    return SimplexOutcome(InfeasibleResult{std::move(y)});
  }

  // Drive artificial columns out of the basis; a row whose real part is
  // entirely zero is redundant and gets dropped.
  std::vector<std::size_t> live_rows;
  {
    std::vector<bool> drop(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] < nreal) continue;
      std::size_t col = nreal;
      for (std::size_t j = 0; j < nreal; ++j) {
        if (tab.t(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col < nreal) {
        pivot(tab, i, col);
      } else {
        drop[i] = true;
      }
    }
    Tableau cleaned;
    cleaned.t = Mat(m - std::count(drop.begin(), drop.end(), true), nreal);
    cleaned.xb = Vec(cleaned.t.rows());
    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (drop[i]) continue;
      LPGAME_CHECK(tab.basis[i] < nreal);
      for (std::size_t j = 0; j < nreal; ++j) cleaned.t(r, j) = tab.t(i, j);
      cleaned.xb[r] = tab.xb[i];
      cleaned.basis.push_back(tab.basis[i]);
      live_rows.push_back(i);
      ++r;
    }
    tab = std::move(cleaned);
  }

  std::size_t unbounded_col = 0;
  st = run_phase(tab, canon.c, &unbounded_col);

  if (st == PhaseStatus::Unbounded) {
    Vec point_canon(nreal);
    Vec ray_canon(nreal);
    for (std::size_t i = 0; i < tab.basis.size(); ++i) {
      point_canon[tab.basis[i]] = tab.xb[i];
      ray_canon[tab.basis[i]] = -tab.t(i, unbounded_col);
    }
    ray_canon[unbounded_col] = 1;
    Vec point = map_point(canon, lp, point_canon);
    Vec ray = map_point(canon, lp, ray_canon);
    verify_primal_feasible(lp, point);
    verify_ray(lp, ray);
    return SimplexOutcome(UnboundedResult{std::move(point), std::move(ray)});
  }

  // Optimal: read the solution off the basis, recover the dual from the
  // basis columns of the canonical system, and verify the zero gap.
  const std::size_t mlive = tab.basis.size();
  Vec xbar(nreal);
  for (std::size_t i = 0; i < mlive; ++i) xbar[tab.basis[i]] = tab.xb[i];

  Mat a_live = select_rows(canon.a, live_rows);
  Mat basis_mat = select_cols(a_live, tab.basis);
  Vec cb(mlive);
  for (std::size_t i = 0; i < mlive; ++i) cb[i] = canon.c[tab.basis[i]];
  Vec y_live;
  if (mlive > 0) {
    auto solved = solve_linear(basis_mat.transposed(), cb);
    LPGAME_CHECK(solved.has_value());
    y_live = *solved;
  }
  Vec y(lp.num_rows());
  for (std::size_t i = 0; i < mlive; ++i) {
    y[live_rows[i]] = Rat(canon.row_mult[live_rows[i]]) * y_live[i];
  }

  Vec x = map_point(canon, lp, xbar);
  Rat value = dot(lp.cost, x);
  if (lp.objective == Objective::Minimize) {
    for (std::size_t i = 0; i < y.dim(); ++i) y[i] = -y[i];
  }

  std::vector<std::size_t> basic_vars;
  for (std::size_t col : tab.basis) {
    if (!canon.cols[col].slack) basic_vars.push_back(canon.cols[col].index);
  }
  std::sort(basic_vars.begin(), basic_vars.end());

  verify_primal_feasible(lp, x);
  verify_dual_feasible(lp, y);
  LPGAME_CHECK(dot(y, lp.rhs) == value);

  return SimplexOutcome(OptimalResult{std::move(x), std::move(y), std::move(value),
                                      std::move(basic_vars)});
}

std::pair<BasicSolution, Rat> basic_min_w(const Mat& c, const Vec& d) {
  if (!is_skew_symmetric(c)) {
    throw std::invalid_argument("basic_min_w: C must be skew-symmetric");
  }
  if (d.dim() != c.rows()) throw DimensionError("basic_min_w: dim(d) != rows(C)");
  const std::size_t k = c.rows();

  GeneralLP lp;
  lp.objective = Objective::Minimize;
  lp.cost = Vec::unit(k + 1, k);
  lp.constraints = Mat(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) lp.constraints(i, j) = c(i, j);
    lp.constraints(i, k) = -1;
  }
  for (std::size_t j = 0; j < k; ++j) lp.constraints(k, j) = d[j];
  lp.constraints(k, k) = -1;
  lp.row_sense.assign(k + 1, RowSense::Le);
  lp.rhs = concat(d, Vec{0});
  lp.var_bound.assign(k + 1, VarBound::NonNegative);

  SimplexOutcome outcome = simplex_solve(lp);
  LPGAME_CHECK(outcome.is_optimal());
  const OptimalResult& opt = outcome.optimal();
  LPGAME_CHECK(opt.value >= 0);
  return {BasicSolution{opt.basic_vars, opt.x}, opt.value};
}

}  // namespace lpgame
