#include "lpgame/certificates.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpgame/errors.hpp"
#include "lpgame/simplex.hpp"

namespace lpgame {

namespace {

std::vector<std::size_t> support_of(const Vec& x) {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x[j] > 0) s.push_back(j);
  }
  return s;
}

// Feasibility of an equality/inequality system with a zero objective;
// a zero objective can never be unbounded.
bool feasible(const GeneralLP& lp, Vec* witness) {
  SimplexOutcome outcome = simplex_solve(lp);
  LPGAME_CHECK(!outcome.is_unbounded());
  if (outcome.is_infeasible()) return false;
  if (witness != nullptr) *witness = outcome.optimal().x;
  return true;
}

}  // namespace

Alternative<Vec, Vec> farkas(const Mat& a, const Vec& b, FarkasVariant variant) {
  if (b.dim() != a.rows()) throw DimensionError("farkas: dim(b) != rows(A)");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  switch (variant) {
    case FarkasVariant::IneqNonneg: {
      GeneralLP lp;
      lp.objective = Objective::Maximize;
      lp.cost = Vec(n + 1);
      lp.cost[n] = -1;
      lp.constraints = hstack(a, Mat(m, 1));
      for (std::size_t i = 0; i < m; ++i) lp.constraints(i, n) = -1;
      lp.row_sense.assign(m, RowSense::Le);
      lp.rhs = b;
      lp.var_bound.assign(n + 1, VarBound::NonNegative);

      SimplexOutcome outcome = simplex_solve(lp);
      LPGAME_CHECK(outcome.is_optimal());
      const OptimalResult& opt = outcome.optimal();
      if (opt.x[n] == 0) {
        Vec x = slice(opt.x, 0, n);
        LPGAME_CHECK(is_nonneg(x));
        LPGAME_CHECK(is_nonneg(b - a * x));
        return Alternative<Vec, Vec>::left(std::move(x));
      }
      Vec y = opt.y;
      LPGAME_CHECK(is_nonneg(y));
      LPGAME_CHECK(is_nonneg(left_mul(y, a)));
      LPGAME_CHECK(dot(y, b) < 0);
      return Alternative<Vec, Vec>::right(std::move(y));
    }
    case FarkasVariant::Eq: {
      auto alt = farkas(vstack(a, -a), concat(b, -b), FarkasVariant::IneqNonneg);
      if (alt.is_left()) {
        Vec x = alt.left_value();
        LPGAME_CHECK(a * x == b);
        LPGAME_CHECK(is_nonneg(x));
        return Alternative<Vec, Vec>::left(std::move(x));
      }
      const Vec& stacked = alt.right_value();
      Vec y = slice(stacked, 0, m) - slice(stacked, m, 2 * m);
      LPGAME_CHECK(is_nonneg(left_mul(y, a)));
      LPGAME_CHECK(dot(y, b) < 0);
      return Alternative<Vec, Vec>::right(std::move(y));
    }
    case FarkasVariant::IneqFree: {
      auto alt = farkas(hstack(a, -a), b, FarkasVariant::IneqNonneg);
      if (alt.is_left()) {
        const Vec& split = alt.left_value();
        Vec x = slice(split, 0, n) - slice(split, n, 2 * n);
        LPGAME_CHECK(is_nonneg(b - a * x));
        return Alternative<Vec, Vec>::left(std::move(x));
      }
      Vec y = alt.right_value();
      LPGAME_CHECK(is_nonneg(y));
      LPGAME_CHECK(is_zero(left_mul(y, a)));
      LPGAME_CHECK(dot(y, b) < 0);
      return Alternative<Vec, Vec>::right(std::move(y));
    }
  }
  throw std::logic_error("farkas: unreachable");
}

Alternative<Vec, Vec> ville(const Mat& a) {
  GameSolution solution = solve_game(ZeroSumGame(a));
  if (solution.value <= 0) {
    Vec x = solution.col_strategy.probs();
    LPGAME_CHECK(is_nonneg(x));
    LPGAME_CHECK(!is_zero(x));
    LPGAME_CHECK(is_nonneg(-(a * x)));
    return Alternative<Vec, Vec>::left(std::move(x));
  }
  Vec y = solution.row_strategy.probs();
  LPGAME_CHECK(is_nonneg(y));
  LPGAME_CHECK(is_positive(left_mul(y, a)));
  return Alternative<Vec, Vec>::right(std::move(y));
}

Alternative<Vec, Vec> gordan(const Mat& a, GordanMethod method) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  auto verified_left = [&](Vec x) {
    LPGAME_CHECK(is_zero(a * x));
    LPGAME_CHECK(is_nonneg(x));
    LPGAME_CHECK(!is_zero(x));
    return Alternative<Vec, Vec>::left(std::move(x));
  };
  auto verified_right = [&](Vec y) {
    LPGAME_CHECK(is_positive(left_mul(y, a)));
    return Alternative<Vec, Vec>::right(std::move(y));
  };

  if (method == GordanMethod::ViaVille) {
    auto alt = ville(vstack(a, -a));
    if (alt.is_left()) return verified_left(alt.left_value());
    const Vec& split = alt.right_value();
    return verified_right(slice(split, 0, m) - slice(split, m, 2 * m));
  }

  // Stiemke applied to B^T for a nullspace basis B of A translates the
  // row-space/nullspace duality into Gordan's statement.
  std::vector<Vec> basis = nullspace_basis(a);
  Mat basis_mat(n, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::size_t i = 0; i < n; ++i) basis_mat(i, c) = basis[c][i];
  }
  auto alt = stiemke(basis_mat.transposed());
  if (alt.is_right()) {
    // x > 0 lies in the row space of A; lift it back to y.
    const Vec& x = alt.right_value();
    auto y = solve_linear(a.transposed(), x);
    LPGAME_CHECK(y.has_value());
    return verified_right(std::move(*y));
  }
  return verified_left(basis_mat * alt.left_value());
}

Alternative<Vec, Vec> stiemke(const Mat& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  // Right side: Ax = 0 with x >= 1 (scaling makes this equal to x > 0),
  // substituted as x = u + 1 with u >= 0.
  GeneralLP right;
  right.objective = Objective::Maximize;
  right.cost = Vec(n);
  right.constraints = a;
  right.row_sense.assign(m, RowSense::Eq);
  right.rhs = -(a * Vec::ones(n));
  right.var_bound.assign(n, VarBound::NonNegative);
  Vec u;
  if (feasible(right, &u)) {
    Vec x = u + Vec::ones(n);
    LPGAME_CHECK(is_zero(a * x));
    LPGAME_CHECK(is_positive(x));
    return Alternative<Vec, Vec>::right(std::move(x));
  }

  // Left side: y^T A >= 0^T with 1^T (A^T y) >= 1.
  GeneralLP left;
  left.objective = Objective::Maximize;
  left.cost = Vec(m);
  left.constraints = vstack(a.transposed(), [&] {
    Mat row(1, m);
    Vec a1 = a * Vec::ones(n);
    for (std::size_t i = 0; i < m; ++i) row(0, i) = a1[i];
    return row;
  }());
  left.row_sense.assign(n + 1, RowSense::Ge);
  left.rhs = Vec(n + 1);
  left.rhs[n] = 1;
  left.var_bound.assign(m, VarBound::Free);
  Vec y;
  bool ok = feasible(left, &y);
  LPGAME_CHECK(ok);
  Vec yta = left_mul(y, a);
  LPGAME_CHECK(is_nonneg(yta));
  LPGAME_CHECK(!is_zero(yta));
  return Alternative<Vec, Vec>::left(std::move(y));
}

TuckerLemmaCert tucker_lemma(const Mat& a, std::size_t j, TuckerVariant variant) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  switch (variant) {
    case TuckerVariant::Eq: {
      if (j >= n) throw std::out_of_range("tucker_lemma: column index");
      std::vector<std::size_t> others;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) others.push_back(c);
      }
      auto alt = farkas(select_cols(a, others), -a.col(j), FarkasVariant::Eq);
      Vec x(n);
      Vec y(m);
      if (alt.is_left()) {
        x[j] = 1;
        for (std::size_t c = 0; c < others.size(); ++c) x[others[c]] = alt.left_value()[c];
      } else {
        y = alt.right_value();
      }
      Vec yta = left_mul(y, a);
      LPGAME_CHECK(is_nonneg(yta));
      LPGAME_CHECK(is_nonneg(x));
      LPGAME_CHECK(is_zero(a * x));
      LPGAME_CHECK(x[j] + yta[j] > 0);
      return {std::move(y), std::move(x)};
    }
    case TuckerVariant::Ineq: {
      if (j >= n) throw std::out_of_range("tucker_lemma: column index");
      TuckerLemmaCert aug = tucker_lemma(hstack(Mat::identity(m), a), m + j, TuckerVariant::Eq);
      Vec x = slice(aug.x, m, m + n);
      Vec y = std::move(aug.y);
      Vec yta = left_mul(y, a);
      LPGAME_CHECK(is_nonneg(y));
      LPGAME_CHECK(is_nonneg(yta));
      LPGAME_CHECK(is_nonneg(x));
      LPGAME_CHECK(is_nonneg(-(a * x)));
      LPGAME_CHECK(x[j] + yta[j] > 0);
      return {std::move(y), std::move(x)};
    }
    case TuckerVariant::Skew: {
      if (!is_skew_symmetric(a)) {
        throw std::invalid_argument("tucker_lemma: skew variant needs a skew-symmetric matrix");
      }
      const std::size_t k = a.rows();
      TuckerLemmaCert cert = tucker_lemma(a, k - 1, TuckerVariant::Ineq);
      Vec z = cert.x + cert.y;
      Vec bz = a * z;
      LPGAME_CHECK(is_nonneg(z));
      LPGAME_CHECK(is_nonneg(-bz));
      LPGAME_CHECK(z[k - 1] - bz[k - 1] > 0);
      return cert;
    }
  }
  throw std::logic_error("tucker_lemma: unreachable");
}

namespace {

TuckerPartition verified_partition(const Mat& a, Vec x, Vec y) {
  Vec yta = left_mul(y, a);
  LPGAME_CHECK(is_nonneg(yta));
  LPGAME_CHECK(is_nonneg(x));
  LPGAME_CHECK(is_zero(a * x));
  std::vector<std::size_t> support = support_of(x);
  std::size_t next = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    LPGAME_CHECK(x[j] + yta[j] > 0);
    if (next < support.size() && support[next] == j) {
      LPGAME_CHECK(yta[j] == 0);
      ++next;
    } else {
      LPGAME_CHECK(yta[j] > 0);
    }
  }
  return {std::move(support), std::move(x), std::move(y)};
}

}  // namespace

TuckerPartition tucker_theorem(const Mat& a, TuckerMethod method) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  if (method == TuckerMethod::Summation) {
    Vec x(n);
    Vec y(m);
    for (std::size_t j = 0; j < n; ++j) {
      TuckerLemmaCert cert = tucker_lemma(a, j, TuckerVariant::Eq);
      x = x + cert.x;
      y = y + cert.y;
    }
    return verified_partition(a, std::move(x), std::move(y));
  }

  // Elimination: the maximal support of {x >= 0 : Ax = 0}, one feasibility
  // problem per column, witnesses summed.
  Vec x_tilde(n);
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < n; ++j) {
    GeneralLP member;
    member.objective = Objective::Maximize;
    member.cost = Vec(n);
    member.constraints = vstack(a, [&] {
      Mat row(1, n);
      row(0, j) = 1;
      return row;
    }());
    member.row_sense.assign(m, RowSense::Eq);
    member.row_sense.push_back(RowSense::Ge);
    member.rhs = Vec(m + 1);
    member.rhs[m] = 1;
    member.var_bound.assign(n, VarBound::NonNegative);
    Vec witness;
    if (feasible(member, &witness)) {
      x_tilde = x_tilde + witness;
      support.push_back(j);
    }
  }
  LPGAME_CHECK(support_of(x_tilde) == support);

  if (support.size() == n) {
    return verified_partition(a, std::move(x_tilde), Vec(m));
  }

  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::binary_search(support.begin(), support.end(), j)) complement.push_back(j);
  }

  // Eliminate the supported columns: pick a maximal independent set of rows
  // of A_S (they go last), express the remaining rows of A_S in terms of
  // them, and clear them out with the invertible transform C. Gordan's
  // theorem applied to the top block of C A_J supplies the dual vector.
  Mat a_s = select_cols(a, support);
  Mat a_j = select_cols(a, complement);
  // Lexicographically first maximal independent row set of A_S, greedily.
  std::vector<std::size_t> pivot_rows;
  for (std::size_t i = 0; i < a_s.rows(); ++i) {
    pivot_rows.push_back(i);
    if (rank(select_rows(a_s, pivot_rows)) != pivot_rows.size()) pivot_rows.pop_back();
  }
  const std::size_t k = pivot_rows.size();
  LPGAME_CHECK(k == rank(a_s));
  LPGAME_CHECK(k < m);

  std::vector<std::size_t> perm;
  {
    std::vector<bool> is_pivot(m, false);
    for (std::size_t i : pivot_rows) is_pivot[i] = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_pivot[i]) perm.push_back(i);
    }
    for (std::size_t i : pivot_rows) perm.push_back(i);
  }

  Mat f = select_rows(a_s, pivot_rows);
  Mat c_mat = Mat::identity(m);
  for (std::size_t i = 0; i + k < m; ++i) {
    auto z = solve_linear(f.transposed(), a_s.row(perm[i]));
    LPGAME_CHECK(z.has_value());
    for (std::size_t col = 0; col < k; ++col) c_mat(i, m - k + col) = -(*z)[col];
  }

  Mat a_s_perm = select_rows(a_s, perm);
  Mat a_j_perm = select_rows(a_j, perm);
  Mat cas = c_mat * a_s_perm;
  Mat caj = c_mat * a_j_perm;
  for (std::size_t i = 0; i + k < m; ++i) {
    LPGAME_CHECK(is_zero(cas.row(i)));
  }

  std::vector<std::size_t> top(m - k);
  for (std::size_t i = 0; i + k < m; ++i) top[i] = i;
  Mat d_block = select_rows(caj, top);

  auto alt = gordan(d_block, GordanMethod::ViaVille);
  LPGAME_CHECK(alt.is_right());
  Vec w = alt.right_value();

  Vec y_perm = left_mul(concat(w, Vec(k)), c_mat);
  Vec y(m);
  for (std::size_t i = 0; i < m; ++i) y[perm[i]] = y_perm[i];

  return verified_partition(a, std::move(x_tilde), std::move(y));
}

Vec skew_tucker(const Mat& b) {
  if (!is_skew_symmetric(b)) {
    throw std::invalid_argument("skew_tucker: matrix must be skew-symmetric");
  }
  const std::size_t k = b.rows();
  TuckerPartition part = tucker_theorem(hstack(Mat::identity(k), b), TuckerMethod::Elimination);
  Vec z = slice(part.x, k, 2 * k) + part.y;
  Vec bz = b * z;
  LPGAME_CHECK(is_nonneg(z));
  LPGAME_CHECK(is_nonneg(-bz));
  LPGAME_CHECK(is_positive(z - bz));
  return z;
}

std::pair<Vec, Vec> strict_complementary_pair(const IneqLP& lp) {
  auto [verdict, value] = solve_lp_via_bm(lp);
  if (!verdict.is_optimal_pair()) {
    throw InfeasibleSideError("strict_complementary_pair: an LP side is infeasible");
  }

  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_vars();
  Vec z = skew_tucker(build_dantzig(lp).payoff);
  Rat t = z[m + n];
  LPGAME_CHECK(t > 0);
  Vec x = slice(z, m, m + n) / t;
  Vec y = slice(z, 0, m) / t;

  Vec primal_slack = lp.b - lp.a * x;
  Vec dual_slack = left_mul(y, lp.a) - lp.c;
  LPGAME_CHECK(is_nonneg(x));
  LPGAME_CHECK(is_nonneg(y));
  LPGAME_CHECK(is_nonneg(primal_slack));
  LPGAME_CHECK(is_nonneg(dual_slack));
  LPGAME_CHECK(dot(lp.c, x) == dot(y, lp.b));
  LPGAME_CHECK(is_positive(y + primal_slack));
  LPGAME_CHECK(is_positive(x + dual_slack));
  return {std::move(x), std::move(y)};
}

PairReport verify_optimal_pair(const IneqLP& lp, const Vec& x, const Vec& y, bool strict) {
  if (x.dim() != lp.num_vars() || y.dim() != lp.num_rows()) {
    throw DimensionError("verify_optimal_pair: vector dimensions");
  }
  PairReport report{true, "", {}};
  auto add = [&](std::string name, bool pass, std::string detail) {
    if (!pass && report.pass) {
      report.pass = false;
      report.first_violation = name;
    }
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  Vec primal_slack = lp.b - lp.a * x;
  Vec dual_slack = left_mul(y, lp.a) - lp.c;
  Rat cx = dot(lp.c, x);
  Rat by = dot(y, lp.b);

  {
    bool pass = is_nonneg(x) && is_nonneg(primal_slack);
    std::string detail;
    for (std::size_t j = 0; j < x.dim() && detail.empty(); ++j) {
      if (x[j] < 0) detail = "x_" + std::to_string(j + 1) + " < 0";
    }
    for (std::size_t i = 0; i < primal_slack.dim() && detail.empty(); ++i) {
      if (primal_slack[i] < 0) detail = "row " + std::to_string(i + 1) + " violated";
    }
    add("primal feasibility", pass, detail);
  }
  {
    bool pass = is_nonneg(y) && is_nonneg(dual_slack);
    std::string detail;
    for (std::size_t i = 0; i < y.dim() && detail.empty(); ++i) {
      if (y[i] < 0) detail = "y_" + std::to_string(i + 1) + " < 0";
    }
    for (std::size_t j = 0; j < dual_slack.dim() && detail.empty(); ++j) {
      if (dual_slack[j] < 0) detail = "column " + std::to_string(j + 1) + " violated";
    }
    add("dual feasibility", pass, detail);
  }
  add("weak duality", cx <= by, cx <= by ? "" : "c^T x > y^T b");
  add("zero gap", cx == by, cx == by ? "" : "gap " + rat_to_string(by - cx));
  {
    std::string detail;
    for (std::size_t i = 0; i < y.dim() && detail.empty(); ++i) {
      if (y[i] * primal_slack[i] != 0) detail = "row " + std::to_string(i + 1);
    }
    for (std::size_t j = 0; j < x.dim() && detail.empty(); ++j) {
      if (dual_slack[j] * x[j] != 0) detail = "column " + std::to_string(j + 1);
    }
    add("complementary slackness", detail.empty(), detail);
  }
  if (strict) {
    std::string detail;
    for (std::size_t i = 0; i < y.dim() && detail.empty(); ++i) {
      if (y[i] + primal_slack[i] <= 0) detail = "row " + std::to_string(i + 1);
    }
    for (std::size_t j = 0; j < x.dim() && detail.empty(); ++j) {
      if (x[j] + dual_slack[j] <= 0) detail = "column " + std::to_string(j + 1);
    }
    add("strict complementarity", detail.empty(), detail);
  }
  return report;
}

}  // namespace lpgame
