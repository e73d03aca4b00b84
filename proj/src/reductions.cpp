#include "lpgame/reductions.hpp"

#include <stdexcept>

#include "lpgame/errors.hpp"
#include "lpgame/simplex.hpp"

namespace lpgame {

IneqLP::IneqLP(Mat a_, Vec b_, Vec c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (b.dim() != a.rows()) throw DimensionError("IneqLP: dim(b) != rows(A)");
  if (c.dim() != a.cols()) throw DimensionError("IneqLP: dim(c) != cols(A)");
}

namespace {

void verify_pair(const IneqLP& lp, const Vec& x, const Vec& y, const Rat& value) {
  LPGAME_CHECK(is_nonneg(x));
  LPGAME_CHECK(is_nonneg(y));
  Vec ax = lp.a * x;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) LPGAME_CHECK(ax[i] <= lp.b[i]);
  Vec yta = left_mul(y, lp.a);
  for (std::size_t j = 0; j < lp.num_vars(); ++j) LPGAME_CHECK(yta[j] >= lp.c[j]);
  LPGAME_CHECK(dot(lp.c, x) == value);
  LPGAME_CHECK(dot(y, lp.b) == value);
}

NoOptimumCert make_witness(const IneqLP& lp, Vec x, Vec y) {
  LPGAME_CHECK(is_nonneg(x));
  LPGAME_CHECK(is_nonneg(y));
  LPGAME_CHECK(is_nonneg(-(lp.a * x)));
  LPGAME_CHECK(is_nonneg(left_mul(y, lp.a)));
  Rat cx = dot(lp.c, x);
  Rat by = dot(y, lp.b);
  LPGAME_CHECK(by - cx < 0);
  return NoOptimumCert{std::move(x), std::move(y), cx > 0, by < 0};
}

}  // namespace

ZeroSumGame build_dantzig(const IneqLP& lp) {
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_vars();
  const std::size_t k = m + n + 1;
  Mat payoff(k, k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      payoff(i, m + j) = lp.a(i, j);
      payoff(m + j, i) = -lp.a(i, j);
    }
    payoff(i, k - 1) = -lp.b[i];
    payoff(k - 1, i) = lp.b[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    payoff(m + j, k - 1) = lp.c[j];
    payoff(k - 1, m + j) = -lp.c[j];
  }
  LPGAME_CHECK(is_skew_symmetric(payoff));
  return ZeroSumGame(std::move(payoff));
}

DantzigInterpretation interpret_dantzig(const IneqLP& lp, const MixedStrategy& z) {
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_vars();
  const std::size_t k = m + n + 1;
  if (z.dim() != k) throw DimensionError("interpret_dantzig: strategy dimension");

  ZeroSumGame game = build_dantzig(lp);
  Vec bz = game.payoff * z.probs();
  if (!is_nonneg(-bz)) {
    throw std::invalid_argument("interpret_dantzig: z is not optimal for B");
  }

  Vec y = slice(z.probs(), 0, m);
  Vec x = slice(z.probs(), m, m + n);
  Rat t = z[k - 1];

  if (t > 0) {
    Vec xs = x / t;
    Vec ys = y / t;
    Rat value = dot(lp.c, xs);
    verify_pair(lp, xs, ys, value);
    return {DantzigTag::OptimalPair, OptimalPair{std::move(xs), std::move(ys), std::move(value)},
            std::nullopt};
  }
  if (bz[k - 1] < 0) {
    LPGAME_CHECK(t == 0);
    return {DantzigTag::NoOptimumEvidence, std::nullopt,
            make_witness(lp, std::move(x), std::move(y))};
  }
  return {DantzigTag::Inconclusive, std::nullopt, std::nullopt};
}

Rat bound_M(const IneqLP& lp) {
  Int alpha = 0;
  Int beta = 1;
  auto account = [&](const Rat& q) {
    Int num = abs(q.get_num());
    if (num > alpha) alpha = num;
    if (q.get_den() > beta) beta = q.get_den();
  };
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    for (std::size_t j = 0; j < lp.num_vars(); ++j) account(lp.a(i, j));
  }
  for (const Rat& q : lp.b) account(q);
  for (const Rat& q : lp.c) account(q);

  const unsigned long ell = static_cast<unsigned long>(lp.num_rows() + lp.num_vars() + 1);
  Int fac;
  mpz_fac_ui(fac.get_mpz_t(), ell);
  Int alpha_pow;
  mpz_pow_ui(alpha_pow.get_mpz_t(), alpha.get_mpz_t(), ell);
  Int beta_pow;
  mpz_pow_ui(beta_pow.get_mpz_t(), beta.get_mpz_t(), ell * ell + ell);
  Int m = fac * ell * alpha_pow * beta_pow + 1;
  return Rat(m);
}

ZeroSumGame build_bm(const IneqLP& lp, const Rat& m_bound) {
  if (m_bound <= 0) throw std::invalid_argument("build_bm: M must be positive");
  const std::size_t k = lp.num_rows() + lp.num_vars() + 1;
  Mat top = build_dantzig(lp).payoff;
  Mat payoff(k + 1, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) payoff(i, j) = top(i, j);
  }
  for (std::size_t j = 0; j + 1 < k; ++j) payoff(k, j) = 1;
  payoff(k, k - 1) = -m_bound;
  return ZeroSumGame(std::move(payoff));
}

ZeroSumGame build_dm(const Mat& c, const Vec& d, const Rat& m_bound) {
  if (!is_skew_symmetric(c)) {
    throw std::invalid_argument("build_dm: C must be skew-symmetric");
  }
  if (d.dim() != c.rows()) throw DimensionError("build_dm: dim(d) != rows(C)");
  auto [basic, w_star] = basic_min_w(c, d);
  Rat z_mass = sum(slice(basic.solution, 0, c.rows()));
  if (m_bound < z_mass + 1) {
    throw std::invalid_argument("build_dm: M violates M >= 1^T z* + 1");
  }
  const std::size_t k = c.rows();
  Mat payoff(k + 2, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) payoff(i, j) = c(i, j);
    payoff(i, k) = -d[i];
    payoff(k, i) = d[i];
    payoff(k + 1, i) = 1;
  }
  payoff(k + 1, k) = -m_bound;
  return ZeroSumGame(std::move(payoff));
}

std::pair<LpVerdict, Rat> solve_lp_via_bm(const IneqLP& lp, std::optional<Rat> m_bound) {
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_vars();
  Rat big;
  if (m_bound.has_value()) {
    // A caller-supplied M is validated against the basic minimizer the same
    // way build_dm validates it, so a too-small M surfaces as an input
    // error rather than a failed extraction.
    Mat c(m + n, m + n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        c(i, m + j) = lp.a(i, j);
        c(m + j, i) = -lp.a(i, j);
      }
    }
    auto [basic, w_star] = basic_min_w(c, concat(lp.b, -lp.c));
    if (*m_bound < sum(slice(basic.solution, 0, m + n)) + 1) {
      throw std::invalid_argument("solve_lp_via_bm: M violates M >= 1^T z* + 1");
    }
    big = *m_bound;
  } else {
    big = bound_M(lp);
  }
  ZeroSumGame game = build_bm(lp, big);
  GameSolution solution = solve_game(game);
  const Rat& v = solution.value;
  LPGAME_CHECK(v >= 0);

  if (v == 0) {
    const Vec& z = solution.col_strategy.probs();
    Vec y = slice(z, 0, m);
    Vec x = slice(z, m, m + n);
    Rat t = z[m + n];
    LPGAME_CHECK(t > 0);
    Vec xs = x / t;
    Vec ys = y / t;
    Rat value = dot(lp.c, xs);
    verify_pair(lp, xs, ys, value);
    return {LpVerdict(OptimalPair{std::move(xs), std::move(ys), std::move(value)}), v};
  }

  const Vec& q = solution.row_strategy.probs();
  Vec y = slice(q, 0, m);
  Vec x = slice(q, m, m + n);
  Rat r = q[m + n];
  Rat s = q[m + n + 1];
  LPGAME_CHECK(r == 0);
  LPGAME_CHECK(s == v);
  LPGAME_CHECK(v < 1);
  return {LpVerdict(make_witness(lp, std::move(x), std::move(y))), v};
}

Rat min_slack_w(const IneqLP& lp) {
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_vars();

  // minimize w subject to Ax - 1w <= b, -A^T y - 1w <= -c, x, y, w >= 0.
  GeneralLP feas;
  feas.objective = Objective::Minimize;
  feas.cost = Vec::unit(n + m + 1, n + m);
  feas.constraints = Mat(m + n, n + m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) feas.constraints(i, j) = lp.a(i, j);
    feas.constraints(i, n + m) = -1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) feas.constraints(m + j, n + i) = -lp.a(i, j);
    feas.constraints(m + j, n + m) = -1;
  }
  feas.row_sense.assign(m + n, RowSense::Le);
  feas.rhs = concat(lp.b, -lp.c);
  feas.var_bound.assign(n + m + 1, VarBound::NonNegative);

  SimplexOutcome outcome = simplex_solve(feas);
  LPGAME_CHECK(outcome.is_optimal());
  return outcome.optimal().value;
}

BrooksRenyGame build_brooks_reny(const IneqLP& lp, std::size_t cap_dim) {
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_vars();
  if (m + n + 1 > cap_dim) {
    throw CapExceededError("build_brooks_reny: m + n + 1 exceeds cap");
  }

  // A-hat stacks [0 -A^T; A 0; -c^T b^T], (n+m+1) x (n+m).
  Mat ahat(n + m + 1, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ahat(j, n + i) = -lp.a(i, j);
      ahat(n + i, j) = lp.a(i, j);
    }
    ahat(n + m, n + i) = lp.b[i];
  }
  for (std::size_t j = 0; j < n; ++j) ahat(n + m, j) = -lp.c[j];

  const std::size_t r = rank(ahat);

  Rat data_norm = 0;
  for (const Rat& q : lp.b) data_norm = std::max(data_norm, Rat(abs(q)));
  for (const Rat& q : lp.c) data_norm = std::max(data_norm, Rat(abs(q)));

  // Largest inverse entry over all invertible square submatrices.
  Rat max_inv = 0;
  std::vector<std::size_t> row_pick;
  std::vector<std::size_t> col_pick;
  auto scan_cols = [&](auto&& self, std::size_t start, std::size_t want) -> void {
    if (want == 0) {
      auto inv = inverse(select_cols(select_rows(ahat, row_pick), col_pick));
      if (!inv.has_value()) return;
      for (std::size_t i = 0; i < inv->rows(); ++i) {
        for (std::size_t j = 0; j < inv->cols(); ++j) {
          max_inv = std::max(max_inv, Rat(abs((*inv)(i, j))));
        }
      }
      return;
    }
    for (std::size_t c = start; c + want <= ahat.cols(); ++c) {
      col_pick.push_back(c);
      self(self, c + 1, want - 1);
      col_pick.pop_back();
    }
  };
  auto scan_rows = [&](auto&& self, std::size_t start, std::size_t want, std::size_t size) -> void {
    if (want == 0) {
      scan_cols(scan_cols, 0, size);
      return;
    }
    for (std::size_t i = start; i + want <= ahat.rows(); ++i) {
      row_pick.push_back(i);
      self(self, i + 1, want - 1, size);
      row_pick.pop_back();
    }
  };
  for (std::size_t size = 1; size <= std::min(ahat.rows(), ahat.cols()); ++size) {
    scan_rows(scan_rows, 0, size, size);
  }

  Rat alpha = Rat(2) * Rat(static_cast<long>(r * r)) * data_norm * max_inv + 1;

  // P = alpha * [0 -A^T 0; A 0 0; -c^T b^T 0] + [c; -b; 0] 1^T.
  const std::size_t dim = n + m + 1;
  Mat payoff(dim, dim);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      payoff(j, n + i) = -alpha * lp.a(i, j);
      payoff(n + i, j) = alpha * lp.a(i, j);
    }
    payoff(dim - 1, n + i) = alpha * lp.b[i];
  }
  for (std::size_t j = 0; j < n; ++j) payoff(dim - 1, j) = -alpha * lp.c[j];
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t j = 0; j < n; ++j) payoff(j, col) += lp.c[j];
    for (std::size_t i = 0; i < m; ++i) payoff(n + i, col) -= lp.b[i];
  }
  return BrooksRenyGame{ZeroSumGame(std::move(payoff)), std::move(alpha)};
}

}  // namespace lpgame
