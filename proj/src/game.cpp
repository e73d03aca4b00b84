#include "lpgame/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpgame/errors.hpp"
#include "lpgame/simplex.hpp"

namespace lpgame {

ZeroSumGame::ZeroSumGame(Mat p) : payoff(std::move(p)) {
  if (payoff.rows() == 0 || payoff.cols() == 0) {
    throw std::invalid_argument("ZeroSumGame: payoff matrix must be nonempty");
  }
}

MixedStrategy::MixedStrategy(Vec probs) : probs_(std::move(probs)) {
  if (!is_nonneg(probs_) || sum(probs_) != 1) {
    throw std::invalid_argument("MixedStrategy: entries must be nonnegative and sum to 1");
  }
}

GameSolution::GameSolution(const ZeroSumGame& game, Rat v, MixedStrategy row,
                           MixedStrategy col)
    : value(std::move(v)), row_strategy(std::move(row)), col_strategy(std::move(col)) {
  LPGAME_CHECK(row_strategy.dim() == game.num_rows());
  LPGAME_CHECK(col_strategy.dim() == game.num_cols());
  Vec guarantee = left_mul(row_strategy.probs(), game.payoff);
  for (std::size_t j = 0; j < game.num_cols(); ++j) LPGAME_CHECK(guarantee[j] >= value);
  Vec cost = game.payoff * col_strategy.probs();
  for (std::size_t i = 0; i < game.num_rows(); ++i) LPGAME_CHECK(cost[i] <= value);
}

Rat best_response_value(const ZeroSumGame& game, const MixedStrategy& x) {
  if (x.dim() != game.num_cols()) {
    throw DimensionError("best_response_value: strategy dimension");
  }
  Vec ax = game.payoff * x.probs();
  Rat best = ax[0];
  for (std::size_t i = 1; i < ax.dim(); ++i) best = std::max(best, ax[i]);
  return best;
}

ZeroSumGame shift_payoffs(const ZeroSumGame& game, const Rat& alpha) {
  Mat shifted = game.payoff;
  for (std::size_t i = 0; i < shifted.rows(); ++i) {
    for (std::size_t j = 0; j < shifted.cols(); ++j) shifted(i, j) += alpha;
  }
  return ZeroSumGame(std::move(shifted));
}

GameSolution solve_game(const ZeroSumGame& game) {
  const std::size_t m = game.num_rows();
  const std::size_t n = game.num_cols();

  // minimize v subject to Ax <= 1v, 1^T x = 1, x >= 0, v free.
  GeneralLP lp;
  lp.objective = Objective::Minimize;
  lp.cost = Vec::unit(n + 1, n);
  lp.constraints = Mat(m + 1, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.constraints(i, j) = game.payoff(i, j);
    lp.constraints(i, n) = -1;
  }
  for (std::size_t j = 0; j < n; ++j) lp.constraints(m, j) = 1;
  lp.row_sense.assign(m, RowSense::Le);
  lp.row_sense.push_back(RowSense::Eq);
  lp.rhs = Vec(m + 1);
  lp.rhs[m] = 1;
  lp.var_bound.assign(n, VarBound::NonNegative);
  lp.var_bound.push_back(VarBound::Free);

  SimplexOutcome outcome = simplex_solve(lp);
  LPGAME_CHECK(outcome.is_optimal());
  const OptimalResult& opt = outcome.optimal();

  // The dual of the m payoff rows is -1 times the max-min strategy; the
  // free variable v forces its components to sum to one.
  Vec row_probs(m);
  for (std::size_t i = 0; i < m; ++i) row_probs[i] = -opt.y[i];

  Rat value = opt.value;
  if (is_skew_symmetric(game.payoff)) LPGAME_CHECK(value == 0);

  return GameSolution(game, value, MixedStrategy(std::move(row_probs)),
                      MixedStrategy(slice(opt.x, 0, n)));
}

namespace {

template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    bool done = true;
    while (i > 0) {
      --i;
      if (idx[i] < n - k + i) {
        done = false;
        break;
      }
    }
    if (done) return;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Vertices of {p >= 0, sum p = 1, sign * (p^T M)_j >= sign * v for all j}:
// for every support R and tight-column set C with |C| = |R| - 1, solve the
// square equalization system; a nonsingular system whose solution is
// feasible is a vertex, and every vertex arises this way.
std::vector<Vec> enumerate_polytope_vertices(const Mat& payoff_for_player,
                                             const Rat& v, int sign) {
  const std::size_t m = payoff_for_player.rows();
  const std::size_t n = payoff_for_player.cols();
  std::vector<Vec> vertices;

  for (std::size_t s = 1; s <= m; ++s) {
    for_each_combination(m, s, [&](const std::vector<std::size_t>& support) {
      for_each_combination(n, s - 1, [&](const std::vector<std::size_t>& tight) {
        Mat system(s, s);
        Vec rhs(s);
        for (std::size_t j = 0; j < s; ++j) system(0, j) = 1;
        rhs[0] = 1;
        for (std::size_t r = 0; r + 1 < s; ++r) {
          for (std::size_t j = 0; j < s; ++j) {
            system(r + 1, j) = payoff_for_player(support[j], tight[r]);
          }
          rhs[r + 1] = v;
        }
        auto inv = inverse(system);
        if (!inv.has_value()) return;
        Vec p_support = *inv * rhs;
        if (!is_nonneg(p_support)) return;
        Vec p(m);
        for (std::size_t j = 0; j < s; ++j) p[support[j]] = p_support[j];
        Vec values = left_mul(p, payoff_for_player);
        for (std::size_t j = 0; j < n; ++j) {
          if (Rat(sign) * values[j] < Rat(sign) * v) return;
        }
        vertices.push_back(std::move(p));
      });
    });
  }

  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace

std::vector<std::pair<MixedStrategy, MixedStrategy>> enumerate_optimal_supports(
    const ZeroSumGame& game, std::size_t cap_dim) {
  if (game.num_rows() + game.num_cols() > cap_dim) {
    throw CapExceededError("enumerate_optimal_supports: rows + cols exceeds cap");
  }
  GameSolution solution = solve_game(game);

  // Row player: y^T A >= v per column. Column player: x^T A^T <= v per row.
  std::vector<Vec> row_vertices =
      enumerate_polytope_vertices(game.payoff, solution.value, +1);
  std::vector<Vec> col_vertices =
      enumerate_polytope_vertices(game.payoff.transposed(), solution.value, -1);
  LPGAME_CHECK(!row_vertices.empty());
  LPGAME_CHECK(!col_vertices.empty());

  std::vector<std::pair<MixedStrategy, MixedStrategy>> pairs;
  for (const Vec& y : row_vertices) {
    for (const Vec& x : col_vertices) {
      pairs.emplace_back(MixedStrategy(y), MixedStrategy(x));
    }
  }
  return pairs;
}

}  // namespace lpgame
