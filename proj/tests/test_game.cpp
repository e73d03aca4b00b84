#include <doctest.h>

#include "lpgame/errors.hpp"
#include "lpgame/game.hpp"
#include "lpgame/simplex.hpp"
#include "support.hpp"

using namespace lpgame;
using namespace lpgame::testing;

namespace {

// Positivity-shift route: shift the payoffs until positive, solve the
// normalized LP pair max 1^T x s.t. Ax <= 1 and its dual, and undo the
// shift. Used as a second route to the value.
Rat solve_game_via_shift(const Mat& payoff) {
  Rat shift = 1;
  for (std::size_t i = 0; i < payoff.rows(); ++i) {
    for (std::size_t j = 0; j < payoff.cols(); ++j) {
      shift = std::max(shift, Rat(1 - payoff(i, j)));
    }
  }
  ZeroSumGame shifted = shift_payoffs(ZeroSumGame(payoff), shift);

  GeneralLP lp1;
  lp1.objective = Objective::Maximize;
  lp1.cost = Vec::ones(payoff.cols());
  lp1.constraints = shifted.payoff;
  lp1.row_sense.assign(payoff.rows(), RowSense::Le);
  lp1.rhs = Vec::ones(payoff.rows());
  lp1.var_bound.assign(payoff.cols(), VarBound::NonNegative);
  auto outcome = simplex_solve(lp1);
  REQUIRE(outcome.is_optimal());
  const OptimalResult& opt = outcome.optimal();
  REQUIRE(opt.value > 0);

  // value of the shifted game is 1 / 1^T x; the dual lives on the rows.
  Rat value = 1 / opt.value;
  MixedStrategy col(opt.x * value);
  MixedStrategy row(opt.y * value);
  Vec guarantee = left_mul(row.probs(), shifted.payoff);
  for (const Rat& g : guarantee) CHECK(g >= value);
  Vec cost = shifted.payoff * col.probs();
  for (const Rat& g : cost) CHECK(g <= value);
  return value - shift;
}

}  // namespace

TEST_CASE("best_response_value") {
  ZeroSumGame i4{inst_i4()};
  CHECK(best_response_value(i4, MixedStrategy(Vec{R(1), R(0), R(0)})) == 1);
  CHECK(best_response_value(ZeroSumGame(mat({{0}})), MixedStrategy(Vec{R(1)})) == 0);
  ZeroSumGame pennies{mat({{1, -1}, {-1, 1}})};
  CHECK(best_response_value(pennies, MixedStrategy(Vec{R(1, 2), R(1, 2)})) == 0);
  CHECK_THROWS_AS(best_response_value(i4, MixedStrategy(Vec{R(1), R(0)})), DimensionError);
}

TEST_CASE("shift_payoffs") {
  CHECK(shift_payoffs(ZeroSumGame(mat({{0}})), R(5)).payoff == mat({{5}}));
  ZeroSumGame shifted = shift_payoffs(ZeroSumGame(mat({{1, -1}, {-1, 1}})), R(1));
  CHECK(shifted.payoff == mat({{2, 0}, {0, 2}}));
  CHECK(solve_game(shifted).value == 1);
  CHECK(shift_payoffs(ZeroSumGame(inst_i4()), R(0)).payoff == inst_i4());
}

TEST_CASE("solve_game on fixed games") {
  GameSolution i4 = solve_game(ZeroSumGame(inst_i4()));
  CHECK(i4.value == 1);
  CHECK(i4.col_strategy.probs() == (Vec{R(1), R(0), R(0)}));
  CHECK(i4.row_strategy.probs() == (Vec{R(1, 2), R(1, 2)}));

  CHECK(solve_game(ZeroSumGame(mat({{0, 1}, {-1, 0}}))).value == 0);
  GameSolution pure = solve_game(ZeroSumGame(mat({{3}})));
  CHECK(pure.value == 3);
  CHECK(pure.row_strategy.probs() == Vec{R(1)});
}

TEST_CASE("solve_game agrees with the kernel oracle and the shift route") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    Mat payoff = rng.rand_mat(1 + rng.index(3), 1 + rng.index(3));
    GameSolution solution = solve_game(ZeroSumGame(payoff));
    auto oracle = oracle_game(payoff);
    REQUIRE(oracle.has_value());
    CHECK(solution.value == oracle->value);
    CHECK(solution.value == solve_game_via_shift(payoff));
  }
}

TEST_CASE("skew-symmetric games have value zero and shareable strategies") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t k = 1 + rng.index(4);
    Mat upper = rng.rand_mat(k, k);
    Mat skew(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        skew(i, j) = upper(i, j);
        skew(j, i) = -upper(i, j);
      }
    }
    GameSolution solution = solve_game(ZeroSumGame(skew));
    CHECK(solution.value == 0);
    // the row optimal strategy works as a column strategy too
    CHECK(is_nonneg(-(skew * solution.row_strategy.probs())));
  }
}

TEST_CASE("enumerate_optimal_supports on fixed games") {
  auto trivial = enumerate_optimal_supports(ZeroSumGame(mat({{0}})));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].first.probs() == Vec{R(1)});
  CHECK(trivial[0].second.probs() == Vec{R(1)});

  auto unique = enumerate_optimal_supports(ZeroSumGame(mat({{1, 0}, {0, 1}})));
  REQUIRE(unique.size() == 1);
  CHECK(unique[0].first.probs() == (Vec{R(1, 2), R(1, 2)}));
  CHECK(unique[0].second.probs() == (Vec{R(1, 2), R(1, 2)}));

  ZeroSumGame i4{inst_i4()};
  auto pairs = enumerate_optimal_supports(i4);
  bool pure_col_seen = false;
  bool mixed_col_seen = false;
  for (const auto& [row, col] : pairs) {
    CHECK(best_response_value(i4, col) == 1);
    pure_col_seen = pure_col_seen || col.probs() == (Vec{R(1), R(0), R(0)});
    mixed_col_seen = mixed_col_seen || col.probs() == (Vec{R(0), R(1, 2), R(1, 2)});
  }
  CHECK(pure_col_seen);
  CHECK(mixed_col_seen);

  CHECK_THROWS_AS(enumerate_optimal_supports(ZeroSumGame(Mat(6, 6)), 10), CapExceededError);
}

TEST_CASE("shift preserves the vertex optimal strategies exactly") {
  Rng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    Mat payoff = rng.rand_mat(1 + rng.index(3), 1 + rng.index(3));
    Rat alpha = rng.entry();
    auto before = enumerate_optimal_supports(ZeroSumGame(payoff));
    auto after = enumerate_optimal_supports(shift_payoffs(ZeroSumGame(payoff), alpha));
    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
      CHECK(before[i].first == after[i].first);
      CHECK(before[i].second == after[i].second);
    }
    CHECK(solve_game(shift_payoffs(ZeroSumGame(payoff), alpha)).value ==
          solve_game(ZeroSumGame(payoff)).value + alpha);
  }
}

TEST_CASE("the simplex strategies appear among the enumerated vertices") {
  Rng rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    Mat payoff = rng.rand_mat(1 + rng.index(3), 1 + rng.index(3));
    GameSolution solution = solve_game(ZeroSumGame(payoff));
    auto pairs = enumerate_optimal_supports(ZeroSumGame(payoff));
    bool row_found = false, col_found = false;
    for (const auto& [row, col] : pairs) {
      row_found = row_found || row == solution.row_strategy;
      col_found = col_found || col == solution.col_strategy;
    }
    CHECK(row_found);
    CHECK(col_found);
  }
}

TEST_CASE("strategy validation") {
  CHECK_THROWS_AS(MixedStrategy(Vec{R(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy(Vec{R(-1), R(2)}), std::invalid_argument);
  CHECK_THROWS_AS(ZeroSumGame(Mat(0, 2)), std::invalid_argument);
}
