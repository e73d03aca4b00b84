#pragma once

#include <utility>
#include <vector>

#include "lpgame/linalg.hpp"

namespace lpgame {

/// Matrix game: rows are the maximizer's pure strategies, columns the
/// minimizer's. At least one row and one column.
struct ZeroSumGame {
  Mat payoff;

  explicit ZeroSumGame(Mat p);
  std::size_t num_rows() const { return payoff.rows(); }
  std::size_t num_cols() const { return payoff.cols(); }
};

/// Probability vector: nonnegative entries summing to exactly one.
class MixedStrategy {
 public:
  explicit MixedStrategy(Vec probs);
  const Vec& probs() const { return probs_; }
  std::size_t dim() const { return probs_.dim(); }
  const Rat& operator[](std::size_t i) const { return probs_[i]; }
  bool operator==(const MixedStrategy& o) const { return probs_ == o.probs_; }

 private:
  Vec probs_;
};

/// Exact game value with one strategy per player. Construction verifies
/// row_strategy^T A >= value 1^T and A col_strategy <= 1 value.
struct GameSolution {
  Rat value;
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;

  GameSolution(const ZeroSumGame& game, Rat v, MixedStrategy row, MixedStrategy col);
};

/// max_i (A x)_i, the payoff of a best response against the column mix x.
Rat best_response_value(const ZeroSumGame& game, const MixedStrategy& x);

/// Adds alpha to every payoff; optimal strategies are unchanged and the
/// value shifts by alpha.
ZeroSumGame shift_payoffs(const ZeroSumGame& game, const Rat& alpha);

/// Solves the game exactly through the LP "minimize v subject to
/// Ax <= 1v, x in X" whose dual carries the row player's strategy.
/// Skew-symmetric games are asserted to have value exactly zero.
GameSolution solve_game(const ZeroSumGame& game);

/// All vertex optimal strategies of both players, paired as the cross
/// product of the two (deduplicated, lexicographically ordered) vertex
/// lists. Enumerates support/tight-column subsets and solves the resulting
/// square equalization systems; singular subsets are skipped. Throws
/// CapExceededError when rows + cols > cap_dim.
std::vector<std::pair<MixedStrategy, MixedStrategy>> enumerate_optimal_supports(
    const ZeroSumGame& game, std::size_t cap_dim = 10);

}  // namespace lpgame
