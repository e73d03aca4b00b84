#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "lpgame/game.hpp"
#include "lpgame/linalg.hpp"

namespace lpgame {

/// Inequality-form LP: maximize c^T x subject to Ax <= b, x >= 0, with the
/// dual minimize y^T b subject to y^T A >= c^T, y >= 0.
struct IneqLP {
  Mat a;
  Vec b;
  Vec c;

  IneqLP(Mat a_, Vec b_, Vec c_);
  std::size_t num_rows() const { return a.rows(); }
  std::size_t num_vars() const { return a.cols(); }
};

/// Optimal primal/dual pair with exact objective equality.
struct OptimalPair {
  Vec x;
  Vec y;
  Rat value;
};

/// Certificate that the LP pair has no optimum:
///   Ax <= 0, x >= 0, A^T y >= 0, y >= 0, b^T y - c^T x < 0.
/// c^T x > 0 makes the primal unbounded if feasible (so the dual is
/// infeasible); b^T y < 0 makes the dual unbounded if feasible.
struct NoOptimumCert {
  Vec x;
  Vec y;
  bool primal_unbounded_if_feasible;
  bool dual_unbounded_if_feasible;
};

class LpVerdict {
 public:
  explicit LpVerdict(OptimalPair p) : payload_(std::move(p)) {}
  explicit LpVerdict(NoOptimumCert c) : payload_(std::move(c)) {}

  bool is_optimal_pair() const { return std::holds_alternative<OptimalPair>(payload_); }
  const OptimalPair& optimal_pair() const { return std::get<OptimalPair>(payload_); }
  const NoOptimumCert& no_optimum() const { return std::get<NoOptimumCert>(payload_); }

 private:
  std::variant<OptimalPair, NoOptimumCert> payload_;
};

/// Dantzig's skew-symmetric game on (m+n+1) strategies:
///   [  0    A   -b ]
///   [ -A^T  0    c ]
///   [  b^T -c^T  0 ]
ZeroSumGame build_dantzig(const IneqLP& lp);

enum class DantzigTag { OptimalPair, NoOptimumEvidence, Inconclusive };

struct DantzigInterpretation {
  DantzigTag tag;
  std::optional<OptimalPair> pair;
  std::optional<NoOptimumCert> evidence;
};

/// Reads an optimal strategy z = (y, x, t) of Dantzig's game. t > 0 yields
/// the optimal pair (x/t, y/t); (Bz)_k < 0 yields infeasibility evidence;
/// t = 0 with (Bz)_k = 0 is the documented inconclusive hole. Throws
/// std::invalid_argument when z is not optimal for B (checked via Bz <= 0).
DantzigInterpretation interpret_dantzig(const IneqLP& lp, const MixedStrategy& z);

/// The a-priori bound M = l! * l * alpha^l * beta^(l^2+l) + 1 with
/// l = m+n+1, alpha the largest absolute numerator and beta the largest
/// denominator over the entries of A, b, c.
Rat bound_M(const IneqLP& lp);

/// Dantzig's game extended with the enforcing row (1^T, 1^T, -M),
/// an (m+n+2) x (m+n+1) game. Requires M > 0.
ZeroSumGame build_bm(const IneqLP& lp, const Rat& m_bound);

/// The (k+2) x (k+1) game [[C, -d], [d^T, 0], [1^T, -M]] for skew-symmetric
/// C. Validates M >= 1^T z* + 1 against the basic minimizer from
/// basic_min_w and throws std::invalid_argument when M is too small.
ZeroSumGame build_dm(const Mat& c, const Vec& d, const Rat& m_bound);

/// End-to-end: solve the B_M game exactly and extract either the optimal
/// pair (value 0, from the min-max strategy, scaled by t > 0) or the
/// no-optimum certificate (value in (0,1), from a max-min strategy with
/// r = 0 and s = v). Returns the verdict and the game value. M defaults
/// to bound_M(lp); a caller-supplied M is validated against the basic
/// minimizer and rejected with std::invalid_argument when too small.
std::pair<LpVerdict, Rat> solve_lp_via_bm(const IneqLP& lp,
                                          std::optional<Rat> m_bound = std::nullopt);

/// Least w >= 0 such that Ax <= b + 1w, x >= 0 and A^T y >= c - 1w, y >= 0
/// are both feasible. When solve_lp_via_bm reports game value v > 0 under
/// bound M, this equals (M+1)/(1/v - 1) exactly.
Rat min_slack_w(const IneqLP& lp);

/// Brooks-Reny game P with its scale constant alpha. alpha enumerates all
/// invertible square submatrices of the stacked matrix A-hat, so the
/// construction is capped at m+n+1 <= cap_dim.
struct BrooksRenyGame {
  ZeroSumGame game;
  Rat alpha;
};
BrooksRenyGame build_brooks_reny(const IneqLP& lp, std::size_t cap_dim = 8);

}  // namespace lpgame
