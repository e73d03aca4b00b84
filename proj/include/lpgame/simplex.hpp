#pragma once

#include <variant>
#include <vector>

#include "lpgame/linalg.hpp"

namespace lpgame {

enum class Objective { Maximize, Minimize };
enum class RowSense { Le, Eq, Ge };
enum class VarBound { NonNegative, Free };

/// LP in general form: optimize cost^T x subject to per-row senses and
/// per-variable bound kinds. Zero rows or columns are permitted.
struct GeneralLP {
  Objective objective = Objective::Maximize;
  Vec cost;
  Mat constraints;
  std::vector<RowSense> row_sense;
  Vec rhs;
  std::vector<VarBound> var_bound;

  std::size_t num_rows() const { return constraints.rows(); }
  std::size_t num_vars() const { return constraints.cols(); }
  void validate() const;
};

/// Optimal outcome. The dual vector y lives in original row space with the
/// sign convention: for a maximization LP, y_i >= 0 on Le rows, y_i <= 0 on
/// Ge rows, free on Eq rows, and y^T A - c^T is >= 0 on nonnegative columns
/// and = 0 on free columns; for a minimization LP all of these reverse.
/// cost^T x = y^T b holds exactly and is asserted on every solve.
struct OptimalResult {
  Vec x;
  Vec y;
  Rat value;
  /// Original variables whose canonical column is basic, ascending.
  std::vector<std::size_t> basic_vars;
};

/// Infeasibility certificate in original row space: y_i >= 0 on Le rows,
/// y_i <= 0 on Ge rows, free on Eq rows; (y^T A)_j >= 0 on nonnegative
/// columns, = 0 on free columns; y^T b < 0.
struct InfeasibleResult {
  Vec farkas_y;
};

/// A feasible point plus an improving ray: sense-wise A ray <= 0 (Le rows),
/// = 0 (Eq rows), >= 0 (Ge rows), ray >= 0 on nonnegative variables, and
/// cost^T ray > 0 when maximizing (< 0 when minimizing).
struct UnboundedResult {
  Vec point;
  Vec ray;
};

class SimplexOutcome {
 public:
  explicit SimplexOutcome(OptimalResult r) : payload_(std::move(r)) {}
  explicit SimplexOutcome(InfeasibleResult r) : payload_(std::move(r)) {}
  explicit SimplexOutcome(UnboundedResult r) : payload_(std::move(r)) {}

  bool is_optimal() const { return std::holds_alternative<OptimalResult>(payload_); }
  bool is_infeasible() const { return std::holds_alternative<InfeasibleResult>(payload_); }
  bool is_unbounded() const { return std::holds_alternative<UnboundedResult>(payload_); }
  const OptimalResult& optimal() const { return std::get<OptimalResult>(payload_); }
  const InfeasibleResult& infeasible() const { return std::get<InfeasibleResult>(payload_); }
  const UnboundedResult& unbounded() const { return std::get<UnboundedResult>(payload_); }

 private:
  std::variant<OptimalResult, InfeasibleResult, UnboundedResult> payload_;
};

/// Two-phase primal simplex with Bland's rule (least-index entering column,
/// ratio ties broken by least basic variable index), which terminates on
/// every input. Free variables are split as differences of nonnegatives,
/// Ge rows are negated, and phase one uses artificial variables. All three
/// outcome kinds are verified exactly before returning.
SimplexOutcome simplex_solve(const GeneralLP& lp);

/// Basic solution: the structural variables holding a simplex basis column,
/// plus the full solution vector (nonbasic entries are zero).
struct BasicSolution {
  std::vector<std::size_t> basis;
  Vec solution;
};

/// Basic feasible (z*, w*) minimizing w subject to
///   Cz - 1w <= d,  d^T z - w <= 0,  z >= 0,  w >= 0,
/// for skew-symmetric C. w* >= 0 always, and w* = 0 exactly when
/// Cz <= d, d^T z <= 0, z >= 0 is feasible. The solution vector is
/// (z*, w*); basis indices 0..k-1 refer to z, index k to w.
std::pair<BasicSolution, Rat> basic_min_w(const Mat& c, const Vec& d);

}  // namespace lpgame
