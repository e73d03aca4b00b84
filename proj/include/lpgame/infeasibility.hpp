#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpgame/linalg.hpp"

namespace lpgame {

/// Fourier-Motzkin elimination over Ax <= b with free x, left to right,
/// tracking a nonnegative multiplier vector per derived row. Left is a
/// feasible point found by back-substitution (midpoint of a two-sided
/// interval, the finite bound one-sided, 0 unconstrained); Right is y >= 0
/// with y^T A = 0^T and y^T b < 0 read off the multipliers of a derived
/// contradiction 0 <= negative. Throws CapExceededError when the number of
/// rows at any stage would exceed row_cap.
Alternative<Vec, Vec> fourier_motzkin(const Mat& a, const Vec& b,
                                      std::size_t row_cap = 10000);

/// Inclusion-minimal infeasible subsystem, by greedy ascending-index row
/// deletion. The certificate solves y^T [A_S -b_S] = [0^T 1] and is
/// strictly positive on the subsystem; each reversal witness x^(i) solves
/// the equality system with row i dropped and satisfies a_i x^(i) > b_i.
struct IISResult {
  std::vector<std::size_t> rows;  // ascending, 0-based
  Vec certificate;                // full length, zero off the subsystem
  std::vector<std::pair<std::size_t, Vec>> reversal_witnesses;
};

/// Throws FeasibleInputError when Ax <= b is feasible (decided by
/// fourier_motzkin, which also drives the greedy deletion).
IISResult shrink_minimal_infeasible(const Mat& a, const Vec& b,
                                    std::size_t row_cap = 10000);

struct MinfeasCheck {
  std::string name;
  bool pass;
};

struct MinfeasReport {
  bool pass;
  std::vector<MinfeasCheck> lines;
};

/// For a minimally infeasible Ax <= b: the equalities Ax = b are infeasible
/// and removing any single equation restores feasibility. Each check runs
/// through solve_or_refute; a precondition violation shows up as a failing
/// line, not an error.
MinfeasReport check_minfeas_equalities(const Mat& a, const Vec& b);

}  // namespace lpgame
