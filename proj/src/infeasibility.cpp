#include "lpgame/infeasibility.hpp"

#include <map>
#include <vector>

#include "lpgame/errors.hpp"

namespace lpgame {

namespace {

struct FmRow {
  Vec coef;
  Rat rhs;
  Vec mult;  // nonnegative; coef = mult^T A and rhs = mult^T b throughout
};

using FmKey = std::vector<Rat>;

FmKey key_of(const FmRow& row) {
  FmKey key(row.coef.begin(), row.coef.end());
  key.push_back(row.rhs);
  return key;
}

}  // namespace

Alternative<Vec, Vec> fourier_motzkin(const Mat& a, const Vec& b, std::size_t row_cap) {
  if (b.dim() != a.rows()) throw DimensionError("fourier_motzkin: dim(b) != rows(A)");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  // levels[t] holds the system before x_t is eliminated.
  std::vector<std::vector<FmRow>> levels(n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    levels[0].push_back({a.row(i), b[i], Vec::unit(m, i)});
  }
  if (levels[0].size() > row_cap) throw CapExceededError("fourier_motzkin: row cap");

  for (std::size_t t = 0; t < n; ++t) {
    std::vector<const FmRow*> lower, upper;
    std::map<FmKey, bool> seen;
    auto push = [&](FmRow row) {
      if (!seen.emplace(key_of(row), true).second) return;
      if (levels[t + 1].size() + 1 > row_cap) {
        throw CapExceededError("fourier_motzkin: row cap");
      }
      levels[t + 1].push_back(std::move(row));
    };
    for (const FmRow& row : levels[t]) {
      if (row.coef[t] > 0) {
        upper.push_back(&row);
      } else if (row.coef[t] < 0) {
        lower.push_back(&row);
      } else {
        push(row);
      }
    }
    for (const FmRow* up : upper) {
      for (const FmRow* low : lower) {
        Rat up_scale = 1 / up->coef[t];
        Rat low_scale = -1 / low->coef[t];
        // the coefficient on x_t cancels exactly: 1 + (-1)
        push(FmRow{up->coef * up_scale + low->coef * low_scale,
                   up->rhs * up_scale + low->rhs * low_scale,
                   up->mult * up_scale + low->mult * low_scale});
      }
    }
  }

  for (const FmRow& row : levels[n]) {
    if (row.rhs < 0) {
      Vec y = row.mult;
      LPGAME_CHECK(is_nonneg(y));
      LPGAME_CHECK(is_zero(left_mul(y, a)));
      LPGAME_CHECK(dot(y, b) < 0);
      return Alternative<Vec, Vec>::right(std::move(y));
    }
  }

  Vec x(n);
  for (std::size_t t = n; t-- > 0;) {
    bool has_lower = false, has_upper = false;
    Rat lower_bound, upper_bound;
    for (const FmRow& row : levels[t]) {
      if (row.coef[t] == 0) continue;
      Rat rest = 0;
      for (std::size_t s = t + 1; s < n; ++s) rest += row.coef[s] * x[s];
      Rat bound = (row.rhs - rest) / row.coef[t];
      if (row.coef[t] > 0) {
        if (!has_upper || bound < upper_bound) upper_bound = bound;
        has_upper = true;
      } else {
        if (!has_lower || bound > lower_bound) lower_bound = bound;
        has_lower = true;
      }
    }
    if (has_lower && has_upper) {
      LPGAME_CHECK(lower_bound <= upper_bound);
      x[t] = (lower_bound + upper_bound) / 2;
    } else if (has_upper) {
      x[t] = upper_bound;
    } else if (has_lower) {
      x[t] = lower_bound;
    }
  }
  LPGAME_CHECK(is_nonneg(b - a * x));
  return Alternative<Vec, Vec>::left(std::move(x));
}

IISResult shrink_minimal_infeasible(const Mat& a, const Vec& b, std::size_t row_cap) {
  if (b.dim() != a.rows()) throw DimensionError("shrink_minimal_infeasible: dim(b) != rows(A)");
  if (fourier_motzkin(a, b, row_cap).is_left()) {
    throw FeasibleInputError("shrink_minimal_infeasible: system is feasible");
  }
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m; ++i) keep.push_back(i);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> trial;
    for (std::size_t r : keep) {
      if (r != i) trial.push_back(r);
    }
    if (trial.size() == keep.size()) continue;
    if (fourier_motzkin(select_rows(a, trial), select_entries(b, trial), row_cap).is_right()) {
      keep = std::move(trial);
    }
  }

  Mat a_sub = select_rows(a, keep);
  Vec b_sub = select_entries(b, keep);

  // y^T [A_S -b_S] = [0^T 1]; minimal infeasibility of the equalities
  // guarantees a solution.
  Mat augmented = hstack(a_sub, Mat(keep.size(), 1));
  for (std::size_t i = 0; i < keep.size(); ++i) augmented(i, n) = -b_sub[i];
  auto solved = solve_or_refute(augmented.transposed(), Vec::unit(n + 1, n));
  LPGAME_CHECK(solved.is_left());
  Vec y_sub = solved.left_value();

  IISResult result;
  result.rows = keep;
  result.certificate = Vec(m);
  for (std::size_t i = 0; i < keep.size(); ++i) result.certificate[keep[i]] = y_sub[i];

  for (std::size_t p = 0; p < keep.size(); ++p) {
    std::vector<std::size_t> others;
    for (std::size_t q = 0; q < keep.size(); ++q) {
      if (q != p) others.push_back(keep[q]);
    }
    auto witness = solve_or_refute(select_rows(a, others), select_entries(b, others));
    LPGAME_CHECK(witness.is_left());
    Vec x_i = witness.left_value();
    Rat slack = dot(a.row(keep[p]), x_i) - b[keep[p]];
    LPGAME_CHECK(slack > 0);
    LPGAME_CHECK(y_sub[p] * slack == 1);  // forces y > 0 on the subsystem
    result.reversal_witnesses.emplace_back(keep[p], std::move(x_i));
  }

  LPGAME_CHECK(is_nonneg(result.certificate));
  LPGAME_CHECK(is_zero(left_mul(result.certificate, a)));
  LPGAME_CHECK(dot(result.certificate, b) < 0);
  return result;
}

MinfeasReport check_minfeas_equalities(const Mat& a, const Vec& b) {
  if (b.dim() != a.rows()) throw DimensionError("check_minfeas_equalities: dim(b) != rows(A)");
  MinfeasReport report{true, {}};
  auto add = [&](std::string name, bool pass) {
    report.pass = report.pass && pass;
    report.lines.push_back({std::move(name), pass});
  };
  add("equality system infeasible", solve_or_refute(a, b).is_right());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<std::size_t> others;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != i) others.push_back(r);
    }
    bool pass = solve_or_refute(select_rows(a, others), select_entries(b, others)).is_left();
    add("feasible after removing row " + std::to_string(i + 1), pass);
  }
  return report;
}

}  // namespace lpgame
