#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpgame/linalg.hpp"
#include "lpgame/reductions.hpp"

namespace lpgame::testing {

inline Rat R(long num, long den = 1) { return make_rat(num, den); }

inline Vec vec(std::vector<long> entries) {
  Vec v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v[i] = R(entries[i]);
  return v;
}

inline Mat mat(std::vector<std::vector<long>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  Mat a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = R(rows[i][j]);
  }
  return a;
}

// Desk instances used across the suites.
inline IneqLP inst_i1() { return IneqLP(mat({{2}}), vec({1}), vec({3})); }
inline IneqLP inst_i2() { return IneqLP(mat({{0, 1}}), vec({1}), vec({0, 1})); }
inline IneqLP inst_i3() { return IneqLP(mat({{1}}), vec({-1}), vec({1})); }
inline Mat inst_i4() { return mat({{1, 2, 0}, {1, 0, 2}}); }
inline Mat inst_i5() { return mat({{1, -1, 0}, {0, 0, 1}}); }
inline Mat inst_i6_rows() { return mat({{1}, {-1}, {1}}); }
inline Vec inst_i6_rhs() { return vec({0, -1, 5}); }

// xorshift64 so every platform draws the same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed == 0 ? 0x9e3779b97f4a7c15ull : seed) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }

  // Entries in {-3..3} together with the halves in between.
  Rat entry() { return R(range(-6, 6), range(1, 2)); }

  Vec rand_vec(std::size_t n) {
    Vec v(n);
    for (auto& e : v) e = entry();
    return v;
  }
  Mat rand_mat(std::size_t m, std::size_t n) {
    Mat a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry();
    }
    return a;
  }
  IneqLP rand_lp(std::size_t max_dim = 4) {
    std::size_t m = 1 + index(max_dim);
    std::size_t n = 1 + index(max_dim);
    return IneqLP(rand_mat(m, n), rand_vec(m), rand_vec(n));
  }

 private:
  std::uint64_t state_;
};

struct OracleSolution {
  Rat value;
  Vec row;
  Vec col;
};

// Brute-force game oracle independent of the simplex: enumerate square
// support pairs (Shapley-Snow kernels), solve the bordered equalization
// systems exactly, and accept a pair only when both strategies verify
// against the full matrix with a common value.
inline std::optional<OracleSolution> oracle_game(const Mat& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::size_t> rows_pick, cols_pick;

  auto try_kernel = [&]() -> std::optional<OracleSolution> {
    const std::size_t s = rows_pick.size();
    Mat row_sys(s + 1, s + 1);
    Vec row_rhs(s + 1);
    Mat col_sys(s + 1, s + 1);
    Vec col_rhs(s + 1);
    for (std::size_t c = 0; c < s; ++c) {
      for (std::size_t r = 0; r < s; ++r) {
        row_sys(c, r) = a(rows_pick[r], cols_pick[c]);
        col_sys(r, c) = a(rows_pick[r], cols_pick[c]);
      }
      row_sys(c, s) = -1;
      col_sys(c, s) = -1;
    }
    for (std::size_t r = 0; r < s; ++r) {
      row_sys(s, r) = 1;
      col_sys(s, r) = 1;
    }
    auto row_inv = inverse(row_sys);
    auto col_inv = inverse(col_sys);
    if (!row_inv.has_value() || !col_inv.has_value()) return std::nullopt;
    row_rhs[s] = 1;
    col_rhs[s] = 1;
    Vec row_sol = *row_inv * row_rhs;
    Vec col_sol = *col_inv * col_rhs;
    if (row_sol[s] != col_sol[s]) return std::nullopt;
    Rat v = row_sol[s];
    Vec y(m), x(n);
    for (std::size_t r = 0; r < s; ++r) y[rows_pick[r]] = row_sol[r];
    for (std::size_t c = 0; c < s; ++c) x[cols_pick[c]] = col_sol[c];
    if (!is_nonneg(y) || !is_nonneg(x)) return std::nullopt;
    Vec guarantee = left_mul(y, a);
    for (std::size_t j = 0; j < n; ++j) {
      if (guarantee[j] < v) return std::nullopt;
    }
    Vec cost = a * x;
    for (std::size_t i = 0; i < m; ++i) {
      if (cost[i] > v) return std::nullopt;
    }
    return OracleSolution{std::move(v), std::move(y), std::move(x)};
  };

  std::optional<OracleSolution> found;
  auto scan_cols = [&](auto&& self, std::size_t start, std::size_t want) -> void {
    if (found.has_value()) return;
    if (want == 0) {
      found = try_kernel();
      return;
    }
    for (std::size_t c = start; c + want <= n && !found.has_value(); ++c) {
      cols_pick.push_back(c);
      self(self, c + 1, want - 1);
      cols_pick.pop_back();
    }
  };
  auto scan_rows = [&](auto&& self, std::size_t start, std::size_t want,
                       std::size_t size) -> void {
    if (found.has_value()) return;
    if (want == 0) {
      scan_cols(scan_cols, 0, size);
      return;
    }
    for (std::size_t i = start; i + want <= m && !found.has_value(); ++i) {
      rows_pick.push_back(i);
      self(self, i + 1, want - 1, size);
      rows_pick.pop_back();
    }
  };
  for (std::size_t s = 1; s <= std::min(m, n) && !found.has_value(); ++s) {
    scan_rows(scan_rows, 0, s, s);
  }
  return found;
}

}  // namespace lpgame::testing
