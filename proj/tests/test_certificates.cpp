#include <doctest.h>

#include "lpgame/certificates.hpp"
#include "lpgame/errors.hpp"
#include "lpgame/simplex.hpp"
#include "support.hpp"

using namespace lpgame;
using namespace lpgame::testing;

namespace {

bool system_feasible(GeneralLP lp) {
  auto outcome = simplex_solve(lp);
  return !outcome.is_infeasible();
}

// Feasibility of Ax (sense) b with optional x >= 0, used to confirm that
// the unreturned side of an alternative really is empty.
bool feasible_ineq(const Mat& a, const Vec& b, RowSense sense, bool nonneg) {
  GeneralLP lp;
  lp.objective = Objective::Maximize;
  lp.cost = Vec(a.cols());
  lp.constraints = a;
  lp.row_sense.assign(a.rows(), sense);
  lp.rhs = b;
  lp.var_bound.assign(a.cols(), nonneg ? VarBound::NonNegative : VarBound::Free);
  return system_feasible(std::move(lp));
}

// x >= 0, x != 0 homogeneous systems are scaled to 1^T x = 1.
bool feasible_nonzero(const Mat& a, RowSense sense) {
  GeneralLP lp;
  lp.objective = Objective::Maximize;
  lp.cost = Vec(a.cols());
  lp.constraints = vstack(a, [&] {
    Mat row(1, a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) row(0, j) = 1;
    return row;
  }());
  lp.row_sense.assign(a.rows(), sense);
  lp.row_sense.push_back(RowSense::Eq);
  lp.rhs = Vec(a.rows() + 1);
  lp.rhs[a.rows()] = 1;
  lp.var_bound.assign(a.cols(), VarBound::NonNegative);
  return system_feasible(std::move(lp));
}

// y^T A > 0 scaled to y^T A >= 1 (with y >= 0 when required).
bool feasible_strict_dual(const Mat& a, bool y_nonneg) {
  GeneralLP lp;
  lp.objective = Objective::Maximize;
  lp.cost = Vec(a.rows());
  lp.constraints = a.transposed();
  lp.row_sense.assign(a.cols(), RowSense::Ge);
  lp.rhs = Vec::ones(a.cols());
  lp.var_bound.assign(a.rows(), y_nonneg ? VarBound::NonNegative : VarBound::Free);
  return system_feasible(std::move(lp));
}

}  // namespace

TEST_CASE("farkas fixed examples") {
  auto right = farkas(mat({{1}}), vec({-1}), FarkasVariant::IneqNonneg);
  REQUIRE(right.is_right());
  CHECK(is_nonneg(right.right_value()));
  CHECK(dot(right.right_value(), vec({-1})) < 0);

  auto left = farkas(mat({{1, -1}}), vec({0}), FarkasVariant::Eq);
  REQUIRE(left.is_left());
  CHECK(left.left_value() == Vec(2));

  auto free = farkas(inst_i6_rows(), inst_i6_rhs(), FarkasVariant::IneqFree);
  REQUIRE(free.is_right());
  const Vec& y = free.right_value();
  CHECK(is_zero(left_mul(y, inst_i6_rows())));
  CHECK(dot(y, inst_i6_rhs()) < 0);
  CHECK(y[2] == 0);

  CHECK_THROWS_AS(farkas(mat({{1}}), vec({1, 2}), FarkasVariant::Eq), DimensionError);
}

TEST_CASE("gordan fixed examples") {
  for (auto method : {GordanMethod::ViaVille, GordanMethod::ViaStiemke}) {
    auto left = gordan(mat({{1, -1}}), method);
    REQUIRE(left.is_left());
    CHECK(is_zero(mat({{1, -1}}) * left.left_value()));

    auto right = gordan(mat({{1, 1}}), method);
    REQUIRE(right.is_right());
    CHECK(is_positive(left_mul(right.right_value(), mat({{1, 1}}))));

    auto i5 = gordan(inst_i5(), method);
    REQUIRE(i5.is_left());
    CHECK(i5.left_value()[2] == 0);
    CHECK(i5.left_value()[0] > 0);
  }
}

TEST_CASE("ville fixed examples") {
  auto i4 = ville(inst_i4());
  REQUIRE(i4.is_right());
  CHECK(i4.right_value() == (Vec{R(1, 2), R(1, 2)}));

  CHECK(ville(mat({{-1}})).is_left());
  CHECK(ville(mat({{0}})).is_left());
}

TEST_CASE("stiemke fixed examples") {
  auto right = stiemke(mat({{1, -1}}));
  REQUIRE(right.is_right());
  CHECK(is_positive(right.right_value()));
  CHECK(is_zero(mat({{1, -1}}) * right.right_value()));

  auto left = stiemke(mat({{1, 0}}));
  REQUIRE(left.is_left());
  Vec yta = left_mul(left.left_value(), mat({{1, 0}}));
  CHECK(is_nonneg(yta));
  CHECK(!is_zero(yta));

  auto zero_col = stiemke(mat({{0}}));
  REQUIRE(zero_col.is_right());
  CHECK(is_positive(zero_col.right_value()));
}

TEST_CASE("alternative dichotomies: the other side is infeasible") {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    Mat a = rng.rand_mat(1 + rng.index(4), 1 + rng.index(4));
    Vec b = rng.rand_vec(a.rows());

    auto eq = farkas(a, b, FarkasVariant::Eq);
    CHECK(eq.is_left() == feasible_ineq(vstack(a, [&] {
                            Mat neg(a.rows(), a.cols());
                            for (std::size_t i = 0; i < a.rows(); ++i)
                              for (std::size_t j = 0; j < a.cols(); ++j) neg(i, j) = -a(i, j);
                            return neg;
                          }()),
                          concat(b, -b), RowSense::Le, true));
    auto nonneg = farkas(a, b, FarkasVariant::IneqNonneg);
    CHECK(nonneg.is_left() == feasible_ineq(a, b, RowSense::Le, true));
    auto free = farkas(a, b, FarkasVariant::IneqFree);
    CHECK(free.is_left() == feasible_ineq(a, b, RowSense::Le, false));

    auto gv = gordan(a, GordanMethod::ViaVille);
    auto gs = gordan(a, GordanMethod::ViaStiemke);
    CHECK(gv.is_left() == gs.is_left());
    CHECK(gv.is_left() == feasible_nonzero(a, RowSense::Eq));
    CHECK(gv.is_left() != feasible_strict_dual(a, false));

    auto v = ville(a);
    CHECK(v.is_left() == feasible_nonzero(a, RowSense::Le));
    CHECK(v.is_left() != feasible_strict_dual(a, true));

    auto s = stiemke(a);
    if (s.is_right()) {
      CHECK(is_positive(s.right_value()));
      CHECK(is_zero(a * s.right_value()));
    } else {
      // y^T A >= 0, != 0 exists; then no x > 0 with Ax = 0
      Vec yta = left_mul(s.left_value(), a);
      CHECK(is_nonneg(yta));
      CHECK(!is_zero(yta));
    }
  }
}

TEST_CASE("tucker_lemma fixed examples") {
  auto single = tucker_lemma(mat({{1}}), 0, TuckerVariant::Eq);
  CHECK(single.x == Vec(1));
  CHECK(single.y[0] > 0);

  auto balance = tucker_lemma(mat({{1, -1}}), 1, TuckerVariant::Eq);
  CHECK(balance.x == (Vec{R(1), R(1)}));
  CHECK(balance.y == Vec(1));

  // the inequality variant keeps y nonnegative
  auto ineq = tucker_lemma(mat({{-1, 2}}), 0, TuckerVariant::Ineq);
  CHECK(is_nonneg(ineq.y));
  CHECK(is_nonneg(-(mat({{-1, 2}}) * ineq.x)));

  // Dantzig's game for the infeasible instance with c = 0
  IneqLP relaxed(inst_i3().a, inst_i3().b, Vec(1));
  Mat b = build_dantzig(relaxed).payoff;
  auto skew = tucker_lemma(b, 0, TuckerVariant::Skew);
  Vec z = skew.x + skew.y;
  Vec bz = b * z;
  CHECK(is_nonneg(z));
  CHECK(is_nonneg(-bz));
  CHECK(z[2] - bz[2] > 0);

  CHECK_THROWS_AS(tucker_lemma(mat({{1}}), 1, TuckerVariant::Eq), std::out_of_range);
  CHECK_THROWS_AS(tucker_lemma(mat({{1, 0}, {0, 1}}), 0, TuckerVariant::Skew),
                  std::invalid_argument);
}

TEST_CASE("tucker_theorem fixed examples") {
  for (auto method : {TuckerMethod::Summation, TuckerMethod::Elimination}) {
    TuckerPartition i5 = tucker_theorem(inst_i5(), method);
    CHECK(i5.support == std::vector<std::size_t>{0, 1});
    Vec yta = left_mul(i5.y, inst_i5());
    CHECK(yta[0] == 0);
    CHECK(yta[1] == 0);
    CHECK(yta[2] > 0);

    TuckerPartition zero = tucker_theorem(mat({{0}}), method);
    CHECK(zero.support == std::vector<std::size_t>{0});
    CHECK(zero.x[0] > 0);
    CHECK(zero.y == Vec(1));

    TuckerPartition one = tucker_theorem(mat({{1}}), method);
    CHECK(one.support.empty());
    CHECK(one.x == Vec(1));
    CHECK(left_mul(one.y, mat({{1}}))[0] > 0);
  }
}

TEST_CASE("tucker methods agree on the support") {
  Rng rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    Mat a = rng.rand_mat(1 + rng.index(4), 1 + rng.index(4));
    TuckerPartition sum = tucker_theorem(a, TuckerMethod::Summation);
    TuckerPartition elim = tucker_theorem(a, TuckerMethod::Elimination);
    CHECK(sum.support == elim.support);

    // consistency with gordan: empty support iff a strictly positive
    // row-space vector exists
    auto g = gordan(a, GordanMethod::ViaVille);
    CHECK(sum.support.empty() == g.is_right());
    // full support iff a strictly positive nullspace vector exists
    auto s = stiemke(a);
    CHECK((sum.support.size() == a.cols()) == s.is_right());
  }
}

TEST_CASE("skew_tucker fixed examples") {
  Vec trivial = skew_tucker(mat({{0}}));
  CHECK(trivial[0] > 0);

  Mat rotation = mat({{0, 1}, {-1, 0}});
  Vec z = skew_tucker(rotation);
  CHECK(is_nonneg(z));
  CHECK(is_nonneg(-(rotation * z)));
  CHECK(is_positive(z - rotation * z));

  // both LPs of I1 are feasible, so the last coordinate is positive
  Vec dantzig = skew_tucker(build_dantzig(inst_i1()).payoff);
  CHECK(dantzig[2] > 0);

  CHECK_THROWS_AS(skew_tucker(mat({{1}})), std::invalid_argument);
}

TEST_CASE("skew_tucker on the zero-objective game decides farkas") {
  Rng rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = rng.rand_mat(1 + rng.index(3), 1 + rng.index(3));
    Vec b = rng.rand_vec(a.rows());
    IneqLP relaxed(a, b, Vec(a.cols()));
    Vec z = skew_tucker(build_dantzig(relaxed).payoff);
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Rat t = z[m + n];
    auto alt = farkas(a, b, FarkasVariant::IneqNonneg);
    if (t > 0) {
      Vec x = slice(z, m, m + n) / t;
      CHECK(is_nonneg(b - a * x));
      CHECK(alt.is_left());
    } else {
      Vec y = slice(z, 0, m);
      CHECK(is_nonneg(left_mul(y, a)));
      CHECK(dot(y, b) < 0);
      CHECK(alt.is_right());
    }
  }
}

TEST_CASE("strict_complementary_pair on the desk instances") {
  auto [x1, y1] = strict_complementary_pair(inst_i1());
  CHECK(x1 == Vec{R(1, 2)});
  CHECK(y1 == Vec{R(3, 2)});

  auto [x2, y2] = strict_complementary_pair(inst_i2());
  PairReport report = verify_optimal_pair(inst_i2(), x2, y2, true);
  CHECK(report.pass);

  CHECK_THROWS_AS(strict_complementary_pair(inst_i3()), InfeasibleSideError);
}

TEST_CASE("strict pairs verify on random feasible instances") {
  Rng rng(64);
  int seen = 0;
  for (int trial = 0; trial < 30 && seen < 8; ++trial) {
    IneqLP lp = rng.rand_lp(3);
    auto [verdict, v] = solve_lp_via_bm(lp);
    if (!verdict.is_optimal_pair()) continue;
    ++seen;
    auto [x, y] = strict_complementary_pair(lp);
    CHECK(verify_optimal_pair(lp, x, y, true).pass);
  }
  CHECK(seen > 0);
}

TEST_CASE("verify_optimal_pair report content") {
  PairReport good = verify_optimal_pair(inst_i1(), Vec{R(1, 2)}, Vec{R(3, 2)}, false);
  CHECK(good.pass);
  CHECK(good.first_violation.empty());

  PairReport bad = verify_optimal_pair(inst_i1(), Vec(1), Vec{R(3, 2)}, false);
  CHECK(!bad.pass);
  CHECK(bad.first_violation == "zero gap");
  bool gap_detail = false, slack_detail = false;
  for (const CheckLine& line : bad.checks) {
    if (line.name == "zero gap") gap_detail = !line.pass && line.detail == "gap 3/2";
    if (line.name == "complementary slackness") {
      slack_detail = !line.pass && line.detail == "row 1";
    }
  }
  CHECK(gap_detail);
  CHECK(slack_detail);

  PairReport strict = verify_optimal_pair(inst_i2(), Vec{R(1), R(1)}, Vec{R(1)}, true);
  CHECK(strict.pass);

  CHECK_THROWS_AS(verify_optimal_pair(inst_i1(), Vec(2), Vec(1), false), DimensionError);
}
