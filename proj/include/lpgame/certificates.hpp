#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpgame/linalg.hpp"
#include "lpgame/reductions.hpp"

namespace lpgame {

enum class FarkasVariant { Eq, IneqNonneg, IneqFree };

/// Lemma of Farkas, decided by simplex on the auxiliary LP
/// "maximize -t subject to Ax - 1t <= b, x >= 0, t >= 0" and its dual.
///   Eq:         Left x: Ax = b, x >= 0   | Right y: y^T A >= 0^T, y^T b < 0
///   IneqNonneg: Left x: Ax <= b, x >= 0  | Right y: adds y >= 0
///   IneqFree:   Left x: Ax <= b          | Right y: y^T A = 0^T, y >= 0, y^T b < 0
/// The Eq and IneqFree variants reduce to IneqNonneg by stacking [A; -A]
/// and splitting x = x+ - x-, respectively.
Alternative<Vec, Vec> farkas(const Mat& a, const Vec& b, FarkasVariant variant);

/// Theorem of Ville: Left x: Ax <= 0, x >= 0, x != 0, or
/// Right y: y^T A > 0^T, y >= 0. Decided by the sign of the game value.
Alternative<Vec, Vec> ville(const Mat& a);

enum class GordanMethod { ViaVille, ViaStiemke };

/// Theorem of Gordan: Left x: Ax = 0, x >= 0, x != 0, or Right y:
/// y^T A > 0^T. ViaVille stacks [A; -A]; ViaStiemke goes through a
/// nullspace basis of A. Both methods return the same side.
Alternative<Vec, Vec> gordan(const Mat& a, GordanMethod method);

/// Theorem of Stiemke: Left y: y^T A >= 0^T, y^T A != 0^T, or Right x:
/// Ax = 0, x > 0. Strict positivity is decided by imposing >= 1, which is
/// equivalent because the systems are homogeneous.
Alternative<Vec, Vec> stiemke(const Mat& a);

enum class TuckerVariant { Eq, Ineq, Skew };

struct TuckerLemmaCert {
  Vec y;
  Vec x;
};

/// Lemma of Tucker for a distinguished column j.
///   Eq:   y^T A >= 0^T, x >= 0, Ax = 0,  x_j + (y^T A)_j > 0
///   Ineq: additionally y >= 0 and Ax <= 0 instead of Ax = 0
///   Skew: input must be skew-symmetric; j is fixed to the last column and
///         z = x + y satisfies z >= 0, Bz <= 0, z_k - (Bz)_k > 0.
/// Eq is built from farkas(Eq) on the other columns against -A_j; Ineq
/// applies Eq to [I A]; Skew applies Ineq to B itself.
TuckerLemmaCert tucker_lemma(const Mat& a, std::size_t j, TuckerVariant variant);

enum class TuckerMethod { Summation, Elimination };

/// Unique column split S = supp(x) with certificate:
/// y^T A >= 0^T, x >= 0, Ax = 0, x^T + y^T A > 0^T, and y^T A vanishes
/// exactly on S.
struct TuckerPartition {
  std::vector<std::size_t> support;
  Vec x;
  Vec y;
};

/// Theorem of Tucker. Summation adds up per-column tucker_lemma
/// certificates. Elimination finds the maximal support by per-column
/// feasibility, eliminates the supported variables by an exact row
/// reduction, and applies Gordan's theorem to the reduced block. Both
/// methods produce the identical support.
TuckerPartition tucker_theorem(const Mat& a, TuckerMethod method);

/// For skew-symmetric B: z >= 0, Bz <= 0, z - Bz > 0 componentwise, via
/// Tucker's theorem on [I B] and z = x + y.
Vec skew_tucker(const Mat& b);

/// Optimal pair with strict complementarity, y + (b - Ax) > 0 and
/// x^T + (y^T A - c^T) > 0^T, built by scaling skew_tucker on Dantzig's
/// game. Throws InfeasibleSideError unless both LPs are feasible.
std::pair<Vec, Vec> strict_complementary_pair(const IneqLP& lp);

struct CheckLine {
  std::string name;
  bool pass;
  std::string detail;
};

struct PairReport {
  bool pass;
  std::string first_violation;
  std::vector<CheckLine> checks;
};

/// Checks feasibility of both vectors, weak duality, the exact gap,
/// per-component complementary slackness, and (optionally) strict
/// complementarity. Violations are report content, never errors.
PairReport verify_optimal_pair(const IneqLP& lp, const Vec& x, const Vec& y, bool strict);

}  // namespace lpgame
