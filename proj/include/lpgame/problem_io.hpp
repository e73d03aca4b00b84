#pragma once

#include <optional>
#include <string>
#include <utility>

#include "lpgame/game.hpp"
#include "lpgame/linalg.hpp"
#include "lpgame/reductions.hpp"

namespace lpgame {

enum class ProblemKind { Lp, Game, System };

/// Parsed problem file. kind "lp" carries A, b, c; "game" carries payoff;
/// "system" carries rows and an optional rhs.
struct ProblemFile {
  ProblemKind kind;
  std::optional<IneqLP> lp;
  std::optional<ZeroSumGame> game;
  std::optional<Mat> rows;
  std::optional<Vec> rhs;
};

/// Strict JSON parse: numbers are "p/q" or integer tokens, no floats.
/// Throws ParseError on malformed input and DimensionError on missing
/// fields or inconsistent dimensions.
ProblemFile parse_problem_file(const std::string& text);

/// {"x": [...], "y": [...]} companion file for verify-pair.
std::pair<Vec, Vec> parse_pair_file(const std::string& text);

}  // namespace lpgame
