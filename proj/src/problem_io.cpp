#include "lpgame/problem_io.hpp"

#include <json.hpp>

#include "lpgame/errors.hpp"

namespace lpgame {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Rat(static_cast<long>(value.get<long long>()));
  }
  if (value.is_string()) {
    auto parsed = parse_rat(value.get<std::string>());
    if (parsed.has_value()) return *parsed;
    throw ParseError("bad rational \"" + value.get<std::string>() + "\" in " + where);
  }
  throw ParseError("expected \"p/q\" string or integer in " + where);
}

Vec vec_from_json(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + " must be an array");
  Vec v(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) v[i] = rat_from_json(value[i], where);
  return v;
}

Mat mat_from_json(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + " must be an array of rows");
  const std::size_t rows = value.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!value[0].is_array()) throw ParseError(where + " rows must be arrays");
    cols = value[0].size();
  }
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!value[i].is_array()) throw ParseError(where + " rows must be arrays");
    if (value[i].size() != cols) {
      throw DimensionError(where + " has rows of unequal length");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rat_from_json(value[i][j], where);
  }
  return m;
}

const json& require_field(const json& doc, const std::string& name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw DimensionError("missing field \"" + name + "\"");
  return *it;
}

}  // namespace

ProblemFile parse_problem_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");

  const json& kind_field = require_field(doc, "kind");
  if (!kind_field.is_string()) throw ParseError("\"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();

  ProblemFile file;
  if (kind == "lp") {
    file.kind = ProblemKind::Lp;
    Mat a = mat_from_json(require_field(doc, "A"), "A");
    Vec b = vec_from_json(require_field(doc, "b"), "b");
    Vec c = vec_from_json(require_field(doc, "c"), "c");
    file.lp.emplace(std::move(a), std::move(b), std::move(c));
  } else if (kind == "game") {
    file.kind = ProblemKind::Game;
    Mat payoff = mat_from_json(require_field(doc, "payoff"), "payoff");
    if (payoff.rows() == 0 || payoff.cols() == 0) {
      throw DimensionError("payoff matrix must be nonempty");
    }
    file.game.emplace(std::move(payoff));
  } else if (kind == "system") {
    file.kind = ProblemKind::System;
    file.rows = mat_from_json(require_field(doc, "rows"), "rows");
    if (doc.contains("rhs")) {
      Vec rhs = vec_from_json(doc["rhs"], "rhs");
      if (rhs.dim() != file.rows->rows()) {
        throw DimensionError("rhs length does not match rows");
      }
      file.rhs = std::move(rhs);
    }
  } else {
    throw ParseError("unknown kind \"" + kind + "\"");
  }
  return file;
}

std::pair<Vec, Vec> parse_pair_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("pair file must be a JSON object");
  Vec x = vec_from_json(require_field(doc, "x"), "x");
  Vec y = vec_from_json(require_field(doc, "y"), "y");
  return {std::move(x), std::move(y)};
}

}  // namespace lpgame
