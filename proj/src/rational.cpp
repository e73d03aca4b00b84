#include "lpgame/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lpgame {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> parse_rat(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto pos = text.find('/'); pos != std::string_view::npos) {
    num = text.substr(0, pos);
    den = text.substr(pos + 1);
  }
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return make_rat(n, d);
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

bool is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace lpgame
