#include <doctest.h>

#include "lpgame/rational.hpp"
#include "support.hpp"

using namespace lpgame;
using lpgame::testing::R;
using lpgame::testing::Rng;

namespace {

bool canonical(const Rat& q) {
  if (q.get_den() <= 0) return false;
  Int g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (q.get_num() == 0) return q.get_den() == 1;
  return g == 1;
}

}  // namespace

TEST_CASE("make_rat reduces to canonical form") {
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(make_rat(1, -2) == make_rat(-1, 2));
  CHECK(make_rat(1, -2).get_den() == 2);
  CHECK(make_rat(0, -7) == make_rat(0, 1));
  CHECK(make_rat(0, 5).get_den() == 1);
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rat accepts p/q and integers, rejects everything else") {
  CHECK(*parse_rat("3/4") == R(3, 4));
  CHECK(*parse_rat("-3/4") == R(-3, 4));
  CHECK(*parse_rat("7") == R(7));
  CHECK(*parse_rat("-0") == R(0));
  CHECK(*parse_rat("2/4") == R(1, 2));
  CHECK(!parse_rat("1/0").has_value());
  CHECK(!parse_rat("1.5").has_value());
  CHECK(!parse_rat("1/-2").has_value());
  CHECK(!parse_rat("+3").has_value());
  CHECK(!parse_rat("").has_value());
  CHECK(!parse_rat("a/b").has_value());
  CHECK(!parse_rat("3/").has_value());
}

TEST_CASE("rat_to_string renders p or p/q") {
  CHECK(rat_to_string(R(3, 4)) == "3/4");
  CHECK(rat_to_string(R(-1, 2)) == "-1/2");
  CHECK(rat_to_string(R(5)) == "5");
  CHECK(rat_to_string(R(0)) == "0");
  CHECK(is_integer(R(5)));
  CHECK(!is_integer(R(5, 2)));
}

TEST_CASE("arithmetic keeps values canonical") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = rng.entry();
    Rat b = rng.entry();
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    if (b != 0) CHECK(canonical(a / b));
  }
  CHECK(canonical(R(1, 2) + R(1, 6)));
  CHECK(R(1, 2) + R(1, 6) == R(2, 3));
}
