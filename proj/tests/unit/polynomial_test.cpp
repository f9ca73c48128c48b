#include <doctest.h>

#include "domino3d/polynomial.hpp"

using namespace domino3d;

namespace {
LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }
}  // namespace

TEST_CASE("arithmetic and normal form") {
  LaurentPoly a = LaurentPoly::monomial(1) - LaurentPoly::constant(1);
  CHECK(a.to_string() == "q - 1");
  CHECK((a - a).is_zero());
  CHECK((a + a).to_string() == "2q - 2");
  CHECK((a * a).to_string() == "q^2 - 2q + 1");
  CHECK(a.mul_qk(-2).to_string() == "q^{-1} - q^{-2}");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(scale(a, -3) == P("-3q + 3"));
}

TEST_CASE("parse round trip") {
  for (const char* s : {"-1", "-q", "-q^{-1}", "-2 + q^{-1}", "q - 2", "-2q + 1 - 2q^{-1}", "1 - 3q^{-1} - q^{-2}", "0", "q^3"}) {
    CHECK(P(s).to_string() == P(P(s).to_string()).to_string());
    CHECK(P(P(s).to_string()) == P(s));
  }
  CHECK(P("-2 + q^{-1}") == P("q^{-1} - 2"));
  CHECK(P("q^-1") == P("q^{-1}"));
}

TEST_CASE("evaluation and twist") {
  CHECK(P("q - 2").eval_at_one() == -1);
  CHECK(P("q - 2").derivative_at_one() == 1);
  CHECK(P("1 - 2q^{-1}").derivative_at_one() == 2);
  CHECK(P("-q + 1 - q^{-1}").derivative_at_one() == 0);
  CHECK(derivative_at_one(P("-3q")) == -3);
}

TEST_CASE("shift and trit helpers") {
  CHECK(equal_up_to_shift(P("q^2 - q"), P("q - 1")) == 1);
  CHECK(equal_up_to_shift(P("q - 1"), P("q^2 - q")) == -1);
  CHECK_FALSE(equal_up_to_shift(P("q - 1"), P("q - 2")));
  CHECK(as_positive_trit_delta(P("q - 1")) == 0);
  CHECK(as_positive_trit_delta(P("1 - q^{-1}")) == -1);
  CHECK_FALSE(as_positive_trit_delta(P("1 - q")));
  CHECK_FALSE(as_positive_trit_delta(P("q^2 - 1")));
}
