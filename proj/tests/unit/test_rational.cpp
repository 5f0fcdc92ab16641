#include "gen.hpp"
#include "helpers.hpp"
#include "tiltwall/surd.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <doctest.h>

using namespace tiltwall;
using helpers::R;

TEST_CASE("parse and print fractions") {
  CHECK(to_string(R("3")) == "3");
  CHECK(to_string(R("-1/4")) == "-1/4");
  CHECK(to_string(R("+6/8")) == "3/4");
  CHECK(to_string(R("0/5")) == "0");
  CHECK(R("10000000000000000000000/3") * 3 == R("10000000000000000000000"));
}

TEST_CASE("malformed fractions are input errors") {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "a", "1/2/3", " 1", "--1", "1/-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), InputError);
  }
}

TEST_CASE("printed rationals re-parse to the same value") {
  gen::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Rational q = g.any(1000, 997);
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("floor and ceil") {
  CHECK(floor_of(R("7/3")) == 2);
  CHECK(floor_of(R("-7/3")) == -3);
  CHECK(floor_of(R("-3")) == -3);
  CHECK(ceil_of(R("7/3")) == 3);
  CHECK(ceil_of(R("-7/3")) == -2);
  CHECK(ceil_of(R("5")) == 5);
}

TEST_CASE("sqrt helpers") {
  Rational root;
  CHECK(rational_sqrt(R("9/4"), root));
  CHECK(root == R("3/2"));
  CHECK_FALSE(rational_sqrt(R("2"), root));
  gen::Gen g(12);
  for (int i = 0; i < 100; ++i) {
    const Rational x = g.closed(Rational(0), Rational(50), 40);
    const Rational u = sqrt_upper_bound(x);
    CHECK(u * u >= x);
  }
}

namespace {

using Big = boost::multiprecision::cpp_dec_float_100;

Big big(const Rational& q) {
  return Big(numerator_of(q).str()) / Big(denominator_of(q).str());
}

Big big(const Surd& s) {
  return big(s.rational_part()) + big(s.surd_part()) * sqrt(Big(s.radicand().str()));
}

}  // namespace

TEST_CASE("surd basics") {
  CHECK(Surd::sqrt_of(R("4")).is_rational());
  CHECK(Surd::sqrt_of(R("4")) == Surd(R("2")));
  CHECK(Surd::sqrt_of(R("8")).str() == "2*sqrt(2)");
  CHECK(Surd::sqrt_of(R("1/2")).str() == "1/2*sqrt(2)");
  CHECK((Surd(R("1")) - Surd::sqrt_of(R("2"))).sign() < 0);
  CHECK(Surd::sqrt_of(R("2")) < Surd(R("3/2")));
  CHECK(Surd::sqrt_of(R("2")) > Surd(R("7/5")));
  CHECK(Surd::sqrt_of(R("3")) > Surd::sqrt_of(R("2")));
  CHECK((Surd::sqrt_of(R("2")) * Surd::sqrt_of(R("2"))) == Surd(R("2")));
}

TEST_CASE("surd comparison agrees with 100-digit evaluation") {
  gen::Gen g(13);
  const long long radicands[] = {2, 3, 5, 6, 7, 10, 12};
  for (int i = 0; i < 500; ++i) {
    const Surd x(g.any(5, 12), g.any(3, 12), Integer(radicands[g.integer(0, 6)]));
    const Surd y(g.any(5, 12), g.any(3, 12), Integer(radicands[g.integer(0, 6)]));
    const Big dx = big(x);
    const Big dy = big(y);
    CAPTURE(x.str());
    CAPTURE(y.str());
    if (dx < dy) CHECK(x < y);
    if (dx > dy) CHECK(x > y);
    if (x == y) CHECK(abs(dx - dy) < Big("1e-80"));
    CHECK(x.sign() == (dx > 0) - (dx < 0));
  }
}
