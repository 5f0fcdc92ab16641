#include "gen.hpp"
#include "helpers.hpp"
#include "poly.hpp"
#include "tiltwall/tiltcalc.hpp"

#include <doctest.h>

using namespace tiltwall;
using helpers::C;
using helpers::R;

namespace {

ParamPoint P(const char* b, const char* a) { return ParamPoint::in_u(R(b), R(a)); }

std::array<Rational, 4> arr(const char* a, const char* b, const char* c, const char* d) {
  return {R(a), R(b), R(c), R(d)};
}

// Symbolic variables: v0..v3, beta, alpha.
constexpr int kVars = 6;
oracle::Poly var(int i) { return oracle::Poly::var(kVars, i); }
oracle::Poly cst(const Rational& q) { return oracle::Poly::constant(kVars, q); }

oracle::Poly margin_poly(const std::vector<oracle::Poly>& v, const oracle::Poly& beta,
                         const oracle::Poly& alpha) {
  const auto t = oracle::times_exp(v, -beta);
  return (cst(2) * alpha - beta * beta) * cst(Rational(1, 6)) * t[1] - t[3];
}

// A rational on the branch at distance more than `margin` from the endpoint.
Rational inside_branch(const CurveCE& c, const Rational& margin) {
  const Surd& e = c.endpoint;
  const Rational spread = abs(e.surd_part()) * sqrt_upper_bound(Rational(e.radicand())) + margin;
  return c.branch_below ? e.rational_part() - spread : e.rational_part() + spread;
}

}  // namespace

TEST_CASE("ParamPoint construction") {
  CHECK_NOTHROW(P("0", "1/100"));
  CHECK_THROWS_AS(P("-1/2", "1/8"), DomainError);
  CHECK_THROWS_AS(P("0", "0"), DomainError);
  CHECK_NOTHROW(ParamPoint::closure(R("-1/2"), R("1/8")));
  CHECK_THROWS_AS(ParamPoint::closure(R("1"), R("0")), DomainError);
  CHECK(P("-1/4", "1/8").omega2() == R("3/16"));
}

TEST_CASE("twisted_v examples") {
  CHECK(twisted_v(C("O(1)"), R("0")) == arr("1", "1", "1/2", "1/6"));
  CHECK(twisted_v(C("O(1)"), R("-1/4")) == arr("1", "5/4", "25/32", "125/384"));
  CHECK(twisted_v(C("T(-2)"), R("-1/2")) == arr("3", "-1/2", "-5/8", "23/48"));
}

TEST_CASE("slopes") {
  for (long long d = -3; d <= 3; ++d) CHECK(slope_mu(class_of_line_bundle(d)) == Slope::finite(d));
  CHECK(slope_mu(C("T(-2)")) == Slope::finite(R("-2/3")));
  CHECK(slope_mu(C("point")).is_infinite());
  CHECK(Slope::infinity() > Slope::finite(R("1000000")));
  CHECK(Slope::infinity() == Slope::infinity());
  CHECK(Slope::finite(R("1/2")) < Slope::finite(R("2/3")));
  CHECK(Slope::infinity().str() == "+inf");
  CHECK_THROWS_AS((void)Slope::infinity().value(), DomainError);

  gen::Gen g(41);
  for (int i = 0; i < 50; ++i) {
    const ParamPoint p = g.point_in_u();
    const Rational b = p.beta();
    const Rational a = p.alpha();
    if (b < 0) CHECK(tilt_slope_nu(C("O"), p) == Slope::finite(a / b));
    if (b != 1) CHECK(tilt_slope_nu(C("O(1)"), p) == Slope::finite((1 - 2 * a) / (2 - 2 * b)));
    if (3 * b != -2) {
      CHECK(tilt_slope_nu(shift(C("T(-2)"), 1), p) == Slope::finite(3 * a / (2 + 3 * b)));
    }
    CHECK(tilt_slope_nu(C("point"), p).is_infinite());
  }
  CHECK(tilt_slope_nu(C("O"), P("0", "1")).is_infinite());
}

TEST_CASE("discriminant") {
  for (long long d = -5; d <= 5; ++d) CHECK(discriminant(class_of_line_bundle(d)) == 0);
  CHECK(discriminant(C("T(-2)")) == 4);
  CHECK(discriminant(C("Omega(1)")) == 4);
}

TEST_CASE("central charges") {
  const Rational eps = R("1/1000");
  CHECK(central_charge_2(C("point"), P("1/3", "7")) == ChargeValue{0, 0});
  CHECK(central_charge_2(C("O"), ParamPoint::in_u(R("-1/2"), R("1/4") + eps)) ==
        ChargeValue{R("1/4") + eps, R("1/2")});
  CHECK(central_charge_2(C("O(1)"), P("0", "1/8")) == ChargeValue{R("-3/8"), 1});
  CHECK(central_charge_3(C("O(1)"), P("-1/4", "1/8"), R("1/32")) ==
        ChargeValue{R("-55/192"), R("11/16")});
  CHECK(central_charge_3(C("point"), P("2", "3"), R("5")) == ChargeValue{-1, 0});
  gen::Gen g(42);
  for (int i = 0; i < 30; ++i) {
    const Rational b = g.open(R("-3"), R("3"));
    if (b == 0) continue;
    const Rational a = g.any();
    CHECK(central_charge_3(C("O"), ParamPoint::in_u(b, b * b), a) ==
          ChargeValue{b * b * b / 6 - a * b, 0});
  }
}

TEST_CASE("bg_margin and Q examples") {
  CHECK(bg_margin(C("O"), P("-1/3", "1/9")) == 0);
  CHECK(bg_margin(C("O(1)"), P("-1/4", "1/8")) == R("-55/192"));
  CHECK(bg_margin(NumClass{}, P("1", "1")) == 0);
  const BgCheck bg = bg_check(C("O"), P("-1/3", "1/9"));
  CHECK(bg.holds);
  CHECK(bg.slope_is_beta);
  CHECK_FALSE(bg_check(C("O(1)"), P("-1/4", "1/8")).holds);
  CHECK(quadratic_form_Q(C("point"), P("1/2", "2")) == 0);
  CHECK(quadratic_form_Q(C("T(-2)"), P("0", "1/8")) == 9);
}

TEST_CASE("saturation by line bundles") {
  gen::Gen g(43);
  for (int i = 0; i < 60; ++i) {
    const long long d = g.integer(-5, 5);
    const NumClass o = class_of_line_bundle(d);
    const ParamPoint p = g.point_in_u();
    CHECK(quadratic_form_Q(o, p) == 0);
    CHECK(discriminant(o) == 0);
    const Rational b = g.any();
    if (b == Rational(d)) continue;
    const ParamPoint on_curve = ParamPoint::in_u(b, alpha_E_beta(o, b));
    CHECK(bg_margin(o, on_curve) == 0);
  }
}

TEST_CASE("curve C_E") {
  const CurveCE o = curve_CE(C("O"));
  CHECK(o.kind == CurveCE::Kind::Parabola);
  CHECK(o.linear == 0);
  CHECK(o.constant == 0);
  CHECK(o.branch_below);
  CHECK(o.endpoint == Surd(0));
  CHECK(o.contains(R("-1/2"), R("1/4")));
  CHECK_FALSE(o.contains(R("1/2"), R("1/4")));
  CHECK(curve_CE(C("point")).kind == CurveCE::Kind::Empty);
  CHECK(curve_CE(C("0,-1,0,0")).kind == CurveCE::Kind::Empty);
  CHECK(curve_CE(C("1,0,1,0")).kind == CurveCE::Kind::Empty);  // Delta < 0
  const CurveCE line = curve_CE(C("0,1,0,0"));
  CHECK(line.kind == CurveCE::Kind::VerticalLine);
  CHECK(line.endpoint == Surd(0));
  CHECK(line.contains(R("0"), R("1")));
  CHECK_FALSE(line.contains(R("0"), R("0")));
}

TEST_CASE("curve endpoint") {
  CHECK(curve_endpoint(C("O")) == Surd(0));
  CHECK(curve_endpoint(C("T(-2)")) == Surd(R("-4/3")));
  CHECK(curve_endpoint(C("0,1,0,0")) == Surd(0));
  CHECK(curve_endpoint(C("0,2,1,0")) == Surd(R("1/2")));
  CHECK_THROWS_AS(curve_endpoint(C("point")), DomainError);
  // negative rank: the branch beta > -2/3 of T(-2)[1] ends at 0
  CHECK(curve_endpoint(shift(C("T(-2)"), 1)) == Surd(0));
}

TEST_CASE("the endpoint is where the branch meets the boundary of U") {
  gen::Gen g(44);
  int checked = 0;
  while (checked < 100) {
    const NumClass v = g.integral_class();
    const CurveCE c = curve_CE(v);
    if (c.kind != CurveCE::Kind::Parabola) continue;
    ++checked;
    const Surd e = c.endpoint;
    CHECK(e * e + c.linear * e + c.constant == Rational(1, 2) * (e * e));
    const Rational b = inside_branch(c, g.open(R("0"), R("3")));
    CHECK(c.contains(b, c.alpha_at(b)));
    CHECK(v.v1 - b * v.v0 > 0);
    CHECK(ParamPoint::is_in_u(b, c.alpha_at(b)));
  }
}

TEST_CASE("omega decreases toward the endpoint") {
  gen::Gen g(45);
  int checked = 0;
  while (checked < 100) {
    const NumClass v = g.integral_class();
    const CurveCE c = curve_CE(v);
    if (c.kind != CurveCE::Kind::Parabola) continue;
    ++checked;
    const Rational near = inside_branch(c, g.open(R("0"), R("1")));
    const Rational gap = g.open(R("0"), R("2"));
    const Rational far = c.branch_below ? near - gap : near + gap;
    auto omega2 = [&](const Rational& b) { return 2 * c.alpha_at(b) - b * b; };
    CHECK(omega2(near) < omega2(far));
    CHECK(omega2(near) > 0);
  }
}

TEST_CASE("alpha_E^beta and mu_1, mu_2") {
  gen::Gen g(46);
  for (int i = 0; i < 20; ++i) {
    const Rational b = g.any();
    CHECK(alpha_E_beta(C("O"), b) == b * b);
  }
  CHECK(mu12(C("O")) == std::pair<Surd, Surd>{Surd(0), Surd(0)});
  CHECK(alpha_E_beta(C("T(-2)"), R("-1")) == R("1/3"));
  CHECK(mu12(C("T(-2)")) == std::pair<Surd, Surd>{Surd(R("-4/3")), Surd(0)});
  CHECK_THROWS_AS(alpha_E_beta(C("point"), R("0")), DomainError);
  CHECK_THROWS_AS(mu12(C("0,1,0,0")), DomainError);
  CHECK_THROWS_AS(mu12(C("1,0,1,0")), DomainError);
  const auto [m1, m2] = mu12(C("1,1,0,0"));
  CHECK(m1 == Surd(0));
  CHECK(m2 == Surd(2));
  const auto [s1, s2] = mu12(C("1,0,-1,0"));  // Delta = 2
  CHECK(s1 == -Surd::sqrt_of(R("2")));
  CHECK(s2 == Surd::sqrt_of(R("2")));
}

TEST_CASE("shift and dual transforms") {
  CHECK(shift_transform(P("0", "1"), 1) == ParamPoint::closure(R("1"), R("3/2")));
  CHECK(shift_transform(P("7/3", "3"), -2) == ParamPoint::closure(R("1/3"), R("1/3")));
  CHECK(shift_transform(P("5/7", "2"), 0) == P("5/7", "2"));
  CHECK(dual_transform(P("0", "1")) == P("0", "1"));
  CHECK(dual_transform(P("1/3", "1/3")) == P("-1/3", "1/3"));
  CHECK(dual_transform(P("-1/2", "26/100")) == P("1/2", "26/100"));
  gen::Gen g(47);
  for (int i = 0; i < 50; ++i) {
    const ParamPoint p = g.point_in_u();
    const long long n = g.integer(-6, 6);
    CHECK(shift_transform(p, n).omega2() == p.omega2());
    CHECK(shift_transform(shift_transform(p, n), -n) == p);
    CHECK(dual_transform(p).omega2() == p.omega2());
  }
}

TEST_CASE("reduction to the fundamental domain") {
  const Reduction r = reduce_to_fundamental(P("7/3", "3"));
  CHECK(r.point == ParamPoint::closure(R("-1/3"), R("1/3")));
  REQUIRE(r.log.size() == 2);
  CHECK(r.log[0].str() == "shift:-2");
  CHECK(r.log[1].str() == "dual");
  CHECK_FALSE(r.small_omega);  // omega^2 = 5/9
  CHECK(reduce_to_fundamental(P("0", "1")).log.empty());
  CHECK(reduce_to_fundamental(P("0", "1")).point == P("0", "1"));
  const Reduction edge = reduce_to_fundamental(P("-1/2", "1/2"));
  CHECK(edge.log.empty());
  CHECK(edge.point == P("-1/2", "1/2"));

  gen::Gen g(48);
  for (int i = 0; i < 200; ++i) {
    const ParamPoint p = g.point_in_u(6);
    const Reduction red = reduce_to_fundamental(p);
    CHECK(red.point.beta() >= R("-1/2"));
    CHECK(red.point.beta() <= 0);
    CHECK(red.point.omega2() == p.omega2());
    CHECK(red.small_omega == (p.omega2() < R("1/4")));
    CHECK(apply_log(p, red.log) == red.point);
    CHECK(apply_log(red.point, invert_log(red.log)) == p);
  }
}

TEST_CASE("minimal positive twisted degree") {
  CHECK(min_positive_v1beta(R("-1/2")) == R("1/2"));
  CHECK(twisted_v(C("Omega(1)"), R("-1/2"))[1] == R("1/2"));
  CHECK(min_positive_v1beta(R("0")) == 1);
  CHECK(min_positive_v1beta(R("-2/3")) == R("1/3"));
  gen::Gen g(49);
  for (int i = 0; i < 20; ++i) {
    const Rational b = g.any(3, 12);
    std::optional<Rational> best;
    for (int v0 = -50; v0 <= 50; ++v0) {
      for (int v1 = -50; v1 <= 50; ++v1) {
        const Rational x = v1 - b * v0;
        if (x > 0 && (!best || x < *best)) best = x;
      }
    }
    CHECK(min_positive_v1beta(b) == *best);
  }
}

TEST_CASE("twisted_v equals the truncated product with exp(-beta H)") {
  std::vector<oracle::Poly> v{var(0), var(1), var(2), var(3)};
  const auto t = oracle::times_exp(v, -var(4));
  gen::Gen g(50);
  for (int i = 0; i < 100; ++i) {
    const NumClass c = g.rational_class();
    const Rational b = g.any();
    const std::vector<Rational> x{c.v0, c.v1, c.v2, c.v3, b, 0};
    const auto tw = twisted_v(c, b);
    for (int j = 0; j < 4; ++j) CHECK(tw[j] == t[j].eval(x));
    CHECK(tw[1] * tw[1] - 2 * tw[2] * tw[0] == discriminant(c));
  }
}

TEST_CASE("symbolic identities") {
  std::vector<oracle::Poly> v{var(0), var(1), var(2), var(3)};
  const oracle::Poly b = var(4);
  const oracle::Poly a = var(5);
  const oracle::Poly m = margin_poly(v, b, a);

  SUBCASE("dual equivariance") {
    std::vector<oracle::Poly> d{-var(0), var(1), -var(2), var(3)};
    CHECK(margin_poly(d, -b, a) == m);
  }
  SUBCASE("tensor-shift equivariance") {
    const auto t1 = oracle::times_exp(v, cst(1));
    CHECK(margin_poly(t1, b + cst(1), a + b + cst(Rational(1, 2))) == m);
  }
  SUBCASE("discriminant is twist invariant") {
    const auto t = oracle::times_exp(v, -b);
    CHECK(t[1] * t[1] - cst(2) * t[2] * t[0] == v[1] * v[1] - cst(2) * v[0] * v[2]);
  }
  SUBCASE("kernel restriction") {
    // ker Z^{b,a} is spanned by (x, b x, a x) in the first three slots
    const oracle::Poly x = var(0);
    const oracle::Poly restricted = (b * x) * (b * x) - cst(2) * x * (a * x);
    CHECK(restricted == (b * b - cst(2) * a) * x * x);
    gen::Gen g(51);
    for (int i = 0; i < 20; ++i) {
      const ParamPoint p = g.point_in_u();
      const Rational xv = g.any();
      const NumClass k(xv, p.beta() * xv, p.alpha() * xv, g.any());
      CHECK(central_charge_2(k, p) == ChargeValue{0, 0});
      CHECK(discriminant(k) == (p.beta() * p.beta() - 2 * p.alpha()) * xv * xv);
      if (xv != 0) CHECK(discriminant(k) < 0);
    }
  }
  SUBCASE("Q of a line bundle vanishes identically") {
    // v = e^{dH}: the twisted class is e^{(d - b)H}
    const oracle::Poly d = var(0);
    std::vector<oracle::Poly> one{cst(1), cst(0), cst(0), cst(0)};
    const auto t = oracle::times_exp(one, d - b);
    const oracle::Poly w2 = cst(2) * a - b * b;
    const oracle::Poly disc = t[1] * t[1] - cst(2) * t[0] * t[2];
    CHECK(disc.is_zero());
    CHECK((w2 * disc + cst(4) * t[2] * t[2] - cst(6) * t[3] * t[1]).is_zero());
  }
}

TEST_CASE("bg_margin equivariance on random classes") {
  gen::Gen g(52);
  for (int i = 0; i < 100; ++i) {
    const NumClass v = g.integral_class();
    const ParamPoint p = g.point_in_u();
    CHECK(bg_margin(tensor_line(v, 1), shift_transform(p, 1)) == bg_margin(v, p));
    CHECK(bg_margin(dual_shifted(v), dual_transform(p)) == bg_margin(v, p));
  }
}

TEST_CASE("margin sign on C_E follows the case split") {
  gen::Gen g(53);
  int checked = 0;
  while (checked < 100) {
    NumClass v = g.integral_class();
    if (checked % 4 == 0) v = NumClass(0, Rational(g.integer(1, 5)), Rational(g.integer(-6, 6), 2), g.any(3, 6));
    const CurveCE c = curve_CE(v);
    if (c.kind == CurveCE::Kind::Empty) continue;
    Rational b, a;
    if (c.kind == CurveCE::Kind::VerticalLine) {
      b = c.endpoint.rational_part();
      a = b * b / 2 + g.open(R("0"), R("3"));
    } else {
      b = inside_branch(c, g.open(R("0"), R("3")));
      a = c.alpha_at(b);
    }
    REQUIRE(c.contains(b, a));
    ++checked;
    const ParamPoint p = ParamPoint::in_u(b, a);
    const bool holds = bg_margin(v, p) >= 0;
    bool split;
    if (v.v0 != 0) {
      split = b * discriminant(v) / v.v0 <= v.v2 * v.v1 / v.v0 - 3 * v.v3;
    } else {
      split = v.v3 - v.v2 * v.v2 / (2 * v.v1) <= p.omega2() / 6 * v.v1;
    }
    CHECK(holds == split);
  }
}
