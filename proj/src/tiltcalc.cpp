#include "tiltwall/tiltcalc.hpp"

namespace tiltwall {

ParamPoint ParamPoint::in_u(Rational beta, Rational alpha) {
  if (!is_in_u(beta, alpha)) {
    throw DomainError("(" + to_string(beta) + ", " + to_string(alpha) +
                      ") is not in U: need alpha > beta^2/2");
  }
  return {std::move(beta), std::move(alpha)};
}

ParamPoint ParamPoint::closure(Rational beta, Rational alpha) {
  if (2 * alpha < beta * beta) {
    throw DomainError("(" + to_string(beta) + ", " + to_string(alpha) +
                      ") is outside the closure of U");
  }
  return {std::move(beta), std::move(alpha)};
}

Slope Slope::ratio(const Rational& num, const Rational& den) {
  if (den == 0) return infinity();
  return finite(num / den);
}

const Rational& Slope::value() const {
  if (infinite_) throw DomainError("infinite slope has no rational value");
  return value_;
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Slope::str() const { return infinite_ ? "+inf" : to_string(value_); }

std::array<Rational, 4> twisted_v(const NumClass& v, const Rational& beta) {
  const NumClass t = tensor_line(v, -beta);
  return {t.v0, t.v1, t.v2, t.v3};
}

Slope slope_mu(const NumClass& v) { return Slope::ratio(v.v1, v.v0); }

Slope tilt_slope_nu(const NumClass& v, const ParamPoint& p) {
  return Slope::ratio(v.v2 - p.alpha() * v.v0, v.v1 - p.beta() * v.v0);
}

Rational discriminant(const NumClass& v) { return v.v1 * v.v1 - 2 * v.v0 * v.v2; }

ChargeValue central_charge_2(const NumClass& v, const ParamPoint& p) {
  return {-v.v2 + p.alpha() * v.v0, v.v1 - p.beta() * v.v0};
}

ChargeValue central_charge_3(const NumClass& v, const ParamPoint& p, const Rational& a) {
  const auto t = twisted_v(v, p.beta());
  const Rational shift = p.alpha() - p.beta() * p.beta() / 2;
  return {-t[3] + a * t[1], t[2] - shift * t[0]};
}

Rational bg_margin(const NumClass& v, const ParamPoint& p) {
  const auto t = twisted_v(v, p.beta());
  return p.omega2() / 6 * t[1] - t[3];
}

BgCheck bg_check(const NumClass& v, const ParamPoint& p) {
  BgCheck out{bg_margin(v, p), false, false};
  out.holds = out.margin >= 0;
  const Slope nu = tilt_slope_nu(v, p);
  out.slope_is_beta = !nu.is_infinite() && nu.value() == p.beta();
  return out;
}

Rational quadratic_form_Q(const NumClass& v, const ParamPoint& p) {
  const auto t = twisted_v(v, p.beta());
  return p.omega2() * discriminant(v) + 4 * t[2] * t[2] - 6 * t[3] * t[1];
}

bool CurveCE::contains(const Rational& beta, const Rational& alpha) const {
  switch (kind) {
    case Kind::Empty:
      return false;
    case Kind::VerticalLine:
      return Surd(beta) == endpoint && ParamPoint::is_in_u(beta, alpha);
    case Kind::Parabola: {
      if (alpha != alpha_at(beta)) return false;
      const Surd b(beta);
      return branch_below ? b < endpoint : b > endpoint;
    }
  }
  return false;
}

CurveCE curve_CE(const NumClass& v) {
  CurveCE c;
  if (v.v0 == 0) {
    if (v.v1 <= 0) return c;
    c.kind = CurveCE::Kind::VerticalLine;
    c.endpoint = Surd(v.v2 / v.v1);
    return c;
  }
  const Rational disc = discriminant(v);
  if (disc < 0) return c;
  c.kind = CurveCE::Kind::Parabola;
  c.linear = -v.v1 / v.v0;
  c.constant = v.v2 / v.v0;
  // On the parabola, 2 alpha - beta^2 = (beta - mu)^2 - disc/v0^2, and
  // v1 > beta v0 selects the side of mu; for either sign of v0 the branch
  // ends at (v1 - sqrt(disc))/v0.
  c.endpoint = (Surd(v.v1) - Surd::sqrt_of(disc)) / v.v0;
  c.branch_below = v.v0 > 0;
  return c;
}

Surd curve_endpoint(const NumClass& v) {
  const CurveCE c = curve_CE(v);
  if (c.kind == CurveCE::Kind::Empty) {
    throw DomainError("curve C_E is empty for " + to_literal(v));
  }
  return c.endpoint;
}

Rational alpha_E_beta(const NumClass& v, const Rational& beta) {
  if (v.v0 == 0) throw DomainError("alpha_E^beta needs nonzero rank");
  return beta * beta - v.v1 / v.v0 * beta + v.v2 / v.v0;
}

std::pair<Surd, Surd> mu12(const NumClass& v) {
  if (v.v0 == 0) throw DomainError("mu_1, mu_2 need nonzero rank");
  const Rational disc = discriminant(v);
  if (disc < 0) throw DomainError("mu_1, mu_2 need a nonnegative discriminant");
  const Rational mu = v.v1 / v.v0;
  const Surd root = Surd::sqrt_of(disc) / v.v0;
  return {mu - root, mu + root};
}

ParamPoint shift_transform(const ParamPoint& p, long long n) {
  const Rational q(n);
  return ParamPoint::closure(p.beta() + q, p.alpha() + q * p.beta() + q * q / 2);
}

ParamPoint dual_transform(const ParamPoint& p) {
  return ParamPoint::closure(-p.beta(), p.alpha());
}

std::string TransformStep::str() const {
  return kind == Kind::Dual ? std::string("dual") : "shift:" + std::to_string(n);
}

ParamPoint apply_log(const ParamPoint& p, const TransformLog& log) {
  ParamPoint q = p;
  for (const auto& step : log) {
    q = step.kind == TransformStep::Kind::Dual ? dual_transform(q) : shift_transform(q, step.n);
  }
  return q;
}

TransformLog invert_log(const TransformLog& log) {
  TransformLog inv;
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    TransformStep s = *it;
    if (s.kind == TransformStep::Kind::Shift) s.n = -s.n;
    inv.push_back(s);
  }
  return inv;
}

Reduction reduce_to_fundamental(const ParamPoint& p) {
  // least n with beta + n >= -1/2
  const Integer n = ceil_of(Rational(-1, 2) - p.beta());
  TransformLog log;
  ParamPoint q = p;
  if (n != 0) {
    const TransformStep step{TransformStep::Kind::Shift, n.convert_to<long long>()};
    q = shift_transform(q, step.n);
    log.push_back(step);
  }
  if (q.beta() > 0) {
    q = dual_transform(q);
    log.push_back({TransformStep::Kind::Dual, 0});
  }
  const bool small = q.omega2() < Rational(1, 4);
  return {q, log, small};
}

Rational min_positive_v1beta(const Rational& beta) {
  return Rational(Integer(1), denominator_of(beta));
}

}  // namespace tiltwall
