#pragma once

#include "tiltwall/numclass.hpp"
#include "tiltwall/surd.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace tiltwall {

/// A point (beta, alpha) of the tilt parameter plane. Construction through
/// in_u() guarantees alpha > beta^2/2; closure() also admits the boundary.
class ParamPoint {
 public:
  static ParamPoint in_u(Rational beta, Rational alpha);
  static ParamPoint closure(Rational beta, Rational alpha);
  static bool is_in_u(const Rational& beta, const Rational& alpha) {
    return 2 * alpha > beta * beta;
  }

  const Rational& beta() const { return beta_; }
  const Rational& alpha() const { return alpha_; }
  /// omega^2 = 2 alpha - beta^2.
  Rational omega2() const { return 2 * alpha_ - beta_ * beta_; }
  bool interior() const { return is_in_u(beta_, alpha_); }

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;

 private:
  ParamPoint(Rational beta, Rational alpha) : beta_(std::move(beta)), alpha_(std::move(alpha)) {}
  Rational beta_;
  Rational alpha_;
};

/// Slope value: a rational or +infinity (above every finite slope).
class Slope {
 public:
  static Slope finite(Rational q) { return Slope(std::move(q), false); }
  static Slope infinity() { return Slope(Rational(0), true); }
  /// num/den, +infinity when den == 0.
  static Slope ratio(const Rational& num, const Rational& den);

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;

  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);
  friend bool operator==(const Slope& a, const Slope& b) { return (a <=> b) == 0; }
  std::string str() const;

 private:
  Slope(Rational q, bool inf) : value_(std::move(q)), infinite_(inf) {}
  Rational value_;
  bool infinite_;
};

struct ChargeValue {
  Rational re{0};
  Rational im{0};
  friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

/// Components of ch . e^{-beta H}.
std::array<Rational, 4> twisted_v(const NumClass& v, const Rational& beta);

/// mu = v1/v0, +infinity for rank zero.
Slope slope_mu(const NumClass& v);

/// nu^{beta,alpha} = (v2 - alpha v0)/(v1 - beta v0); +infinity when the
/// denominator vanishes (including 0/0).
Slope tilt_slope_nu(const NumClass& v, const ParamPoint& p);

/// Generalized discriminant v1^2 - 2 v0 v2.
Rational discriminant(const NumClass& v);

/// Z^{beta,alpha} = -v2 + alpha v0 + i (v1 - beta v0).
ChargeValue central_charge_2(const NumClass& v, const ParamPoint& p);

/// Z^{beta,alpha,a} = -v3^b + a v1^b + i (v2^b - (alpha - beta^2/2) v0^b).
ChargeValue central_charge_3(const NumClass& v, const ParamPoint& p, const Rational& a);

/// (omega^2/6) v1^beta - v3^beta; nonnegative iff the BG-type inequality
/// holds numerically.
Rational bg_margin(const NumClass& v, const ParamPoint& p);

struct BgCheck {
  Rational margin;
  bool holds;       // margin >= 0
  bool slope_is_beta;  // nu^{beta,alpha}(v) == beta, the hypothesis of the inequality
};
BgCheck bg_check(const NumClass& v, const ParamPoint& p);

/// omega^2 Delta + 4 (v2^b)^2 - 6 v3^b v1^b.
Rational quadratic_form_Q(const NumClass& v, const ParamPoint& p);

/// Locus C_E = {nu^{beta,alpha}(E) = beta, v1 > beta v0} inside U.
struct CurveCE {
  enum class Kind { Parabola, VerticalLine, Empty };
  Kind kind = Kind::Empty;
  /// Parabola alpha = beta^2 + linear*beta + constant.
  Rational linear{0};
  Rational constant{0};
  /// Parabola branch: beta < endpoint when branch_below, else beta > endpoint.
  /// Vertical line: beta == endpoint (rational).
  Surd endpoint;
  bool branch_below = true;

  bool contains(const Rational& beta, const Rational& alpha) const;
  /// alpha on the parabola at beta.
  Rational alpha_at(const Rational& beta) const { return beta * beta + linear * beta + constant; }
};

CurveCE curve_CE(const NumClass& v);

/// beta-coordinate of the end of C_E on the boundary of U. DomainError for
/// an empty curve.
Surd curve_endpoint(const NumClass& v);

/// alpha_E^beta = beta^2 - (v1/v0) beta + v2/v0; DomainError when v0 == 0.
Rational alpha_E_beta(const NumClass& v, const Rational& beta);

/// (mu_1, mu_2) = mu -/+ sqrt(Delta)/v0; DomainError when v0 == 0 or Delta < 0.
std::pair<Surd, Surd> mu12(const NumClass& v);

/// (beta + n, alpha + n beta + n^2/2): the parameter-plane image of - (x) O(n).
ParamPoint shift_transform(const ParamPoint& p, long long n);

/// (-beta, alpha): the image of the shifted derived dual.
ParamPoint dual_transform(const ParamPoint& p);

/// One generator of a reduction: a shift by n or the dual.
struct TransformStep {
  enum class Kind { Shift, Dual };
  Kind kind = Kind::Shift;
  long long n = 0;
  std::string str() const;
  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};
using TransformLog = std::vector<TransformStep>;

struct Reduction {
  ParamPoint point;
  TransformLog log;
  /// omega < 1/2 at the reduced point (same omega as the input).
  bool small_omega;
};

/// Maps p into the fundamental domain -1/2 <= beta <= 0.
Reduction reduce_to_fundamental(const ParamPoint& p);
ParamPoint apply_log(const ParamPoint& p, const TransformLog& log);
/// The inverse sequence: apply_log(apply_log(p, log), invert_log(log)) == p.
TransformLog invert_log(const TransformLog& log);

/// min{ v1 - beta v0 > 0 : v0, v1 integers } = 1/q for beta = p/q.
Rational min_positive_v1beta(const Rational& beta);

}  // namespace tiltwall
