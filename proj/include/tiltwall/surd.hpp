#pragma once

#include "tiltwall/rational.hpp"

#include <compare>
#include <string>

namespace tiltwall {

/// Exact real number a + b*sqrt(radicand) with rational a, b and a positive
/// integer radicand. Rationals have b == 0 and radicand == 1. Radicands are
/// reduced to square-free form when the factorization is cheap; comparisons
/// never depend on that reduction.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& q) : a_(q) {}  // NOLINT(google-explicit-constructor)
  Surd(int q) : a_(q) {}              // NOLINT(google-explicit-constructor)
  Surd(Rational a, Rational b, Integer radicand);

  /// sqrt(q) for q >= 0, rational when q is a rational square.
  static Surd sqrt_of(const Rational& q);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;

  Surd operator-() const { return {-a_, -b_, d_}; }
  Surd& operator+=(const Rational& q) {
    a_ += q;
    return *this;
  }
  Surd& operator*=(const Rational& q);
  Surd& operator/=(const Rational& q);

  friend Surd operator+(Surd x, const Rational& q) { return x += q; }
  friend Surd operator+(const Rational& q, Surd x) { return x += q; }
  friend Surd operator-(Surd x, const Rational& q) { return x += -q; }
  friend Surd operator-(const Rational& q, const Surd& x) { return -x + q; }
  friend Surd operator*(Surd x, const Rational& q) { return x *= q; }
  friend Surd operator*(const Rational& q, Surd x) { return x *= q; }
  friend Surd operator/(Surd x, const Rational& q) { return x /= q; }

  /// Sum and product are defined when radicands agree or one side is rational.
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }
  friend Surd operator*(const Surd& x, const Surd& y);

  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);
  friend bool operator==(const Surd& x, const Surd& y) { return (x <=> y) == 0; }

  /// "a", "b*sqrt(D)" or "a+b*sqrt(D)" with canonical rationals.
  std::string str() const;
  double approx() const;

 private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  Integer d_{1};
};

/// Sign of a + b*sqrt(d1) + c*sqrt(d2), computed exactly.
int sign_of_sum(const Rational& a, const Rational& b, const Integer& d1, const Rational& c,
                const Integer& d2);

inline std::string to_string(const Surd& s) { return s.str(); }

}  // namespace tiltwall
