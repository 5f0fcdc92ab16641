#include "tiltwall/surd.hpp"

#include <cmath>

namespace tiltwall {

namespace {

// Beyond this bound the radicand is left as is.
constexpr unsigned kTrialLimit = 100000;

// Splits n = s^2 * f with f square-free as far as trial division reaches.
void extract_square(const Integer& n, Integer& s, Integer& f) {
  s = 1;
  f = n;
  for (unsigned p = 2; p < kTrialLimit; ++p) {
    const Integer pp = Integer(p) * p;
    if (pp > f) break;
    while (f % pp == 0) {
      f /= pp;
      s *= p;
    }
  }
}

int sign_surd(const Rational& a, const Rational& b, const Integer& d) {
  const int sa = a.sign();
  const int sb = (d == 0) ? 0 : b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  const Rational lhs = a * a;
  const Rational rhs = b * b * Rational(d);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

}  // namespace

Surd::Surd(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  if (d_ < 0) throw DomainError("negative radicand");
  normalize();
}

void Surd::normalize() {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 1;
    return;
  }
  Integer s, f;
  extract_square(d_, s, f);
  b_ *= Rational(s);
  d_ = f;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

Surd Surd::sqrt_of(const Rational& q) {
  if (q < 0) throw DomainError("square root of a negative number");
  const Integer n = numerator_of(q);
  const Integer d = denominator_of(q);
  // sqrt(n/d) = sqrt(n*d) / d
  return Surd(Rational(0), Rational(1, d), n * d);
}

int Surd::sign() const { return sign_surd(a_, b_, d_); }

Surd& Surd::operator*=(const Rational& q) {
  a_ *= q;
  b_ *= q;
  normalize();
  return *this;
}

Surd& Surd::operator/=(const Rational& q) {
  if (q == 0) throw DomainError("division by zero");
  a_ /= q;
  b_ /= q;
  return *this;
}

Surd operator+(const Surd& x, const Surd& y) {
  if (y.is_rational()) return x + y.a_;
  if (x.is_rational()) return y + x.a_;
  if (x.d_ != y.d_) throw DomainError("sum of surds with different radicands");
  return Surd(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

Surd operator*(const Surd& x, const Surd& y) {
  if (y.is_rational()) return x * y.a_;
  if (x.is_rational()) return y * x.a_;
  if (x.d_ != y.d_) throw DomainError("product of surds with different radicands");
  const Rational d(x.d_);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.d_);
}

int sign_of_sum(const Rational& a, const Rational& b, const Integer& d1, const Rational& c,
                const Integer& d2) {
  const int su = sign_surd(a, b, d1);
  const int sv = (d2 == 0) ? 0 : c.sign();
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // |u| versus |v| through u^2 - v^2 = (a^2 + b^2 d1 - c^2 d2) + 2ab sqrt(d1)
  const int s = sign_surd(a * a + b * b * Rational(d1) - c * c * Rational(d2),
                          2 * a * b, d1);
  if (s > 0) return su;
  if (s < 0) return sv;
  return 0;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  const int s = sign_of_sum(x.a_ - y.a_, x.b_, x.d_, -y.b_, y.d_);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Surd::str() const {
  if (b_ == 0) return to_string(a_);
  std::string out;
  if (a_ != 0) out = to_string(a_);
  if (b_ == 1) {
    out += a_ != 0 ? "+" : "";
  } else if (b_ == -1) {
    out += "-";
  } else {
    if (a_ != 0 && b_ > 0) out += "+";
    out += to_string(b_) + "*";
  }
  out += "sqrt(" + d_.str() + ")";
  return out;
}

double Surd::approx() const {
  return to_double(a_) + to_double(b_) * std::sqrt(d_.convert_to<double>());
}

}  // namespace tiltwall
