#include "tiltwall/rational.hpp"

#include <cctype>

namespace tiltwall {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string to_string(const Rational& q) {
  const Integer d = denominator_of(q);
  std::string out = numerator_of(q).str();
  if (d != 1) {
    out += '/';
    out += d.str();
  }
  return out;
}

Integer floor_of(const Rational& q) {
  const Integer n = numerator_of(q);
  const Integer d = denominator_of(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

namespace {

bool integer_sqrt_exact(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

}  // namespace

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  Integer rn, rd;
  if (!integer_sqrt_exact(numerator_of(q), rn) || !integer_sqrt_exact(denominator_of(q), rd)) {
    return false;
  }
  root = Rational(rn, rd);
  return true;
}

Rational sqrt_upper_bound(const Rational& q) {
  if (q < 0) throw DomainError("sqrt of negative rational");
  // sqrt(n/d) = sqrt(n*d)/d <= (isqrt(n*d)+1)/d
  const Integer d = denominator_of(q);
  const Integer s = boost::multiprecision::sqrt(numerator_of(q) * d);
  if (s * s == numerator_of(q) * d) return Rational(s, d);
  return Rational(s + 1, d);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace tiltwall
