#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltwall {

// Expression templates are off so that `auto` and lambdas capture values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Malformed user input (bad literal, unknown name, unbounded request).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "p" or "p/q" (optional leading '-' or '+', q > 0). The value is
/// normalized; the canonical spelling is what to_string() returns.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" in lowest terms with positive denominator.
std::string to_string(const Rational& q);

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline int sign(const Rational& q) { return q.sign(); }

inline std::strong_ordering compare(const Rational& x, const Rational& y) {
  if (x < y) return std::strong_ordering::less;
  if (y < x) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// Largest integer <= q.
Integer floor_of(const Rational& q);
/// Smallest integer >= q.
Integer ceil_of(const Rational& q);

/// Exact square root when q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

/// A rational upper bound for sqrt(q), q >= 0, within 1/denominator(q).
Rational sqrt_upper_bound(const Rational& q);

/// Rendering only; never used for decisions.
double to_double(const Rational& q);

}  // namespace tiltwall
