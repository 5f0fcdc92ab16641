#include "tiltwall/numclass.hpp"

#include "tiltwall/euler.hpp"

#include <charconv>
#include <string>

namespace tiltwall {

const Rational& NumClass::operator[](int i) const {
  switch (i) {
    case 0:
      return v0;
    case 1:
      return v1;
    case 2:
      return v2;
    case 3:
      return v3;
    default:
      throw std::out_of_range("NumClass index");
  }
}

NumClass& NumClass::operator+=(const NumClass& w) {
  v0 += w.v0;
  v1 += w.v1;
  v2 += w.v2;
  v3 += w.v3;
  return *this;
}

NumClass& NumClass::operator-=(const NumClass& w) {
  v0 -= w.v0;
  v1 -= w.v1;
  v2 -= w.v2;
  v3 -= w.v3;
  return *this;
}

NumClass& NumClass::operator*=(const Rational& k) {
  v0 *= k;
  v1 *= k;
  v2 *= k;
  v3 *= k;
  return *this;
}

NumClass class_of_line_bundle(long long d) {
  const Rational q(d);
  return {Rational(1), q, q * q / 2, q * q * q / 6};
}

NumClass shift(const NumClass& v, long long k) { return (k % 2 == 0) ? v : -v; }

NumClass tensor_line(const NumClass& v, const Rational& m) {
  const Rational m2 = m * m / 2;
  const Rational m3 = m * m * m / 6;
  return {v.v0, v.v1 + m * v.v0, v.v2 + m * v.v1 + m2 * v.v0,
          v.v3 + m * v.v2 + m2 * v.v1 + m3 * v.v0};
}

NumClass dual_shifted(const NumClass& v) { return {-v.v0, v.v1, -v.v2, v.v3}; }

NumClass dual_p3(const NumClass& v) { return {v.v0, -v.v1, v.v2, -v.v3}; }

NumClass truncated_product(const NumClass& v, const NumClass& w) {
  return {v.v0 * w.v0, v.v0 * w.v1 + v.v1 * w.v0, v.v0 * w.v2 + v.v1 * w.v1 + v.v2 * w.v0,
          v.v0 * w.v3 + v.v1 * w.v2 + v.v2 * w.v1 + v.v3 * w.v0};
}

bool is_integral_class(const NumClass& v) {
  // chi(v(m)) is a cubic in m; integer values at four consecutive m
  // make it integer-valued on all of Z.
  for (int m = 0; m <= 3; ++m) {
    if (!is_integer(chi_p3(tensor_line(v, Rational(m))))) return false;
  }
  return true;
}

namespace {

// Tangent bundle from the Euler sequence 0 -> O -> O(1)^4 -> T -> 0.
NumClass tangent_class() { return 4 * class_of_line_bundle(1) - class_of_line_bundle(0); }

bool parse_twist(std::string_view name, std::string_view head, long long& d) {
  if (name.size() < head.size() + 3 || name.substr(0, head.size()) != head) return false;
  if (name[head.size()] != '(' || name.back() != ')') return false;
  const std::string_view digits = name.substr(head.size() + 1, name.size() - head.size() - 2);
  const char* first = digits.data();
  const char* last = digits.data() + digits.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, d);
  return ec == std::errc{} && ptr == last && first != last;
}

}  // namespace

NumClass class_of_named(std::string_view name) {
  long long d = 0;
  if (name == "point") return {Rational(0), Rational(0), Rational(0), Rational(1)};
  if (name == "O^x") return class_of_line_bundle(0) - class_of_named("point");
  if (name == "O") return class_of_line_bundle(0);
  if (parse_twist(name, "O", d)) return class_of_line_bundle(d);
  if (parse_twist(name, "T", d)) return tensor_line(tangent_class(), Rational(d));
  if (parse_twist(name, "Omega", d)) {
    return tensor_line(dual_p3(tangent_class()), Rational(d));
  }
  if (parse_twist(name, "Omega2", d)) {
    // Omega^2 = Lambda^2 Omega = T (x) K = T(-4) on P^3
    return tensor_line(tangent_class(), Rational(d - 4));
  }
  throw InputError("unknown object name '" + std::string(name) + "'");
}

NumClass parse_class_literal(std::string_view text) {
  std::array<Rational, 4> parts;
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t comma = text.find(',', start);
    const bool last = i == 3;
    if (last != (comma == std::string_view::npos)) {
      throw InputError("class literal needs exactly four components: '" + std::string(text) +
                       "'");
    }
    const std::string_view field =
        text.substr(start, last ? std::string_view::npos : comma - start);
    parts[static_cast<std::size_t>(i)] = parse_rational(field);
    start = comma + 1;
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

std::string to_literal(const NumClass& v) {
  return to_string(v.v0) + "," + to_string(v.v1) + "," + to_string(v.v2) + "," +
         to_string(v.v3);
}

NumClass parse_class(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return parse_class_literal(text);
  return class_of_named(text);
}

}  // namespace tiltwall
