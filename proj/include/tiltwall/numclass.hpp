#pragma once

#include "tiltwall/rational.hpp"

#include <array>
#include <string>
#include <string_view>

namespace tiltwall {

/// Numerical class of an object on P^3 (equivalently of its pushforward to
/// the local P^3): the H-pairings v_i = H^{3-i} . ch_i, with H^3 = 1.
struct NumClass {
  Rational v0{0};
  Rational v1{0};
  Rational v2{0};
  Rational v3{0};

  NumClass() = default;
  NumClass(Rational a0, Rational a1, Rational a2, Rational a3)
      : v0(std::move(a0)), v1(std::move(a1)), v2(std::move(a2)), v3(std::move(a3)) {}

  std::array<Rational, 4> components() const { return {v0, v1, v2, v3}; }
  const Rational& operator[](int i) const;

  bool is_zero() const { return v0 == 0 && v1 == 0 && v2 == 0 && v3 == 0; }

  NumClass operator-() const { return {-v0, -v1, -v2, -v3}; }
  NumClass& operator+=(const NumClass& w);
  NumClass& operator-=(const NumClass& w);
  NumClass& operator*=(const Rational& k);

  friend NumClass operator+(NumClass v, const NumClass& w) { return v += w; }
  friend NumClass operator-(NumClass v, const NumClass& w) { return v -= w; }
  friend NumClass operator*(NumClass v, const Rational& k) { return v *= k; }
  friend NumClass operator*(const Rational& k, NumClass v) { return v *= k; }
  friend bool operator==(const NumClass&, const NumClass&) = default;
};

inline NumClass add(const NumClass& v, const NumClass& w) { return v + w; }
inline NumClass sub(const NumClass& v, const NumClass& w) { return v - w; }

/// ch(O(d)) = (1, d, d^2/2, d^3/6).
NumClass class_of_line_bundle(long long d);

/// Standard objects by name: "O(d)", "T(d)", "Omega(d)", "Omega2(d)" for
/// integer d, "point" (skyscraper) and "O^x" (kernel of O -> k(x)).
/// Throws InputError on unknown names.
NumClass class_of_named(std::string_view name);

/// Class of E[k].
NumClass shift(const NumClass& v, long long k);

/// Class of E (x) O(m): ch . e^{mH}, truncated at degree 3.
NumClass tensor_line(const NumClass& v, const Rational& m);

/// Class of D(E)[1] where D is the derived dual relative to the zero
/// section; v_i(D(E)) = (-1)^i v_i(E).
NumClass dual_shifted(const NumClass& v);

/// Full derived dual on P^3: (v0, -v1, v2, -v3).
NumClass dual_p3(const NumClass& v);

/// Degree-truncated product of Chern characters.
NumClass truncated_product(const NumClass& v, const NumClass& w);

/// Riemann-Roch integrality: chi(v (x) O(m)) is an integer for m = 0..3.
bool is_integral_class(const NumClass& v);

/// Class literal "v0,v1,v2,v3".
NumClass parse_class_literal(std::string_view text);
std::string to_literal(const NumClass& v);

/// A name from class_of_named, or else a class literal.
NumClass parse_class(std::string_view text);

}  // namespace tiltwall
