#pragma once

#include "tiltwall/numclass.hpp"

namespace tiltwall {

/// Todd class of P^3 against (1, H, H^2, H^3): td = 1 + 2H + 11/6 H^2 + H^3.
struct EulerContext {
  Rational td0{1};
  Rational td1{2};
  Rational td2{Rational(11, 6)};
  Rational td3{1};
};

/// chi(P^3, E) = v3 + 2 v2 + 11/6 v1 + v0.
Rational chi_p3(const NumClass& v, const EulerContext& ctx = {});

/// chi(E, F) = chi(E^dual (x) F) on P^3.
Rational chi_pair_p3(const NumClass& v, const NumClass& w, const EulerContext& ctx = {});

/// Euler pairing of pushforwards on the local P^3 (CY4, symmetric):
/// chi_X(i_*E, i_*F) = chi(E, F) + chi(F, E).
Rational chi_local(const NumClass& v, const NumClass& w);

/// Same pairing through the adjunction sum with E_0 = omega_{P^3}:
/// chi(E, F) - chi(E (x) O(4), F).
Rational chi_local_adjunction(const NumClass& v, const NumClass& w);

/// Numerical spherical twist v -> v - chi_local(s, v) s. Requires
/// chi_local(s, s) == 2, otherwise DomainError.
NumClass spherical_twist_class(const NumClass& s, const NumClass& v);

}  // namespace tiltwall
