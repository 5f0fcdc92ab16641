#include "tiltwall/euler.hpp"

namespace tiltwall {

Rational chi_p3(const NumClass& v, const EulerContext& ctx) {
  return v.v3 * ctx.td0 + v.v2 * ctx.td1 + v.v1 * ctx.td2 + v.v0 * ctx.td3;
}

Rational chi_pair_p3(const NumClass& v, const NumClass& w, const EulerContext& ctx) {
  return chi_p3(truncated_product(dual_p3(v), w), ctx);
}

Rational chi_local(const NumClass& v, const NumClass& w) {
  return chi_pair_p3(v, w) + chi_pair_p3(w, v);
}

Rational chi_local_adjunction(const NumClass& v, const NumClass& w) {
  return chi_pair_p3(v, w) - chi_pair_p3(tensor_line(v, Rational(4)), w);
}

NumClass spherical_twist_class(const NumClass& s, const NumClass& v) {
  if (chi_local(s, s) != 2) {
    throw DomainError("twist source " + to_literal(s) + " is not numerically spherical");
  }
  return v - chi_local(s, v) * s;
}

}  // namespace tiltwall
