#include "tiltwall/heartgate.hpp"

#include "tiltwall/euler.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace tiltwall {

namespace {

CollectionSpec from_names(CollectionSpec::Builtin kind, std::array<std::string, 4> names) {
  CollectionSpec spec;
  spec.builtin = kind;
  for (int i = 0; i < 4; ++i) spec.classes[i] = class_of_named(names[i]);
  spec.names = std::move(names);
  return spec;
}

Rational json_component(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InputError("class components must be integers or fraction strings, got " + j.dump());
}

Verdict make_verdict(std::string id, std::string statement, bool strict,
                     std::optional<Surd> residual) {
  Verdict v{std::move(id), std::move(statement), strict, false, std::move(residual)};
  if (v.residual) {
    const int s = v.residual->sign();
    v.pass = strict ? s > 0 : s >= 0;
  }
  return v;
}

// residual rhs - lhs for lhs < rhs (or <=); absent if either side is infinite.
Verdict slope_less(std::string id, std::string statement, bool strict, const Slope& lhs,
                   const Slope& rhs) {
  if (lhs.is_infinite() || rhs.is_infinite()) {
    Verdict v = make_verdict(std::move(id), std::move(statement), strict, std::nullopt);
    v.pass = !lhs.is_infinite() && rhs.is_infinite();
    return v;
  }
  return make_verdict(std::move(id), std::move(statement), strict,
                      Surd(rhs.value() - lhs.value()));
}

Verdict strict_left_verdict(std::string id, std::string statement, const ChargeValue& z) {
  Verdict v{std::move(id), std::move(statement), false, false, Surd(-z.re)};
  v.pass = cone_check({z}, ConeMode::StrictLeft);
  return v;
}

bool feasible_direction(const Rational& ux, const Rational& uy,
                        const std::vector<ChargeValue>& zs) {
  for (const auto& z : zs) {
    if (ux * z.im - uy * z.re < 0) return false;
  }
  return true;
}

Slope nu_at(const NumClass& v, const Rational& beta, const Rational& alpha) {
  return Slope::ratio(v.v2 - alpha * v.v0, v.v1 - beta * v.v0);
}

// Evaluation context shared by the condition system and the interval.
struct Gate {
  const CollectionSpec& spec;
  Rational beta;
  Rational alpha;
  std::optional<Rational> ratio;  // v3^b(E)/v1^b(E)
  std::optional<ParamPoint> point;

  Gate(const CollectionSpec& s, const Rational& b) : spec(s), beta(b) {
    const NumClass& e = spec.distinguished();
    if (e.v0 == 0) throw DomainError("the distinguished object needs nonzero rank");
    if (discriminant(e) < 0) {
      throw DomainError("the distinguished object needs a nonnegative discriminant");
    }
    alpha = alpha_E_beta(e, beta);
    const auto t = twisted_v(e, beta);
    if (t[1] != 0) ratio = t[3] / t[1];
    if (2 * alpha >= beta * beta) point = ParamPoint::closure(beta, alpha);
  }

  std::vector<Verdict> conditions_1_to_3() const {
    std::vector<Verdict> out;
    const auto& f = spec.classes;
    const Slope b = Slope::finite(beta);
    const auto [mu1, mu2] = mu12(spec.distinguished());

    out.push_back(make_verdict("1.mu1", "beta < mu_1(E)", true, mu1 - beta));
    out.push_back(slope_less("1.mu0", "mu(F0) < beta", true, slope_mu(f[0]), b));
    out.push_back(slope_less("1.nu0", "nu(F0) < beta", true, nu_at(f[0], beta, alpha), b));

    const Slope m0 = slope_mu(f[0]);
    const Slope m1 = slope_mu(f[1]);
    const Slope m2 = slope_mu(f[2]);
    const Slope m3 = slope_mu(f[3]);
    if (m0 < b && b < m1) {
      out.push_back(slope_less("2", "mu(F0) < beta < mu(F1) and nu(F1) < beta", true,
                               nu_at(f[1], beta, alpha), b));
    } else if (m1 <= b && b <= m2) {
      // slack to the nearer slot end; both ends are finite here
      const Rational slack = std::min(beta - m1.value(), m2.value() - beta);
      out.push_back(make_verdict("2", "mu(F1) <= beta <= mu(F2)", false, Surd(slack)));
    } else if (m2 < b && b < m3) {
      out.push_back(slope_less("2", "mu(F2) < beta < mu(F3) and nu(F2) > beta", true, b,
                               nu_at(f[2], beta, alpha)));
    } else {
      Verdict v = make_verdict("2", "beta lies in no slot between mu(F0) and mu(F3)", true,
                               std::nullopt);
      v.pass = false;
      out.push_back(v);
    }

    const char* names[3] = {"3.F0", "3.F1", "3.F2"};
    const char* texts[3] = {"v3^b(F0) < r v1^b(F0)", "v3^b(F1) > r v1^b(F1)",
                            "v3^b(F2) < r v1^b(F2)"};
    for (int j = 0; j < 3; ++j) {
      if (!ratio) {
        Verdict v = make_verdict(names[j], std::string(texts[j]) + " with v1^b(E) = 0", true,
                                 std::nullopt);
        out.push_back(v);
        continue;
      }
      const auto t = twisted_v(f[j], beta);
      Rational slack = *ratio * t[1] - t[3];
      if (j == 1) slack = -slack;
      out.push_back(make_verdict(names[j], texts[j], true, Surd(slack)));
    }
    return out;
  }
};

bool all_pass(const std::vector<Verdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.pass; });
}

}  // namespace

CollectionSpec CollectionSpec::named(std::string_view name) {
  if (name == "beilinson4") return from_names(Builtin::Beilinson4, {"O(-1)", "T(-2)", "O", "O(1)"});
  if (name == "omega") return from_names(Builtin::Omega, {"O(-1)", "Omega2(2)", "Omega(1)", "O"});
  if (name == "lines") return from_names(Builtin::Lines, {"O(-3)", "O(-2)", "O(-1)", "O"});
  throw InputError("unknown collection '" + std::string(name) +
                   "' (expected beilinson4, omega or lines)");
}

CollectionSpec CollectionSpec::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("collection JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("names") || !j.contains("classes")) {
    throw InputError("collection JSON needs \"names\" and \"classes\"");
  }
  const auto& names = j.at("names");
  const auto& classes = j.at("classes");
  if (!names.is_array() || names.size() != 4 || !classes.is_array() || classes.size() != 4) {
    throw InputError("collection JSON needs exactly 4 names and 4 classes");
  }
  CollectionSpec spec;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!names[i].is_string()) throw InputError("collection names must be strings");
    spec.names[i] = names[i].get<std::string>();
    const auto& c = classes[i];
    if (!c.is_array() || c.size() != 4) {
      throw InputError("each class needs 4 components [v0, v1, v2, v3]");
    }
    spec.classes[i] = NumClass(json_component(c[0]), json_component(c[1]),
                               json_component(c[2]), json_component(c[3]));
  }
  spec.validate();
  return spec;
}

void CollectionSpec::validate() const {
  for (int i = 0; i < 4; ++i) {
    if (!is_integral_class(classes[i])) {
      throw InputError("F" + std::to_string(i) + " = " + to_literal(classes[i]) +
                       " is not an integral class");
    }
    if (chi_pair_p3(classes[i], classes[i]) != 1) {
      throw InputError("F" + std::to_string(i) + " is not exceptional: chi(F, F) = " +
                       to_string(chi_pair_p3(classes[i], classes[i])));
    }
  }
  for (int i = 0; i + 1 < 4; ++i) {
    if (!(slope_mu(classes[i]) < slope_mu(classes[i + 1]))) {
      throw InputError("slopes must strictly increase: mu(F" + std::to_string(i) +
                       ") >= mu(F" + std::to_string(i + 1) + ")");
    }
  }
}

std::array<NumClass, 4> simples_classes(const CollectionSpec& spec) {
  std::array<NumClass, 4> out;
  for (int j = 0; j < 4; ++j) out[j] = shift(spec.classes[3 - j], j);
  return out;
}

bool cone_check(const std::vector<ChargeValue>& charges, ConeMode mode) {
  if (mode == ConeMode::StrictLeft) {
    return std::all_of(charges.begin(), charges.end(), [](const ChargeValue& z) {
      return z.re < 0 || (z.re == 0 && z.im < 0);
    });
  }
  std::vector<ChargeValue> zs;
  for (const auto& z : charges) {
    if (z.re != 0 || z.im != 0) zs.push_back(z);
  }
  // A direction u = e^{i pi phi0} works iff every z lies counterclockwise of u
  // within a half turn, i.e. cross(u, z) >= 0. The feasible directions form a
  // closed arc whose ends are among +-z; if neither end has positive
  // imaginary part the arc is the whole upper half, which contains i.
  if (feasible_direction(0, 1, zs)) return true;
  for (const auto& z : zs) {
    if (z.im > 0 && feasible_direction(z.re, z.im, zs)) return true;
    if (z.im < 0 && feasible_direction(-z.re, -z.im, zs)) return true;
  }
  return false;
}

const Verdict* CheckReport::find(std::string_view id) const {
  for (const auto& v : conditions) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

CheckReport thm_region_check(const Rational& beta, const Rational& alpha) {
  CheckReport r;
  const Rational w2 = 2 * alpha - beta * beta;
  auto& c = r.conditions;
  c.push_back(make_verdict("beta.min", "beta >= -1/2", false, Surd(beta + Rational(1, 2))));
  c.push_back(make_verdict("beta.max", "beta <= 0", false, Surd(-beta)));
  c.push_back(make_verdict("omega.min", "2 alpha - beta^2 > 0", true, Surd(w2)));
  c.push_back(make_verdict("omega.max", "2 alpha - beta^2 < 1/4", true, Surd(Rational(1, 4) - w2)));
  c.push_back(make_verdict("slope.1", "1 - 2 alpha > 2 beta - 2 beta^2", true,
                           Surd(1 - 2 * alpha - 2 * beta + 2 * beta * beta)));
  c.push_back(make_verdict("slope.2", "3 alpha > 2 beta + 3 beta^2", true,
                           Surd(3 * alpha - 2 * beta - 3 * beta * beta)));
  c.push_back(make_verdict("slope.3", "-1 + 2 alpha < 2 beta + 2 beta^2", true,
                           Surd(2 * beta + 2 * beta * beta + 1 - 2 * alpha)));

  Verdict cone{"cone", "charges of the simples at a0 = omega^2/6 lie in a half-plane", false,
               false, std::nullopt};
  if (w2 > 0) {
    const ParamPoint p = ParamPoint::in_u(beta, alpha);
    std::vector<ChargeValue> zs;
    for (const auto& s : simples_classes(CollectionSpec::named("beilinson4"))) {
      zs.push_back(central_charge_3(s, p, w2 / 6));
    }
    cone.pass = cone_check(zs, ConeMode::HalfPlane);
  }
  c.push_back(cone);
  r.overall = all_pass(c);
  return r;
}

std::optional<AInterval> admissible_a_interval(const CollectionSpec& spec, const Rational& beta) {
  const Gate g(spec, beta);
  if (!all_pass(g.conditions_1_to_3()) || !g.ratio || !g.point) return std::nullopt;

  // Re Z(S) = -v3^b(S) + a v1^b(S) is linear in a. Phase in (1/2, 3/2] needs
  // Re < 0, or Re = 0 when Im < 0.
  std::optional<Rational> lower;
  bool lower_closed = true;
  std::optional<Rational> upper;
  bool upper_closed = true;
  for (const auto& s : simples_classes(spec)) {
    const auto t = twisted_v(s, beta);
    const ChargeValue z0 = central_charge_3(s, *g.point, 0);
    const bool closed = z0.im < 0;
    if (t[1] == 0) {
      if (!cone_check({z0}, ConeMode::StrictLeft)) return std::nullopt;
      continue;
    }
    const Rational bound = t[3] / t[1];
    if (t[1] < 0) {
      if (!lower || bound > *lower) {
        lower = bound;
        lower_closed = closed;
      } else if (bound == *lower) {
        lower_closed = lower_closed && closed;
      }
    } else {
      if (!upper || bound < *upper) {
        upper = bound;
        upper_closed = closed;
      } else if (bound == *upper) {
        upper_closed = upper_closed && closed;
      }
    }
  }
  if (lower && upper) {
    if (*lower > *upper) return std::nullopt;
    if (*lower == *upper && !(lower_closed && upper_closed)) return std::nullopt;
  }
  AInterval out;
  out.upper = *g.ratio;
  out.lower = lower;
  out.lower_attained = lower.has_value() && lower_closed;
  if (lower && *lower >= out.upper) return std::nullopt;
  return out;
}

CheckReport general_condition_check(const CollectionSpec& spec, const Rational& beta,
                                    const Rational& a0) {
  const Gate g(spec, beta);
  CheckReport r;
  r.conditions = g.conditions_1_to_3();

  const auto simples = simples_classes(spec);
  for (int j = 0; j < 4; ++j) {
    const std::string id = "4.S" + std::to_string(j);
    const std::string text = "Z(S" + std::to_string(j) + ") has phase in (1/2, 3/2]";
    if (!g.point) {
      r.conditions.push_back(make_verdict(id, text + " (alpha_E^beta outside U)", false,
                                          std::nullopt));
      continue;
    }
    r.conditions.push_back(strict_left_verdict(id, text, central_charge_3(simples[j], *g.point, a0)));
  }
  if (g.ratio) {
    r.conditions.push_back(make_verdict("gate", "a0 < v3^b(E)/v1^b(E)", true, Surd(*g.ratio - a0)));
  } else {
    r.conditions.push_back(make_verdict("gate", "a0 < v3^b(E)/v1^b(E) with v1^b(E) = 0", true,
                                        std::nullopt));
  }
  r.overall = all_pass(r.conditions);
  r.interval = admissible_a_interval(spec, beta);
  if (spec.builtin == CollectionSpec::Builtin::Custom) {
    r.notes.push_back(
        "custom collection: fullness and exceptionality in the derived category are not "
        "verified, only the numerical invariants");
  }
  return r;
}

std::array<ChargeValue, 4> simplecase_z_oracle(const Rational& beta, const Rational& a) {
  const Rational b = beta;
  const Rational b2 = b * b;
  const Rational b3 = b2 * b;
  const Rational h(1, 2);
  const Rational s(1, 6);
  return {{
      {s * b3 - a * b, 0},
      {-h * b3 - h * b2 + h * b - s + a * (3 * b + 1), -b + h},
      {h * b3 + b2 - Rational(2, 3) - a * (3 * b + 2), 2 * b},
      {-s * b3 - h * b2 - h * b - s + a * (b + 1), -b - h},
  }};
}

}  // namespace tiltwall
