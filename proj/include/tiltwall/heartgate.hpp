#pragma once

#include "tiltwall/numclass.hpp"
#include "tiltwall/surd.hpp"
#include "tiltwall/tiltcalc.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tiltwall {

/// Four classes (F0, F1, F2, F3) of an exceptional collection on P^3 with
/// E = F3 distinguished.
struct CollectionSpec {
  enum class Builtin { Beilinson4, Omega, Lines, Custom };

  std::array<std::string, 4> names;
  std::array<NumClass, 4> classes;
  Builtin builtin = Builtin::Custom;

  /// "beilinson4" = (O(-1), T(-2), O, O(1)), "omega" = (O(-1), Omega2(2),
  /// Omega(1), O), "lines" = (O(-3), O(-2), O(-1), O).
  static CollectionSpec named(std::string_view name);
  /// {"names": [4 strings], "classes": [[v0,v1,v2,v3] x 4]}, fraction strings.
  static CollectionSpec from_json(std::string_view text);

  /// Strictly increasing slopes, integral classes, chi(F, F) = 1.
  /// Throws InputError naming the first violated invariant.
  void validate() const;

  const NumClass& distinguished() const { return classes[3]; }
};

/// S_j = F_{3-j}[j]: S0 = E, S1 = F2[1], S2 = F1[2], S3 = F0[3].
std::array<NumClass, 4> simples_classes(const CollectionSpec& spec);

enum class ConeMode {
  /// Some phi0 in (0,1) with every nonzero charge of phase in [phi0, phi0+1].
  HalfPlane,
  /// Every charge of phase in (1/2, 3/2]: Re < 0, or Re == 0 and Im < 0.
  StrictLeft,
};

bool cone_check(const std::vector<ChargeValue>& charges, ConeMode mode);

/// One inequality of a condition system. residual is the signed slack
/// (positive when satisfied with room, zero when tight); absent when a side
/// is infinite.
struct Verdict {
  std::string id;
  std::string statement;
  bool strict = true;
  bool pass = false;
  std::optional<Surd> residual;
};

/// Open interval (lower, upper) of admissible a; lower absent means -infinity.
/// lower_attained: the condition system itself holds at a0 = lower.
struct AInterval {
  std::optional<Rational> lower;
  bool lower_attained = false;
  Rational upper;
};

struct CheckReport {
  std::vector<Verdict> conditions;
  bool overall = false;
  std::optional<AInterval> interval;
  std::vector<std::string> notes;

  const Verdict* find(std::string_view id) const;
};

/// Region checks for the (O(-1), T(-2), O, O(1)) construction at (beta, alpha):
/// -1/2 <= beta <= 0, 0 < 2 alpha - beta^2 < 1/4, the three tilt-slope
/// inequalities, and the half-plane cone for the simples at a0 = omega^2/6.
CheckReport thm_region_check(const Rational& beta, const Rational& alpha);

/// The boundary condition system (1)-(4) for the heart attached to E = F3 at
/// (beta, alpha_E^beta) with constant a0, plus the gate a0 < v3^b(E)/v1^b(E).
/// DomainError when v0(E) == 0 or Delta(E) < 0.
CheckReport general_condition_check(const CollectionSpec& spec, const Rational& beta,
                                    const Rational& a0);

/// (a0_min, v3^b(E)/v1^b(E)) where a0_min is the least a0 satisfying
/// condition (4); nullopt when (1)-(3) fail or the interval is empty.
std::optional<AInterval> admissible_a_interval(const CollectionSpec& spec, const Rational& beta);

/// Closed forms of Z^{beta,beta^2,a}(S_j) for the omega collection.
std::array<ChargeValue, 4> simplecase_z_oracle(const Rational& beta, const Rational& a);

}  // namespace tiltwall
