#pragma once

#include "tiltwall/numclass.hpp"
#include "tiltwall/tiltcalc.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tiltwall {

/// Line A alpha + B beta + C = 0 in the (beta, alpha) plane, scaled to
/// coprime integers with the first nonzero coefficient positive.
struct Wall {
  Rational A{0};
  Rational B{0};
  Rational C{0};

  /// Normalizes; DomainError when all three coefficients vanish.
  static Wall make(const Rational& a, const Rational& b, const Rational& c);

  /// d alpha / d beta; nullopt for a vertical line (A == 0).
  std::optional<Rational> slope() const;
  std::string str() const;

  friend std::strong_ordering operator<=>(const Wall& x, const Wall& y) {
    if (auto c = compare(x.A, y.A); c != 0) return c;
    if (auto c = compare(x.B, y.B); c != 0) return c;
    return compare(x.C, y.C);
  }
  friend bool operator==(const Wall&, const Wall&) = default;
};

using PlanePoint = std::pair<Rational, Rational>;  // (beta, alpha)

/// Closed rectangle in the (beta, alpha) plane.
struct Region {
  Rational beta_min{0};
  Rational beta_max{0};
  Rational alpha_min{0};
  Rational alpha_max{0};

  void validate() const;
  bool contains(const PlanePoint& q) const;
};

/// Locus nu(v) == nu(w); nullopt when it is empty or the whole plane.
std::optional<Wall> wall_between(const NumClass& v, const NumClass& w);

/// Pi(v) = (v1/v0, v2/v0), the common point of all walls of v (v0 != 0).
std::optional<PlanePoint> pi_point(const NumClass& v);

/// Common slope v2/v1 of the (parallel) walls of a rank-zero class.
/// DomainError when v0 != 0.
std::optional<Rational> common_slope(const NumClass& v);

bool passes_through(const Wall& wall, const PlanePoint& q);

struct WallSearchOptions {
  /// Slack in Delta(w) + Delta(v - w) <= Delta(v) + disc_bound.
  Rational disc_bound{0};
  /// Walls count only where they meet the region with 2 alpha - beta^2 >=
  /// omega2_min. Must be positive: numerical walls can accumulate at the
  /// boundary of U.
  Rational omega2_min{Rational(1, 100)};
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

struct WallWitness {
  Wall wall;
  NumClass witness;
};

/// Lattice box actually scanned; w2 steps by 1/2.
struct SearchBox {
  Integer v0_min, v0_max;
  Integer v1_min, v1_max;
  Rational v2_min, v2_max;
  std::size_t candidates = 0;
};

struct WallSearchResult {
  std::vector<WallWitness> walls;
  SearchBox box;
};

/// Numerical walls for v inside the region, witnessed by integral classes w
/// with 0 <= Delta(w), 0 <= Delta(v - w), Delta(w) + Delta(v - w) <=
/// Delta(v) + disc_bound and 0 < Im Z(w) < Im Z(v) at some point of the
/// wall in the region. Output is sorted by wall and independent of the
/// thread count.
WallSearchResult enumerate_candidate_walls(const NumClass& v, const Region& region,
                                           const WallSearchOptions& options = {});

/// Exact intersection of the line with the region, as a segment (possibly
/// degenerate). nullopt when they do not meet.
std::optional<std::pair<PlanePoint, PlanePoint>> clip_to_region(const Wall& wall,
                                                                const Region& region);

}  // namespace tiltwall
