#include "tiltwall/walls.hpp"

#include "tiltwall/euler.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace tiltwall {

namespace {

Integer gcd_int(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer lcm_int(const Integer& a, const Integer& b) { return a / gcd_int(a, b) * b; }

}  // namespace

Wall Wall::make(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0 && b == 0 && c == 0) throw DomainError("degenerate wall 0 = 0");
  const Integer l = lcm_int(lcm_int(denominator_of(a), denominator_of(b)), denominator_of(c));
  Integer ia = numerator_of(a) * (l / denominator_of(a));
  Integer ib = numerator_of(b) * (l / denominator_of(b));
  Integer ic = numerator_of(c) * (l / denominator_of(c));
  Integer g = gcd_int(gcd_int(ia, ib), ic);
  const Integer& lead = ia != 0 ? ia : (ib != 0 ? ib : ic);
  if (lead < 0) g = -g;
  return Wall{Rational(ia / g), Rational(ib / g), Rational(ic / g)};
}

std::optional<Rational> Wall::slope() const {
  if (A == 0) return std::nullopt;
  return -B / A;
}

std::string Wall::str() const {
  return to_string(A) + "*alpha + " + to_string(B) + "*beta + " + to_string(C) + " = 0";
}

void Region::validate() const {
  if (beta_min > beta_max) throw InputError("region: beta-min exceeds beta-max");
  if (alpha_min > alpha_max) throw InputError("region: alpha-min exceeds alpha-max");
}

bool Region::contains(const PlanePoint& q) const {
  return beta_min <= q.first && q.first <= beta_max && alpha_min <= q.second &&
         q.second <= alpha_max;
}

std::optional<Wall> wall_between(const NumClass& v, const NumClass& w) {
  // (v2 - a v0)(w1 - b w0) = (w2 - a w0)(v1 - b v0); the a*b terms cancel.
  const Rational a = w.v0 * v.v1 - v.v0 * w.v1;
  const Rational b = w.v2 * v.v0 - v.v2 * w.v0;
  const Rational c = v.v2 * w.v1 - w.v2 * v.v1;
  if (a == 0 && b == 0) return std::nullopt;
  return Wall::make(a, b, c);
}

std::optional<PlanePoint> pi_point(const NumClass& v) {
  if (v.v0 == 0) return std::nullopt;
  return PlanePoint{v.v1 / v.v0, v.v2 / v.v0};
}

std::optional<Rational> common_slope(const NumClass& v) {
  if (v.v0 != 0) throw DomainError("common_slope needs a rank-zero class");
  if (v.v1 == 0) return std::nullopt;
  return v.v2 / v.v1;
}

bool passes_through(const Wall& wall, const PlanePoint& q) {
  return wall.A * q.second + wall.B * q.first + wall.C == 0;
}

namespace {

// Subset of the beta-axis cut out by linear constraints; ends carry an
// openness flag. Starts as a closed interval.
struct BetaInterval {
  Rational lo, hi;
  bool lo_open = false;
  bool hi_open = false;
  bool empty = false;

  // Keeps beta with slope*beta + offset > 0 (strict) or >= 0.
  void keep_positive(const Rational& slope, const Rational& offset, bool strict) {
    if (empty) return;
    if (slope == 0) {
      if (offset < 0 || (strict && offset == 0)) empty = true;
      return;
    }
    const Rational root = -offset / slope;
    if (slope > 0) {
      if (root > lo) {
        lo = root;
        lo_open = strict;
      } else if (root == lo) {
        lo_open = lo_open || strict;
      }
    } else {
      if (root < hi) {
        hi = root;
        hi_open = strict;
      } else if (root == hi) {
        hi_open = hi_open || strict;
      }
    }
    check();
  }

  void check() {
    if (lo > hi || (lo == hi && (lo_open || hi_open))) empty = true;
  }
};

// True when some beta in the interval has g(beta) = -beta^2 + 2 m beta + k >= 0.
bool concave_reaches_zero(const BetaInterval& iv, const Rational& m, const Rational& k) {
  if (iv.empty) return false;
  auto g = [&](const Rational& b) { return -b * b + 2 * m * b + k; };
  if (m > iv.lo && m < iv.hi) return g(m) >= 0;
  // vertex outside: g is monotone on the interval, best at the nearer end
  const bool at_lo = m <= iv.lo;
  const Rational& end = at_lo ? iv.lo : iv.hi;
  const bool open = at_lo ? iv.lo_open : iv.hi_open;
  if (!open) return g(end) >= 0;
  if (iv.lo == iv.hi) return false;
  return g(end) > 0;
}

class WallSearch {
 public:
  WallSearch(const NumClass& v, const Region& region, const WallSearchOptions& opt)
      : v_(v), region_(region), opt_(opt), disc_v_(discriminant(v)) {}

  SearchBox derive_box() const;
  void scan_rank(const Integer& w0, const SearchBox& box, std::map<Wall, NumClass>& out,
                 std::size_t& count) const;

 private:
  bool meets_region(const Wall& wall, const Rational& w0, const Rational& w1) const;
  std::optional<NumClass> integral_lift(const Rational& w0, const Rational& w1,
                                        const Rational& w2) const;

  const NumClass& v_;
  const Region& region_;
  const WallSearchOptions& opt_;
  Rational disc_v_;
};

// Box derivation. At a wall point (b, a) with omega^2 = 2a - b^2 the charges
// Z(w) and Z(v) are real-positively proportional, Z(w) = t Z(v) with
// t = Im Z(w)/Im Z(v) in (0, 1). Writing I = v1 - b v0, R = v2 - a v0,
// J = b I - R and x = rank(w),
//   Delta(w) = t^2 I^2 + 2 t J x - omega^2 x^2 >= 0
// places x between t rho_- and t rho_+, the roots of the v-quadratic
// (rho_- < 0 < rho_+), and Delta(v - w) >= 0 places v0 - x between
// (1 - t) rho_- and (1 - t) rho_+. The root of smaller magnitude is at most
// I/omega, so |x| <= |v0| + I_max/omega_min on the whole region. Given x,
// Im Z(w) in (0, I) bounds w1 by b x < w1 < b (x - v0) + v1, and Re Z(w)
// between 0 and Re Z(v) bounds w2 between a x and v2 + a (x - v0).
SearchBox WallSearch::derive_box() const {
  SearchBox box;
  const Rational imax = std::max(v_.v1 - region_.beta_min * v_.v0,
                                 v_.v1 - region_.beta_max * v_.v0);
  if (imax <= 0) {
    box.v0_min = 1;
    box.v0_max = 0;  // empty
    return box;
  }
  // 1/omega_min <= sqrt_upper_bound(1/omega2_min)
  const Rational inv_omega = sqrt_upper_bound(1 / opt_.omega2_min);
  const Rational rank_bound = abs(v_.v0) + imax * inv_omega;
  box.v0_max = floor_of(rank_bound);
  box.v0_min = -box.v0_max;

  const Rational x_lo(box.v0_min);
  const Rational x_hi(box.v0_max);
  auto corners = [&](auto&& f) {
    Rational lo = f(region_.beta_min, region_.alpha_min, x_lo);
    Rational hi = lo;
    for (const Rational& b : {region_.beta_min, region_.beta_max}) {
      for (const Rational& a : {region_.alpha_min, region_.alpha_max}) {
        for (const Rational& x : {x_lo, x_hi}) {
          const Rational val = f(b, a, x);
          lo = std::min(lo, val);
          hi = std::max(hi, val);
        }
      }
    }
    return std::pair{lo, hi};
  };
  const auto w1_lo = corners([](const Rational& b, const Rational&, const Rational& x) {
    return b * x;
  });
  const auto w1_hi = corners([&](const Rational& b, const Rational&, const Rational& x) {
    return b * (x - v_.v0) + v_.v1;
  });
  box.v1_min = floor_of(std::min(w1_lo.first, w1_hi.first));
  box.v1_max = ceil_of(std::max(w1_lo.second, w1_hi.second));
  const auto w2_a = corners([](const Rational&, const Rational& a, const Rational& x) {
    return a * x;
  });
  const auto w2_b = corners([&](const Rational&, const Rational& a, const Rational& x) {
    return v_.v2 + a * (x - v_.v0);
  });
  box.v2_min = Rational(floor_of(2 * std::min(w2_a.first, w2_b.first)), 2);
  box.v2_max = Rational(ceil_of(2 * std::max(w2_a.second, w2_b.second)), 2);
  return box;
}

bool WallSearch::meets_region(const Wall& wall, const Rational& w0, const Rational& w1) const {
  const Rational& f = opt_.omega2_min;
  if (wall.A == 0) {
    if (wall.B == 0) return false;
    const Rational b = -wall.C / wall.B;
    if (b < region_.beta_min || b > region_.beta_max) return false;
    const Rational iw = w1 - b * w0;
    const Rational iv = v_.v1 - b * v_.v0;
    if (!(iw > 0 && iv - iw > 0)) return false;
    const Rational a_lo = std::max(region_.alpha_min, (b * b + f) / 2);
    return a_lo <= region_.alpha_max;
  }
  // alpha = m beta + k along the wall
  const Rational m = -wall.B / wall.A;
  const Rational k = -wall.C / wall.A;
  BetaInterval iv{region_.beta_min, region_.beta_max};
  iv.check();
  iv.keep_positive(m, k - region_.alpha_min, false);   // alpha >= alpha_min
  iv.keep_positive(-m, region_.alpha_max - k, false);  // alpha <= alpha_max
  iv.keep_positive(-w0, w1, true);                     // Im Z(w) > 0
  iv.keep_positive(-(v_.v0 - w0), v_.v1 - w1, true);   // Im Z(v - w) > 0
  // 2(m b + k) - b^2 - f >= 0
  return concave_reaches_zero(iv, m, 2 * k - f);
}

std::optional<NumClass> WallSearch::integral_lift(const Rational& w0, const Rational& w1,
                                                  const Rational& w2) const {
  // chi(w(m)) = v3 + (terms without v3); fix v3 in [0, 1) from m = 0.
  const NumClass base(w0, w1, w2, Rational(0));
  const Rational c0 = chi_p3(base);
  Rational v3 = -c0 - Rational(floor_of(-c0));
  NumClass w(w0, w1, w2, v3);
  if (!is_integral_class(w)) return std::nullopt;
  return w;
}

void WallSearch::scan_rank(const Integer& w0i, const SearchBox& box,
                           std::map<Wall, NumClass>& out, std::size_t& count) const {
  const Rational w0(w0i);
  const Rational u0 = v_.v0 - w0;
  const Rational bound = disc_v_ + opt_.disc_bound;
  // per-rank ranges from the same bilinear bounds used for the box
  Rational w1_lo = std::min(region_.beta_min * w0, region_.beta_max * w0);
  const Rational w1_hi = std::max(v_.v1 - region_.beta_min * u0, v_.v1 - region_.beta_max * u0);
  Rational w2_lo = std::min({region_.alpha_min * w0, region_.alpha_max * w0,
                             v_.v2 - region_.alpha_min * u0, v_.v2 - region_.alpha_max * u0});
  Rational w2_hi = std::max({region_.alpha_min * w0, region_.alpha_max * w0,
                             v_.v2 - region_.alpha_min * u0, v_.v2 - region_.alpha_max * u0});
  w2_lo = std::max(w2_lo, box.v2_min);
  w2_hi = std::min(w2_hi, box.v2_max);
  for (Integer w1i = std::max(box.v1_min, floor_of(w1_lo));
       w1i <= std::min(box.v1_max, ceil_of(w1_hi)); ++w1i) {
    const Rational w1(w1i);
    const Rational u1 = v_.v1 - w1;
    Rational lo = w2_lo;
    Rational hi = w2_hi;
    // Delta(w) = w1^2 - 2 w0 w2 >= 0 and Delta(v - w) >= 0 as bounds on w2
    if (w0 > 0) hi = std::min(hi, w1 * w1 / (2 * w0));
    if (w0 < 0) lo = std::max(lo, w1 * w1 / (2 * w0));
    if (u0 > 0) lo = std::max(lo, v_.v2 - u1 * u1 / (2 * u0));
    if (u0 < 0) hi = std::min(hi, v_.v2 - u1 * u1 / (2 * u0));
    for (Integer h = ceil_of(2 * lo); Rational(h, 2) <= hi; ++h) {
      ++count;
      const Rational w2(h, 2);
      const NumClass trunc(w0, w1, w2, Rational(0));
      const Rational dw = discriminant(trunc);
      const Rational du = discriminant(v_ - trunc);
      if (dw < 0 || du < 0 || dw + du > bound) continue;
      const auto wall = wall_between(v_, trunc);
      if (!wall || !meets_region(*wall, w0, w1)) continue;
      const auto lift = integral_lift(w0, w1, w2);
      if (!lift) continue;
      auto [it, inserted] = out.try_emplace(*wall, *lift);
      if (!inserted && lift->components() < it->second.components()) it->second = *lift;
    }
  }
}

}  // namespace

WallSearchResult enumerate_candidate_walls(const NumClass& v, const Region& region,
                                           const WallSearchOptions& options) {
  region.validate();
  if (options.disc_bound < 0) throw InputError("disc_bound must be nonnegative");
  if (options.omega2_min <= 0) {
    throw InputError("omega2_min must be positive; the search is unbounded at the boundary of U");
  }
  if (discriminant(v) < 0) {
    throw DomainError("wall search needs Delta(v) >= 0; got " + to_string(discriminant(v)));
  }
  WallSearch search(v, region, options);
  WallSearchResult result;
  result.box = search.derive_box();
  const SearchBox& box = result.box;

  std::vector<Integer> ranks;
  for (Integer r = box.v0_min; r <= box.v0_max; ++r) ranks.push_back(r);

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ranks.size())));
  std::vector<std::map<Wall, NumClass>> partial(threads);
  std::vector<std::size_t> counts(threads, 0);
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < ranks.size(); i += threads) {
      search.scan_rank(ranks[i], box, partial[t], counts[t]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  std::map<Wall, NumClass> merged;
  for (unsigned t = 0; t < threads; ++t) {
    result.box.candidates += counts[t];
    for (auto& [wall, w] : partial[t]) {
      auto [it, inserted] = merged.try_emplace(wall, w);
      if (!inserted && w.components() < it->second.components()) it->second = w;
    }
  }
  for (auto& [wall, w] : merged) result.walls.push_back({wall, w});
  return result;
}

std::optional<std::pair<PlanePoint, PlanePoint>> clip_to_region(const Wall& wall,
                                                                const Region& region) {
  if (wall.A == 0) {
    if (wall.B == 0) return std::nullopt;
    const Rational b = -wall.C / wall.B;
    if (b < region.beta_min || b > region.beta_max) return std::nullopt;
    return std::pair{PlanePoint{b, region.alpha_min}, PlanePoint{b, region.alpha_max}};
  }
  const Rational m = -wall.B / wall.A;
  const Rational k = -wall.C / wall.A;
  BetaInterval iv{region.beta_min, region.beta_max};
  iv.check();
  iv.keep_positive(m, k - region.alpha_min, false);
  iv.keep_positive(-m, region.alpha_max - k, false);
  if (iv.empty) return std::nullopt;
  return std::pair{PlanePoint{iv.lo, m * iv.lo + k}, PlanePoint{iv.hi, m * iv.hi + k}};
}

}  // namespace tiltwall
