#ifndef POLYSUB_FAMILY_HPP
#define POLYSUB_FAMILY_HPP

// Lower-bound families: rotated tangent polygons with purely rational
// coordinates, graded intervals, and their products.
//
// Rational unit vectors come from the half-angle parametrization
// u(t) = ((1-t^2)/(1+t^2), 2t/(1+t^2)); the parameters approximate evenly
// rotated directions closely enough that the strict cyclic order, the
// quarter-turn gap bound and per-color boundedness all hold, and each of
// those contracts is verified exactly at runtime (retrying at higher
// approximation precision if ever violated).

#include <cmath>
#include <numbers>
#include <utility>

#include "polysub/gp.hpp"
#include "polysub/scene.hpp"

namespace polysub {

struct CirclePoint {
  RVec u;           // exact rational point on the unit circle
  Rational t;       // half-angle parameter; unused when pole is set
  bool pole = false;  // true for the antipode (-1, 0) of the t = 0 point
};

namespace detail {

/// Best rational approximation of x with denominator <= maxden
/// (continued-fraction convergents / semiconvergents).
inline Rational rationalize(long double x, long long maxden) {
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double v = x;
  bool neg = v < 0;
  if (neg) v = -v;
  for (int it = 0; it < 64; ++it) {
    long double fl = std::floor(v);
    if (fl > static_cast<long double>(1LL << 62)) break;
    long long a = static_cast<long long>(fl);
    if (q0 + a * q1 > maxden || (q1 != 0 && a > (maxden - q0) / q1)) {
      long long rem = q1 == 0 ? maxden : (maxden - q0) / q1;
      if (rem > 0) {
        long long p = p0 + rem * p1, q = q0 + rem * q1;
        p0 = p1; q0 = q1; p1 = p; q1 = q;
      }
      break;
    }
    long long p = p0 + a * p1, q = q0 + a * q1;
    p0 = p1; q0 = q1; p1 = p; q1 = q;
    long double frac = v - fl;
    if (frac <= 0) break;
    v = 1.0L / frac;
  }
  Rational r(p1, q1 == 0 ? 1 : q1);
  return neg ? Rational(-r) : r;
}

inline RVec half_angle_point(const Rational& t) {
  Rational den = 1 + t * t;
  return {Rational((1 - t * t) / den), Rational(2 * t / den)};
}

inline Rational cross2(const RVec& a, const RVec& b) { return a[0] * b[1] - a[1] * b[0]; }

/// Quadrant of a unit vector, with boundaries folded clockwise so the index
/// is nondecreasing along a counterclockwise walk.
inline int quadrant(const RVec& u) {
  if (u[0] > 0 && u[1] >= 0) return 0;
  if (u[0] <= 0 && u[1] > 0) return 1;
  if (u[0] < 0 && u[1] <= 0) return 2;
  return 3;
}

inline bool circle_points_ok(const std::vector<CirclePoint>& pts) {
  const int k = static_cast<int>(pts.size());
  int wrap = 0;
  for (int i = 0; i < k; ++i) {
    const RVec& a = pts[static_cast<std::size_t>(i)].u;
    const RVec& b = pts[static_cast<std::size_t>((i + 1) % k)].u;
    // Consecutive gap strictly inside (0, pi/2).
    if (!(cross2(a, b) > 0 && dot(a, b) > 0)) return false;
    wrap += (quadrant(b) - quadrant(a) + 4) % 4;
  }
  return wrap == 4;  // exactly one trip around the circle
}

}  // namespace detail

/// K >= 3 exact rational unit vectors in strict counterclockwise cyclic
/// order, consecutive gaps strictly below a quarter turn.  Deterministic.
inline std::vector<CirclePoint> rational_circle_points(int K, long long maxden = 1 << 10) {
  if (K < 3) throw std::invalid_argument("rational_circle_points: K must be >= 3");
  for (int attempt = 0; attempt < 8; ++attempt, maxden *= 64) {
    std::vector<CirclePoint> pts;
    pts.reserve(static_cast<std::size_t>(K));
    const long double pi = std::numbers::pi_v<long double>;
    for (int k = 0; k < K; ++k) {
      if (2 * k == K) {
        CirclePoint c;
        c.u = {Rational(-1), Rational(0)};
        c.pole = true;
        pts.push_back(std::move(c));
        continue;
      }
      // Half angle of direction 2*pi*k/K, wrapped into (-pi/2, pi/2).
      long double psi = pi * static_cast<long double>(2 * k < K ? k : k - K) /
                        static_cast<long double>(K);
      CirclePoint c;
      c.t = detail::rationalize(std::tan(psi), maxden);
      c.u = detail::half_angle_point(c.t);
      pts.push_back(std::move(c));
    }
    if (detail::circle_points_ok(pts)) return pts;
  }
  throw std::runtime_error("rational_circle_points: could not satisfy order contract");
}

/// m interleaved convex ell-gons circumscribing the unit circle: halfspace k
/// is u_k . x <= 1 with color k mod m, directions in strict cyclic order so
/// consecutive tangent directions of distinct colors alternate.
inline Scene rotated_polygon_scene(int ell, int m, long long maxden = 1 << 10) {
  if (ell < 3 || m < 1) throw std::invalid_argument("rotated_polygon_scene: need ell>=3, m>=1");
  const int K = ell * m;
  for (int attempt = 0; attempt < 8; ++attempt, maxden *= 64) {
    std::vector<CirclePoint> pts = rational_circle_points(K, maxden);
    Scene s;
    s.dim = 2;
    s.num_colors = m;
    for (int k = 0; k < K; ++k) {
      Halfspace h;
      h.normal = pts[static_cast<std::size_t>(k)].u;
      h.offset = 1;
      h.color = k % m;
      s.halfspaces.push_back(std::move(h));
    }
    // Each polygon must be bounded: its own tangent directions may never
    // leave a half-plane (consecutive own-color gap < pi).
    bool bounded = true;
    for (int c = 0; c < m && bounded; ++c)
      for (int j = c; j < K && bounded; j += m) {
        const RVec& a = pts[static_cast<std::size_t>(j)].u;
        const RVec& b = pts[static_cast<std::size_t>((j + m) % K)].u;
        if (!(detail::cross2(a, b) > 0)) bounded = false;
      }
    if (!bounded) continue;
    if (!check_general_position_core(s).ok()) continue;
    return s;
  }
  throw std::runtime_error("rotated_polygon_scene: degenerate at all precisions");
}

/// m nested intervals [-1-i, 1+i] on the line, one color each.
inline Scene interval_scene(int m) {
  if (m < 1) throw std::invalid_argument("interval_scene: m must be >= 1");
  Scene s;
  s.dim = 1;
  s.num_colors = m;
  for (int i = 0; i < m; ++i) {
    s.halfspaces.push_back({{Rational(1)}, Rational(1 + i), i});
    s.halfspaces.push_back({{Rational(-1)}, Rational(1 + i), i});
  }
  return s;
}

/// Product scene: color c of the result is P_c x Q_c.  Facets add.
inline Scene product_scene(const Scene& s1, const Scene& s2) {
  if (s1.num_colors != s2.num_colors)
    throw std::invalid_argument("product_scene: color counts differ");
  if (s1.delta_color || s2.delta_color)
    throw std::invalid_argument("product_scene: factors must not carry a bounding simplex");
  Scene out;
  out.dim = s1.dim + s2.dim;
  out.num_colors = s1.num_colors;
  for (const auto& h : s1.halfspaces) {
    Halfspace g;
    g.normal = h.normal;
    g.normal.resize(static_cast<std::size_t>(out.dim), Rational(0));
    g.offset = h.offset;
    g.color = h.color;
    out.halfspaces.push_back(std::move(g));
  }
  for (const auto& h : s2.halfspaces) {
    Halfspace g;
    g.normal.assign(static_cast<std::size_t>(s1.dim), Rational(0));
    g.normal.insert(g.normal.end(), h.normal.begin(), h.normal.end());
    g.offset = h.offset;
    g.color = h.color;
    out.halfspaces.push_back(std::move(g));
  }
  return out;
}

struct FamilyParams {
  int d = 2;    // ambient dimension, >= 2
  int s = 1;    // floor(d/2)
  int m = 1;    // number of polyhedra
  int ell = 3;  // polygon size
};

inline FamilyParams make_family_params(int d, int m, int ell) {
  if (d < 2 || m < 1 || ell < 3) throw std::invalid_argument("family params: need d>=2, m>=1, ell>=3");
  return {d, d / 2, m, ell};
}

struct PredictedCounts {
  long long facets = 0;
  long long vertices = 0;
};

inline PredictedCounts predicted_counts(const FamilyParams& p) {
  PredictedCounts pc;
  const bool odd = (p.d % 2 != 0);
  pc.facets = odd ? static_cast<long long>(p.m) * (p.s * p.ell + 2)
                  : static_cast<long long>(p.s) * p.m * p.ell;
  long long base = static_cast<long long>(p.ell) * p.m * p.m;
  long long v = 1;
  for (int i = 0; i < p.s; ++i) v *= base;
  pc.vertices = odd ? 2 * p.m * v : v;
  return pc;
}

/// The extremal family: the s-fold product of a rotated tangent-polygon
/// scene with itself (colors aligned by index), times a graded interval
/// scene when the dimension is odd.  Output verified to be in general
/// position.
inline std::pair<Scene, PredictedCounts> gen_extremal(const FamilyParams& p) {
  Scene base = rotated_polygon_scene(p.ell, p.m);
  Scene out = base;
  for (int k = 1; k < p.s; ++k) out = product_scene(out, base);
  if (p.d % 2 != 0) out = product_scene(out, interval_scene(p.m));
  if (!check_general_position_core(out).ok())
    throw std::runtime_error("gen_extremal: output unexpectedly degenerate");
  return {std::move(out), predicted_counts(p)};
}

}  // namespace polysub

#endif  // POLYSUB_FAMILY_HPP
