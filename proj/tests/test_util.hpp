#ifndef POLYSUB_TEST_UTIL_HPP
#define POLYSUB_TEST_UTIL_HPP

// Shared scene builders and deterministic random generators for the test
// suites.  Catch-free so the acceptance runner can use it too.

#include <random>
#include <string>
#include <vector>

#include "polysub/family.hpp"
#include "polysub/scene.hpp"

namespace polysub::testutil {

inline Halfspace hs(std::vector<long> normal, long num, long den = 1, int color = 0) {
  Halfspace h;
  for (long a : normal) h.normal.push_back(Rational(a));
  h.offset = Rational(num, den);
  h.color = color;
  return h;
}

/// Axis-aligned box [lo, hi]^d appended as one color.
inline void add_box(Scene& s, long lo, long hi, int color) {
  for (int j = 0; j < s.dim; ++j) {
    Halfspace a;
    a.normal.assign(static_cast<std::size_t>(s.dim), Rational(0));
    a.normal[static_cast<std::size_t>(j)] = 1;
    a.offset = hi;
    a.color = color;
    s.halfspaces.push_back(a);
    Halfspace b;
    b.normal.assign(static_cast<std::size_t>(s.dim), Rational(0));
    b.normal[static_cast<std::size_t>(j)] = -1;
    b.offset = -lo;
    b.color = color;
    s.halfspaces.push_back(b);
  }
}

inline Scene unit_square() {
  Scene s;
  s.dim = 2;
  s.num_colors = 1;
  add_box(s, -1, 1, 0);
  return s;
}

/// The overlapping pair [0,2]^2 and [1,3]^2 (two colors, eight halfspaces).
inline Scene two_squares() {
  Scene s;
  s.dim = 2;
  s.num_colors = 2;
  add_box(s, 0, 2, 0);
  add_box(s, 1, 3, 1);
  return s;
}

/// The same four hyperplanes twice, under two colors.
inline Scene coincident_squares() {
  Scene s;
  s.dim = 2;
  s.num_colors = 2;
  add_box(s, -1, 1, 0);
  add_box(s, -1, 1, 1);
  return s;
}

/// Lower-dimensional polyhedron: the segment y = 0, 0 <= x <= 1 in the plane.
inline Scene segment_scene() {
  Scene s;
  s.dim = 2;
  s.num_colors = 1;
  s.halfspaces.push_back(hs({0, 1}, 0));
  s.halfspaces.push_back(hs({0, -1}, 0));
  s.halfspaces.push_back(hs({1, 0}, 1));
  s.halfspaces.push_back(hs({-1, 0}, 0));
  return s;
}

/// Three lines through the origin, one color each.
inline Scene concurrent_lines() {
  Scene s;
  s.dim = 2;
  s.num_colors = 3;
  s.halfspaces.push_back(hs({1, 0}, 0, 1, 0));
  s.halfspaces.push_back(hs({0, 1}, 0, 1, 1));
  s.halfspaces.push_back(hs({1, 1}, 0, 1, 2));
  return s;
}

/// n halfspaces on the moment curve, one color each: every d-subset of
/// normals is independent and no d+1 hyperplanes meet (the (a, b) rows are
/// again moment-curve points, so any d+1 of them are independent).
inline Scene moment_scene(int n, int d) {
  Scene s;
  s.dim = d;
  s.num_colors = n;
  for (int k = 1; k <= n; ++k) {
    Halfspace h;
    Rational p = 1;
    for (int j = 0; j < d; ++j) {
      h.normal.push_back(p);
      p *= k;
    }
    h.offset = p;  // k^d
    h.color = k - 1;
    s.halfspaces.push_back(std::move(h));
  }
  return s;
}

/// Fixed degeneracy corpus: coincidences across colors, more than d
/// concurrent hyperplanes, lower-dimensional and empty polyhedra, empty
/// colors, opposite-orientation duplicates.
inline std::vector<std::pair<std::string, Scene>> degeneracy_corpus() {
  std::vector<std::pair<std::string, Scene>> out;
  out.emplace_back("coincident-squares", coincident_squares());
  out.emplace_back("segment", segment_scene());
  out.emplace_back("concurrent-lines", concurrent_lines());
  {
    Scene s;  // duplicate hyperplane inside one color, plus a second color
    s.dim = 2;
    s.num_colors = 2;
    add_box(s, -1, 1, 0);
    s.halfspaces.push_back(hs({1, 0}, 1, 1, 0));  // repeats x <= 1
    add_box(s, 0, 2, 1);
    out.emplace_back("duplicate-within-color", s);
  }
  {
    Scene s;  // opposite orientations of one hyperplane across colors
    s.dim = 2;
    s.num_colors = 2;
    s.halfspaces.push_back(hs({1, 0}, 1, 1, 0));   // x <= 1
    s.halfspaces.push_back(hs({-1, 0}, -1, 1, 1));  // x >= 1
    add_box(s, -2, 2, 1);
    out.emplace_back("opposite-duplicate", s);
  }
  {
    Scene s;  // four concurrent lines, two colors
    s.dim = 2;
    s.num_colors = 2;
    s.halfspaces.push_back(hs({1, 0}, 0, 1, 0));
    s.halfspaces.push_back(hs({0, 1}, 0, 1, 0));
    s.halfspaces.push_back(hs({1, 1}, 0, 1, 1));
    s.halfspaces.push_back(hs({1, -1}, 0, 1, 1));
    out.emplace_back("four-concurrent", s);
  }
  {
    Scene s = two_squares();  // an extra color with no halfspaces
    s.num_colors = 3;
    out.emplace_back("empty-color", s);
  }
  {
    Scene s;  // a color whose polyhedron is empty
    s.dim = 2;
    s.num_colors = 2;
    s.halfspaces.push_back(hs({1, 0}, 0, 1, 0));    // x <= 0
    s.halfspaces.push_back(hs({-1, 0}, -1, 1, 0));  // x >= 1: empty with above
    add_box(s, -1, 1, 1);
    out.emplace_back("empty-polyhedron", s);
  }
  {
    Scene s;  // point polyhedron at the origin plus a box
    s.dim = 2;
    s.num_colors = 2;
    add_box(s, 0, 0, 0);
    add_box(s, -1, 1, 1);
    out.emplace_back("point-polyhedron", s);
  }
  {
    Scene s;  // d = 1: coincident endpoints across three colors
    s.dim = 1;
    s.num_colors = 3;
    s.halfspaces.push_back(hs({1}, 1, 1, 0));
    s.halfspaces.push_back(hs({-1}, 1, 1, 0));
    s.halfspaces.push_back(hs({1}, 1, 1, 1));
    s.halfspaces.push_back(hs({-1}, 2, 1, 1));
    s.halfspaces.push_back(hs({1}, 1, 1, 2));
    out.emplace_back("d1-coincident", s);
  }
  {
    Scene s;  // d = 3: three planes through a common line, plus a box
    s.dim = 3;
    s.num_colors = 2;
    s.halfspaces.push_back(hs({1, 0, 0}, 0, 1, 0));
    s.halfspaces.push_back(hs({0, 1, 0}, 0, 1, 0));
    s.halfspaces.push_back(hs({1, 1, 0}, 0, 1, 1));
    add_box(s, -1, 1, 1);
    out.emplace_back("d3-concurrent-planes", s);
  }
  {
    Scene s;  // flat (2-dimensional) polyhedron inside 3-space
    s.dim = 3;
    s.num_colors = 2;
    s.halfspaces.push_back(hs({0, 0, 1}, 0, 1, 0));
    s.halfspaces.push_back(hs({0, 0, -1}, 0, 1, 0));
    s.halfspaces.push_back(hs({1, 0, 0}, 1, 1, 0));
    s.halfspaces.push_back(hs({-1, 0, 0}, 1, 1, 0));
    s.halfspaces.push_back(hs({0, 1, 0}, 1, 1, 0));
    s.halfspaces.push_back(hs({0, -1, 0}, 1, 1, 0));
    add_box(s, -2, 2, 1);
    out.emplace_back("flat-in-3d", s);
  }
  return out;
}

/// Deterministic random scene with small integer coefficients.
inline Scene random_scene(std::mt19937& rng, int d, int max_n, int max_m) {
  std::uniform_int_distribution<int> m_dist(1, max_m);
  std::uniform_int_distribution<int> coef(-3, 3);
  Scene s;
  s.dim = d;
  s.num_colors = m_dist(rng);
  std::uniform_int_distribution<int> n_dist(1, max_n);
  std::uniform_int_distribution<int> color(0, s.num_colors - 1);
  int n = std::max(d, n_dist(rng));
  for (int i = 0; i < n; ++i) {
    Halfspace h;
    do {
      h.normal.clear();
      for (int j = 0; j < d; ++j) h.normal.push_back(Rational(coef(rng)));
    } while (is_zero_vec(h.normal));
    h.offset = Rational(coef(rng));
    h.color = color(rng);
    s.halfspaces.push_back(std::move(h));
  }
  return s;
}

}  // namespace polysub::testutil

#endif  // POLYSUB_TEST_UTIL_HPP
