#ifndef POLYSUB_CHARGING_HPP
#define POLYSUB_CHARGING_HPP

// Executable upper-bound machinery on general-position scenes: a generic
// vertical direction, the d edges of the intersection polytope at each
// subdivision vertex, the majority-side charge of a vertex, reconstruction
// of the charged face, and the injectivity of the charge map.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "polysub/gp.hpp"
#include "polysub/subdivision.hpp"

namespace polysub {

struct VerticalDirection {
  RVec omega;
  Rational t;  // moment-curve parameter that produced omega
};

struct NotAVertex : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSimple : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrthogonalEdge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<int> tight_halfspaces(const Scene& s, const RVec& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < s.halfspaces.size(); ++i)
    if (dot(s.halfspaces[i].normal, v) == s.halfspaces[i].offset)
      out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace detail

/// The d edges of P at a subdivision vertex v, where P is the intersection
/// of the polyhedra whose colors appear among the d halfspaces through v.
/// Edge u_h leaves hyperplane h: it solves <a_g, u> = 0 for g in H_v \ {h}
/// and points into P (<a_h, u> < 0 under the a.x <= b convention).
inline std::vector<std::pair<int, RVec>> vertex_edges(const Scene& s, const RVec& v) {
  std::vector<int> hv = detail::tight_halfspaces(s, v);
  if (static_cast<int>(hv.size()) != s.dim)
    throw NotSimple("vertex lies on " + std::to_string(hv.size()) + " halfspaces, expected " +
                    std::to_string(s.dim));
  const SignVector sig = classify(s, v);
  std::vector<bool> member(static_cast<std::size_t>(s.num_colors), true);
  for (std::size_t i = 0; i < s.halfspaces.size(); ++i)
    if (sig[i] == '-') member[static_cast<std::size_t>(s.halfspaces[i].color)] = false;
  RMat tight;
  for (int h : hv)
    if (member[static_cast<std::size_t>(s.halfspaces[static_cast<std::size_t>(h)].color)])
      tight.push_back(s.halfspaces[static_cast<std::size_t>(h)].normal);
  if (rank(tight) != s.dim)
    throw NotAVertex("point is not a 0-face of the subdivision");

  std::vector<std::pair<int, RVec>> edges;
  for (int h : hv) {
    RMat rest;
    for (int g : hv)
      if (g != h) rest.push_back(s.halfspaces[static_cast<std::size_t>(g)].normal);
    RVec u = nullspace_direction(std::move(rest), s.dim);
    Rational a_u = dot(s.halfspaces[static_cast<std::size_t>(h)].normal, u);
    if (a_u > 0)
      for (auto& x : u) x = -x;
    edges.push_back({h, std::move(u)});
  }
  return edges;
}

/// A generic vertical direction: no two subdivision vertices at equal
/// altitude, no incident edge orthogonal to it.  Deterministic moment-curve
/// search omega(t) = (1, t, ..., t^{d-1}) over t = 1, 1/2, 1/3, ...
inline VerticalDirection pick_generic_direction(const Scene& s) {
  std::vector<RVec> verts = vertices_bruteforce(s, /*respect_delta=*/false);
  std::vector<RVec> edge_dirs;
  for (const RVec& v : verts)
    for (auto& [h, u] : vertex_edges(s, v)) {
      (void)h;
      edge_dirs.push_back(u);
    }
  for (int k = 1; k <= 512; ++k) {
    Rational t(1, k);
    RVec omega(static_cast<std::size_t>(s.dim));
    Rational p = 1;
    for (int j = 0; j < s.dim; ++j) {
      omega[static_cast<std::size_t>(j)] = p;
      p *= t;
    }
    bool ok = true;
    std::set<std::string> heights;
    for (const RVec& v : verts)
      if (!heights.insert(format_rational(dot(omega, v))).second) {
        ok = false;
        break;
      }
    for (std::size_t e = 0; ok && e < edge_dirs.size(); ++e)
      if (dot(omega, edge_dirs[e]) == 0) ok = false;
    if (ok) return {std::move(omega), t};
  }
  throw std::runtime_error("pick_generic_direction: no direction found in bounded search");
}

struct Charge {
  RVec vertex;
  bool up = true;              // majority side; ties (even d) resolve to up
  int i = 0;                   // majority edge count, >= ceil(d/2)
  std::vector<int> hprime;     // the d-i hyperplanes whose edges go the minority way
  std::vector<int> colorset;   // colors of the remaining i hyperplanes
};

inline Charge charge_vertex(const Scene& s, const RVec& v, const RVec& omega) {
  auto edges = vertex_edges(s, v);
  const int d = s.dim;
  std::vector<int> up_h, down_h;
  for (auto& [h, u] : edges) {
    int sg = sign_of(dot(omega, u));
    if (sg == 0) throw OrthogonalEdge("edge at hyperplane " + std::to_string(h) +
                                      " is orthogonal to the vertical direction");
    (sg > 0 ? up_h : down_h).push_back(h);
  }
  Charge c;
  c.vertex = v;
  const int need = (d + 1) / 2;
  if (static_cast<int>(up_h.size()) >= need) {
    c.up = true;
    c.i = static_cast<int>(up_h.size());
    c.hprime = down_h;
  } else {
    c.up = false;
    c.i = static_cast<int>(down_h.size());
    c.hprime = up_h;
  }
  std::set<int> cs;
  for (auto& [h, u] : edges) {
    (void)u;
    bool minority = false;
    for (int g : c.hprime) minority = minority || (g == h);
    if (!minority) cs.insert(s.halfspaces[static_cast<std::size_t>(h)].color);
  }
  c.colorset.assign(cs.begin(), cs.end());
  std::sort(c.hprime.begin(), c.hprime.end());
  return c;
}

struct ChargeCheck {
  bool ok = true;
  std::vector<std::string> issues;
  void fail(std::string msg) {
    ok = false;
    issues.push_back(std::move(msg));
  }
};

/// Replays the charge: F = intersection of the H' hyperplanes is a flat of
/// dimension i; f = F cut with the intersection polytope P has dimension i,
/// carries the majority edges, and v is its strict extreme vertex in the
/// vertical direction (lowest for an up-charge).  All checks exact; the
/// extremum is certified over the enumerable vertices of f plus the absence
/// of an improving recession direction.
inline ChargeCheck verify_charge(const Scene& s, const Charge& c, const RVec& omega) {
  ChargeCheck out;
  const int d = s.dim;
  std::vector<int> hv = detail::tight_halfspaces(s, c.vertex);
  if (static_cast<int>(hv.size()) != d) {
    out.fail("vertex not simple");
    return out;
  }

  RMat hp_normals;
  for (int h : c.hprime) hp_normals.push_back(s.halfspaces[static_cast<std::size_t>(h)].normal);
  if (rank(hp_normals) != d - c.i) {
    out.fail("flat dimension mismatch");
    return out;
  }

  // Colors of P and its constraint rows.
  std::set<int> colors;
  for (int h : hv) colors.insert(s.halfspaces[static_cast<std::size_t>(h)].color);
  std::vector<int> prows;
  for (std::size_t r = 0; r < s.halfspaces.size(); ++r)
    if (colors.count(s.halfspaces[r].color)) prows.push_back(static_cast<int>(r));

  // Majority edges live in F and enter P.
  auto edges = vertex_edges(s, c.vertex);
  for (auto& [h, u] : edges) {
    bool minority = false;
    for (int g : c.hprime) minority = minority || (g == h);
    if (minority) continue;
    for (int g : c.hprime)
      if (dot(s.halfspaces[static_cast<std::size_t>(g)].normal, u) != 0)
        out.fail("majority edge leaves the flat");
    int sg = sign_of(dot(omega, u));
    if ((c.up && sg <= 0) || (!c.up && sg >= 0)) out.fail("majority edge on wrong side");
  }

  // Vertices of f = F cap P among candidate points; v must be the strict
  // vertical extreme.
  const Rational hv_height = dot(omega, c.vertex);
  bool found_v = false;
  for (const RVec& w : candidate_vertices(s)) {
    bool in_flat = true;
    for (int g : c.hprime)
      if (dot(s.halfspaces[static_cast<std::size_t>(g)].normal, w) !=
          s.halfspaces[static_cast<std::size_t>(g)].offset)
        in_flat = false;
    if (!in_flat) continue;
    bool in_p = true;
    RMat tight = hp_normals;
    for (int r : prows) {
      Rational slack = s.halfspaces[static_cast<std::size_t>(r)].offset -
                       dot(s.halfspaces[static_cast<std::size_t>(r)].normal, w);
      if (slack < 0) {
        in_p = false;
        break;
      }
      if (slack == 0) tight.push_back(s.halfspaces[static_cast<std::size_t>(r)].normal);
    }
    if (!in_p) continue;
    if (rank(std::move(tight)) != d) continue;  // not a vertex of f
    if (w == c.vertex) {
      found_v = true;
      continue;
    }
    Rational h_w = dot(omega, w);
    if (c.up ? (h_w <= hv_height) : (h_w >= hv_height))
      out.fail("vertex (" + format_vec(w, ", ") + ") is not on the correct side");
  }
  if (!found_v) out.fail("charged vertex is not a vertex of the reconstructed face");

  // No recession direction of f improves the objective.
  {
    std::vector<RVec> eqs = hp_normals;
    std::vector<detail::HomIneq> le;
    for (int r : prows) le.push_back({s.halfspaces[static_cast<std::size_t>(r)].normal, false});
    RVec obj = omega;  // want omega . r < 0 for an up-charge (improving down)
    if (!c.up)
      for (auto& x : obj) x = -x;
    le.push_back({std::move(obj), true});
    if (homogeneous_feasible(std::move(eqs), std::move(le), d))
      out.fail("face is unbounded in the improving direction");
  }
  return out;
}

struct ChargingClass {
  bool up = true;
  int i = 0;
  long long count = 0;
  long long cap = 0;
};

struct ChargingReport {
  long long vertices = 0;
  bool injective = true;
  bool per_vertex_ok = true;
  bool bound_ok = true;
  long long bound = 0;
  std::vector<ChargingClass> per_class;
  std::vector<std::string> issues;
  bool ok() const { return injective && per_vertex_ok && bound_ok; }
};

/// Charges every subdivision vertex, checks the per-vertex face replay,
/// asserts the encoding (side, H', colorset) is injective, and tallies the
/// per-class and aggregate counting bounds.
inline ChargingReport verify_injection(const Scene& s, bool verify_each = true) {
  ChargingReport rep;
  VerticalDirection vd = pick_generic_direction(s);
  std::vector<RVec> verts = vertices_bruteforce(s, /*respect_delta=*/false);
  rep.vertices = static_cast<long long>(verts.size());

  const int n = static_cast<int>(s.halfspaces.size());
  const int m = s.num_colors;
  const int d = s.dim;

  std::map<std::string, RVec> seen;
  std::map<std::pair<bool, int>, long long> tally;
  for (const RVec& v : verts) {
    Charge c = charge_vertex(s, v, vd.omega);
    if (static_cast<int>(c.hprime.size()) != d - c.i)
      rep.issues.push_back("charge arity mismatch at (" + format_vec(v, ", ") + ")");
    if (c.i < (d + 1) / 2) {
      rep.per_vertex_ok = false;
      rep.issues.push_back("majority below half at (" + format_vec(v, ", ") + ")");
    }
    if (verify_each) {
      ChargeCheck cc = verify_charge(s, c, vd.omega);
      if (!cc.ok) {
        rep.per_vertex_ok = false;
        for (auto& is : cc.issues)
          rep.issues.push_back("vertex (" + format_vec(v, ", ") + "): " + is);
      }
    }
    std::string key = c.up ? "u" : "d";
    for (int h : c.hprime) key += ":" + std::to_string(h);
    key += "#";
    for (int col : c.colorset) key += ":" + std::to_string(col);
    auto it = seen.find(key);
    if (it != seen.end()) {
      rep.injective = false;
      rep.issues.push_back("charge collision between (" + format_vec(it->second, ", ") +
                           ") and (" + format_vec(v, ", ") + ")");
    } else {
      seen.emplace(std::move(key), v);
    }
    tally[{c.up, c.i}] += 1;
  }

  for (const auto& [cls, count] : tally) {
    long long color_ways = 0;
    for (int j = 0; j <= std::min(cls.second, m); ++j) color_ways += binomial_ll(m, j);
    long long cap = binomial_ll(n, d - cls.second) * color_ways;
    rep.per_class.push_back({cls.first, cls.second, count, cap});
    if (count > cap) {
      rep.bound_ok = false;
      rep.issues.push_back("class cap exceeded at side=" + std::string(cls.first ? "up" : "down") +
                           " i=" + std::to_string(cls.second));
    }
  }
  std::sort(rep.per_class.begin(), rep.per_class.end(), [](const auto& a, const auto& b) {
    if (a.up != b.up) return a.up > b.up;
    return a.i < b.i;
  });
  BoundReport br = check_bound(rep.vertices, n, m, d);
  rep.bound = br.bound;
  rep.bound_ok = rep.bound_ok && br.ok;
  return rep;
}

}  // namespace polysub

#endif  // POLYSUB_CHARGING_HPP
