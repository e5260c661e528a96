#ifndef POLYSUB_SCENE_HPP
#define POLYSUB_SCENE_HPP

// Colored-halfspace scenes: the m polyhedra with n facets in total, each
// polyhedron being the intersection of the halfspaces of one color.
// A halfspace (a, b, color) is the closed set { x : a.x <= b }.

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polysub/linalg.hpp"
#include "polysub/rational.hpp"

namespace polysub {

struct Halfspace {
  RVec normal;
  Rational offset;
  int color = 0;
};

struct Scene {
  int dim = 0;
  int num_colors = 0;
  std::vector<Halfspace> halfspaces;  // index = stable hyperplane id
  std::optional<int> delta_color;     // color reserved for the bounding simplex

  bool is_delta(int hid) const {
    return delta_color && halfspaces[static_cast<std::size_t>(hid)].color == *delta_color;
  }
  /// Number of halfspaces excluding the bounding simplex.
  int facet_count() const {
    int n = 0;
    for (std::size_t i = 0; i < halfspaces.size(); ++i)
      if (!delta_color || halfspaces[i].color != *delta_color) ++n;
    return n;
  }
  /// Number of colors excluding the bounding simplex.
  int color_count() const { return num_colors - (delta_color ? 1 : 0); }

  void validate() const {
    if (dim < 1) throw std::invalid_argument("scene: dim must be >= 1");
    if (num_colors < 1) throw std::invalid_argument("scene: colors must be >= 1");
    for (const auto& h : halfspaces) {
      if (static_cast<int>(h.normal.size()) != dim)
        throw std::invalid_argument("scene: halfspace arity mismatch");
      if (is_zero_vec(h.normal)) throw std::invalid_argument("scene: zero normal");
      if (h.color < 0 || h.color >= num_colors)
        throw std::invalid_argument("scene: color out of range");
    }
    if (delta_color && (*delta_color < 0 || *delta_color >= num_colors))
      throw std::invalid_argument("scene: delta color out of range");
  }
};

/// Per-halfspace classification of a point: '+' strictly inside, '0' on the
/// bounding hyperplane, '-' strictly outside.  One char per halfspace.
using SignVector = std::string;

inline char sign_char(int s) { return s < 0 ? '-' : (s > 0 ? '+' : '0'); }

inline SignVector classify(const Scene& s, const RVec& p) {
  if (static_cast<int>(p.size()) != s.dim) throw std::invalid_argument("classify: arity");
  SignVector out(s.halfspaces.size(), '0');
  for (std::size_t i = 0; i < s.halfspaces.size(); ++i) {
    const auto& h = s.halfspaces[i];
    out[i] = sign_char(sign_of(h.offset - dot(h.normal, p)));
  }
  return out;
}

enum class MembershipKind { Interior, Boundary, Outside };

struct Membership {
  MembershipKind kind = MembershipKind::Interior;
  std::vector<int> tight;  // color-c halfspace ids at sign 0 (Boundary only)
};

/// Membership of p in the color-c polyhedron.  A color with no halfspaces
/// yields Interior (its polyhedron is all of space).
inline Membership color_membership(const Scene& s, const RVec& p, int color) {
  if (color < 0 || color >= s.num_colors) throw std::invalid_argument("color out of range");
  Membership m;
  for (std::size_t i = 0; i < s.halfspaces.size(); ++i) {
    const auto& h = s.halfspaces[i];
    if (h.color != color) continue;
    int sg = sign_of(h.offset - dot(h.normal, p));
    if (sg < 0) return {MembershipKind::Outside, {}};
    if (sg == 0) m.tight.push_back(static_cast<int>(i));
  }
  m.kind = m.tight.empty() ? MembershipKind::Interior : MembershipKind::Boundary;
  return m;
}

/// Geometric hyperplanes of the scene: halfspaces grouped up to nonzero
/// scaling of (normal, offset).  `orient` is +1 when the member points the
/// same way as the class representative, -1 otherwise.
struct HyperplaneClasses {
  std::vector<RVec> normal;       // canonical representative normals
  std::vector<Rational> offset;   // canonical representative offsets
  std::vector<std::vector<std::pair<int, int>>> members;  // (raw id, orient)
  std::vector<int> class_of;      // raw id -> class id
  std::vector<int> orient_of;     // raw id -> +-1
};

inline HyperplaneClasses hyperplane_classes(const Scene& s) {
  HyperplaneClasses hc;
  hc.class_of.resize(s.halfspaces.size());
  hc.orient_of.resize(s.halfspaces.size());
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < s.halfspaces.size(); ++i) {
    const auto& h = s.halfspaces[i];
    Rational lead = 0;
    for (const auto& x : h.normal)
      if (x != 0) {
        lead = x;
        break;
      }
    RVec cn(h.normal.size());
    for (std::size_t j = 0; j < cn.size(); ++j) cn[j] = h.normal[j] / lead;
    Rational co = h.offset / lead;
    std::string key = format_vec(cn, ",") + ";" + format_rational(co);
    auto it = index.find(key);
    int cls;
    if (it == index.end()) {
      cls = static_cast<int>(hc.normal.size());
      index.emplace(std::move(key), cls);
      hc.normal.push_back(std::move(cn));
      hc.offset.push_back(std::move(co));
      hc.members.emplace_back();
    } else {
      cls = it->second;
    }
    int orient = sign_of(lead);
    hc.members[cls].push_back({static_cast<int>(i), orient});
    hc.class_of[i] = cls;
    hc.orient_of[i] = orient;
  }
  return hc;
}

namespace detail {

/// Calls fn(idx) for every k-subset of {0..n-1}, in lexicographic order.
template <typename Fn>
inline void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// All intersection points of d geometrically-distinct bounding hyperplanes
/// (solutions of nonsingular d-subsets), deduplicated exactly.  Discovery
/// order is deterministic for a fixed scene.
inline std::vector<RVec> candidate_vertices(const Scene& s) {
  const HyperplaneClasses hc = hyperplane_classes(s);
  const int nc = static_cast<int>(hc.normal.size());
  std::vector<RVec> pts;
  std::unordered_map<std::string, int> seen;
  detail::for_each_combination(nc, s.dim, [&](const std::vector<int>& idx) {
    RMat A;
    RVec b;
    A.reserve(idx.size());
    b.reserve(idx.size());
    for (int c : idx) {
      A.push_back(hc.normal[c]);
      b.push_back(hc.offset[c]);
    }
    auto x = solve_square(std::move(A), std::move(b));
    if (!x) return;
    std::string key = point_key(*x);
    if (seen.emplace(std::move(key), 1).second) pts.push_back(std::move(*x));
  });
  return pts;
}

/// Attaches a bounding simplex of a fresh color: d+1 halfspaces containing
/// the closed ball of radius d*R, where R = 1 + the largest coordinate
/// magnitude among candidate vertices and per-hyperplane origin-distance
/// bounds (so the simplex meets every bounding hyperplane of the scene).
inline Scene add_bounding_simplex(const Scene& s) {
  if (s.delta_color) throw std::invalid_argument("add_bounding_simplex: already attached");
  s.validate();
  Rational maxabs = 0;
  for (const RVec& p : candidate_vertices(s))
    for (const auto& x : p) maxabs = std::max(maxabs, Rational(abs(x)));
  for (const auto& h : s.halfspaces) {
    Rational an = 0;
    for (const auto& a : h.normal) an = std::max(an, Rational(abs(a)));
    maxabs = std::max(maxabs, Rational(abs(h.offset) / an));
  }
  Rational big_r = maxabs + 1;

  Scene out = s;
  out.delta_color = out.num_colors;
  out.num_colors += 1;
  const int d = s.dim;
  for (int i = 0; i < d; ++i) {
    Halfspace h;
    h.normal.assign(static_cast<std::size_t>(d), Rational(0));
    h.normal[i] = -1;
    h.offset = Rational(d) * big_r;
    h.color = *out.delta_color;
    out.halfspaces.push_back(std::move(h));
  }
  Halfspace top;
  top.normal.assign(static_cast<std::size_t>(d), Rational(1));
  top.offset = Rational(d) * Rational(d) * big_r;
  top.color = *out.delta_color;
  out.halfspaces.push_back(std::move(top));
  return out;
}

}  // namespace polysub

#endif  // POLYSUB_SCENE_HPP
