#ifndef POLYSUB_SUBDIVISION_HPP
#define POLYSUB_SUBDIVISION_HPP

// Exact enumeration of the subdivision induced by colored polyhedra:
//  * a brute-force vertex oracle over candidate points,
//  * a full arrangement-face enumerator built from per-vertex sign fans,
//  * the label-merging census that counts subdivision faces by dimension.
//
// Face identity is the full sign vector over all halfspaces, which makes
// deduplication exact and independent of input order.  Faces of the
// arrangement are convex, so a sign vector names one connected face.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polysub/feasibility.hpp"
#include "polysub/parallel.hpp"
#include "polysub/scene.hpp"

namespace polysub {

inline long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
  }
  return r;
}

struct BoundReport {
  long long bound = 0;
  bool ok = true;
  long long slack = 0;
};

/// The explicit counting bound implied by the injective vertex encoding:
/// vertices <= 2 * sum_{i=ceil(d/2)}^{d} C(n, d-i) * sum_{j<=min(i,m)} C(m, j).
inline BoundReport check_bound(long long vertices, int n, int m, int d) {
  long long bound = 0;
  for (int i = (d + 1) / 2; i <= d; ++i) {
    long long color_ways = 0;
    for (int j = 0; j <= std::min(i, m); ++j) color_ways += binomial_ll(m, j);
    bound += binomial_ll(n, d - i) * color_ways;
  }
  bound *= 2;
  return {bound, vertices <= bound, bound - vertices};
}

/// The 0-faces of the induced subdivision: candidate points p whose tight
/// halfspaces, taken over the colors whose polyhedron contains p, pin p to a
/// single point (normal rank d).  Constraints strict at p stay strict nearby,
/// so those tight sets cut out exactly the local affine hulls of the minimal
/// faces through p.  When a bounding simplex is attached and respect_delta
/// holds, only points strictly inside it are reported (the census region).
inline std::vector<RVec> vertices_bruteforce(const Scene& s, bool respect_delta = true) {
  s.validate();
  std::vector<RVec> out;
  std::vector<std::pair<std::string, RVec>> keyed;
  for (RVec& p : candidate_vertices(s)) {
    SignVector sig = classify(s, p);
    bool skip = false;
    if (respect_delta && s.delta_color) {
      for (std::size_t i = 0; i < s.halfspaces.size() && !skip; ++i)
        if (s.halfspaces[i].color == *s.delta_color && sig[i] != '+') skip = true;
    }
    if (skip) continue;
    std::vector<bool> member(static_cast<std::size_t>(s.num_colors), true);
    for (std::size_t i = 0; i < s.halfspaces.size(); ++i)
      if (sig[i] == '-') member[static_cast<std::size_t>(s.halfspaces[i].color)] = false;
    RMat tight;
    for (std::size_t i = 0; i < s.halfspaces.size(); ++i)
      if (sig[i] == '0' && member[static_cast<std::size_t>(s.halfspaces[i].color)])
        tight.push_back(s.halfspaces[i].normal);
    if (rank(std::move(tight)) == s.dim) keyed.emplace_back(point_key(p), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

struct ArrangementFace {
  SignVector sign;
  int dim = 0;
};

namespace detail {

struct FaceRecord {
  SignVector sign;
  int dim = 0;
  bool touches_delta = false;
  std::vector<int> vertex_ids;  // incident arrangement vertices (closure)
};

struct FaceComplex {
  std::vector<RVec> vertices;                    // arrangement vertices kept
  std::vector<FaceRecord> faces;                 // deduped by sign vector
  std::vector<std::pair<int, int>> incidences;   // (face, coface) with dim gap 1
};

inline int ipow3(int k) {
  int r = 1;
  while (k-- > 0) r *= 3;
  return r;
}

/// Per-vertex sign-fan enumeration glued into the global face table.
inline FaceComplex build_face_complex(const Scene& s, bool include_delta_boundary,
                                      int threads = 1) {
  s.validate();
  FaceComplex fc;
  const HyperplaneClasses hc = hyperplane_classes(s);
  const int nclasses = static_cast<int>(hc.normal.size());
  const int d = s.dim;

  std::vector<bool> raw_is_delta(s.halfspaces.size(), false);
  if (s.delta_color)
    for (std::size_t i = 0; i < s.halfspaces.size(); ++i)
      raw_is_delta[i] = (s.halfspaces[i].color == *s.delta_color);

  // Candidate vertices; the solve loop is the only parallel section and its
  // results are merged in subset order, so output is thread-count invariant.
  {
    std::vector<std::vector<int>> combos;
    detail::for_each_combination(nclasses, d, [&](const std::vector<int>& idx) {
      combos.push_back(idx);
    });
    std::vector<std::optional<RVec>> sols(combos.size());
    parallel_for(combos.size(), threads, [&](std::size_t i) {
      RMat A;
      RVec b;
      for (int c : combos[i]) {
        A.push_back(hc.normal[static_cast<std::size_t>(c)]);
        b.push_back(hc.offset[static_cast<std::size_t>(c)]);
      }
      sols[i] = solve_square(std::move(A), std::move(b));
    });
    std::unordered_map<std::string, int> seen;
    for (std::size_t i = 0; i < sols.size(); ++i) {
      if (!sols[i]) continue;
      std::string key = point_key(*sols[i]);
      if (seen.emplace(std::move(key), 1).second) fc.vertices.push_back(std::move(*sols[i]));
    }
  }

  std::unordered_map<std::string, int> face_index;
  auto face_id = [&](const SignVector& g, int dim, bool touch, int vi) -> int {
    auto it = face_index.find(g);
    int id;
    if (it == face_index.end()) {
      id = static_cast<int>(fc.faces.size());
      face_index.emplace(g, id);
      FaceRecord rec;
      rec.sign = g;
      rec.dim = dim;
      fc.faces.push_back(std::move(rec));
    } else {
      id = it->second;
    }
    FaceRecord& rec = fc.faces[static_cast<std::size_t>(id)];
    rec.touches_delta = rec.touches_delta || touch;
    rec.vertex_ids.push_back(vi);
    return id;
  };

  for (std::size_t vi = 0; vi < fc.vertices.size(); ++vi) {
    const RVec& v = fc.vertices[vi];
    const SignVector base = classify(s, v);

    bool v_outside = false, v_on_boundary = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (!raw_is_delta[i]) continue;
      if (base[i] == '-') v_outside = true;
      if (base[i] == '0') v_on_boundary = true;
    }
    if (v_outside) continue;
    // A vertex on the simplex boundary still contributes: faces strictly
    // inside the simplex can be incident to it (clipped faces); the boundary
    // faces themselves get dropped per assignment below.

    std::vector<int> tight;  // classes through v
    for (int c = 0; c < nclasses; ++c) {
      int raw0 = hc.members[static_cast<std::size_t>(c)].front().first;
      if (base[static_cast<std::size_t>(raw0)] == '0') tight.push_back(c);
    }
    const int t = static_cast<int>(tight.size());
    if (t > 14) throw std::runtime_error("local fan too large (more than 14 coincident hyperplanes)");
    const bool generic = (t == d);
    const int codes = ipow3(t);

    std::vector<int> local_id(static_cast<std::size_t>(codes), -1);
    std::vector<int> local_dim(static_cast<std::size_t>(codes), -1);
    std::map<std::uint32_t, int> rank_memo;

    std::vector<int> digits(static_cast<std::size_t>(t));
    for (int code = 0; code < codes; ++code) {
      {
        int c = code;
        for (int j = 0; j < t; ++j) {
          digits[static_cast<std::size_t>(j)] = c % 3;
          c /= 3;
        }
      }
      if (!generic) {
        std::vector<SignCondition> conds;
        conds.reserve(static_cast<std::size_t>(t));
        for (int j = 0; j < t; ++j)
          conds.push_back({hc.normal[static_cast<std::size_t>(tight[j])],
                           -(digits[static_cast<std::size_t>(j)] - 1)});
        if (!cone_feasible(conds, d)) continue;
      }

      SignVector g = base;
      bool face_outside = false, face_boundary = false;
      for (int j = 0; j < t; ++j) {
        const int sgn = digits[static_cast<std::size_t>(j)] - 1;
        for (const auto& [raw, orient] : hc.members[static_cast<std::size_t>(tight[j])]) {
          g[static_cast<std::size_t>(raw)] = sign_char(sgn * orient);
          if (raw_is_delta[static_cast<std::size_t>(raw)]) {
            if (sgn * orient < 0) face_outside = true;
            if (sgn == 0) face_boundary = true;
          }
        }
      }
      // Delta hyperplanes not through v keep the base sign; v inside or on
      // the simplex means those are all '+', so only local signs decide.
      if (face_outside) continue;
      if (face_boundary && !include_delta_boundary) continue;

      int dim;
      if (generic) {
        int zeros = 0;
        for (int j = 0; j < t; ++j) zeros += (digits[static_cast<std::size_t>(j)] == 1);
        dim = d - zeros;
      } else {
        std::uint32_t mask = 0;
        for (int j = 0; j < t; ++j)
          if (digits[static_cast<std::size_t>(j)] == 1) mask |= (1u << j);
        auto it = rank_memo.find(mask);
        if (it == rank_memo.end()) {
          RMat zn;
          for (int j = 0; j < t; ++j)
            if (digits[static_cast<std::size_t>(j)] == 1)
              zn.push_back(hc.normal[static_cast<std::size_t>(tight[j])]);
          it = rank_memo.emplace(mask, rank(std::move(zn))).first;
        }
        dim = d - it->second;
      }

      local_id[static_cast<std::size_t>(code)] = face_id(g, dim, v_on_boundary, static_cast<int>(vi));
      local_dim[static_cast<std::size_t>(code)] = dim;
    }

    // Closure incidences with dimension gap one.  Every such pair shares
    // some vertex of the lower face, so per-vertex discovery is complete.
    if (generic) {
      int p3 = 1;
      for (int j = 0; j < t; ++j, p3 *= 3) {
        for (int code = 0; code < codes; ++code) {
          if (local_id[static_cast<std::size_t>(code)] < 0) continue;
          if ((code / p3) % 3 != 1) continue;  // needs sign 0 at slot j
          for (int delta : {-p3, +p3}) {
            int pcode = code + delta;
            if (local_id[static_cast<std::size_t>(pcode)] < 0) continue;
            fc.incidences.push_back({local_id[static_cast<std::size_t>(code)],
                                     local_id[static_cast<std::size_t>(pcode)]});
          }
        }
      }
    } else {
      std::vector<int> kept;
      for (int code = 0; code < codes; ++code)
        if (local_id[static_cast<std::size_t>(code)] >= 0) kept.push_back(code);
      auto digit = [&](int code, int j) { return (code / ipow3(j)) % 3; };
      for (int a : kept)
        for (int b : kept) {
          if (local_dim[static_cast<std::size_t>(b)] != local_dim[static_cast<std::size_t>(a)] + 1)
            continue;
          bool compat = true;
          for (int j = 0; j < t && compat; ++j) {
            int da = digit(a, j), db = digit(b, j);
            if (da != 1 && da != db) compat = false;
          }
          if (compat)
            fc.incidences.push_back(
                {local_id[static_cast<std::size_t>(a)], local_id[static_cast<std::size_t>(b)]});
        }
    }
  }
  return fc;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
};

/// Per-color membership/tight-set label of a face, computed from its sign
/// vector.  The bounding-simplex color is excluded.
inline std::string alabel(const Scene& s, const SignVector& sign,
                          const std::vector<std::vector<int>>& color_rows) {
  std::string out;
  for (int c = 0; c < s.num_colors; ++c) {
    if (s.delta_color && c == *s.delta_color) continue;
    out += '|';
    bool outside = false;
    for (int i : color_rows[static_cast<std::size_t>(c)])
      if (sign[static_cast<std::size_t>(i)] == '-') {
        outside = true;
        break;
      }
    if (outside) {
      out += '!';
      continue;
    }
    for (int i : color_rows[static_cast<std::size_t>(c)])
      if (sign[static_cast<std::size_t>(i)] == '0') out += std::to_string(i) + ",";
  }
  return out;
}

}  // namespace detail

/// All faces of the full hyperplane arrangement whose closure meets the open
/// bounding simplex (optionally also the faces lying on its boundary),
/// reported as (sign vector, dimension) and sorted canonically.
inline std::vector<ArrangementFace> enumerate_arrangement_faces(
    const Scene& s, bool include_delta_boundary = false) {
  if (!s.delta_color)
    throw std::invalid_argument("enumerate_arrangement_faces: bounding simplex missing");
  detail::FaceComplex fc = detail::build_face_complex(s, include_delta_boundary);
  std::vector<ArrangementFace> out;
  out.reserve(fc.faces.size());
  for (auto& f : fc.faces) out.push_back({std::move(f.sign), f.dim});
  std::sort(out.begin(), out.end(), [](const ArrangementFace& a, const ArrangementFace& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.sign < b.sign;
  });
  return out;
}

struct CensusOptions {
  bool include_delta_boundary = false;
  int threads = 1;
};

struct Census {
  int d = 0;
  int n = 0;  // halfspaces excluding the bounding simplex
  int m = 0;  // colors excluding the bounding simplex
  std::vector<long long> counts;  // faces of the subdivision by dimension 0..d
  long long vertices = 0;
  long long bound = 0;
  bool bound_ok = true;
  long long clipped = 0;  // face classes whose closure meets the simplex boundary
  std::vector<std::string> warnings;
};

/// Counts the faces of the induced subdivision inside the bounding simplex:
/// arrangement faces carrying equal labels are merged across closure
/// incidences (dimension gap one, transitively), and each merged class is one
/// subdivision face whose dimension is its largest member's.  Unbounded
/// subdivision faces are represented by their clipped parts and flagged.
inline Census census(const Scene& scene, CensusOptions opts = {}) {
  scene.validate();
  const Scene s = scene.delta_color ? scene : add_bounding_simplex(scene);
  detail::FaceComplex fc = detail::build_face_complex(s, opts.include_delta_boundary, opts.threads);

  std::vector<std::vector<int>> color_rows(static_cast<std::size_t>(s.num_colors));
  for (std::size_t i = 0; i < s.halfspaces.size(); ++i)
    color_rows[static_cast<std::size_t>(s.halfspaces[i].color)].push_back(static_cast<int>(i));

  std::vector<std::string> labels(fc.faces.size());
  for (std::size_t i = 0; i < fc.faces.size(); ++i)
    labels[i] = detail::alabel(s, fc.faces[i].sign, color_rows);

  detail::UnionFind uf(static_cast<int>(fc.faces.size()));
  for (const auto& [a, b] : fc.incidences)
    if (labels[static_cast<std::size_t>(a)] == labels[static_cast<std::size_t>(b)]) uf.unite(a, b);

  struct ClassInfo {
    int maxdim = -1;
    bool touches = false;
    std::string label;
  };
  std::unordered_map<int, ClassInfo> classes;
  for (std::size_t i = 0; i < fc.faces.size(); ++i) {
    ClassInfo& ci = classes[uf.find(static_cast<int>(i))];
    ci.maxdim = std::max(ci.maxdim, fc.faces[i].dim);
    ci.touches = ci.touches || fc.faces[i].touches_delta;
    ci.label = labels[i];
  }

  Census out;
  out.d = s.dim;
  out.n = s.facet_count();
  out.m = s.color_count();
  out.counts.assign(static_cast<std::size_t>(s.dim + 1), 0);
  std::vector<bool> color_seen(static_cast<std::size_t>(s.num_colors), false);
  std::vector<int> label_colors;  // label segment index -> color id
  for (int c = 0; c < s.num_colors; ++c)
    if (!s.delta_color || c != *s.delta_color) label_colors.push_back(c);
  for (const auto& [root, ci] : classes) {
    (void)root;
    out.counts[static_cast<std::size_t>(ci.maxdim)] += 1;
    if (ci.touches) out.clipped += 1;
    // Mark colors that appear as "inside or on" somewhere (label not OUT).
    std::size_t seg = 0;
    for (std::size_t pos = 0; pos < ci.label.size(); ++pos) {
      if (ci.label[pos] != '|') continue;
      int color = label_colors[seg++];
      if (pos + 1 >= ci.label.size() || ci.label[pos + 1] != '!')
        color_seen[static_cast<std::size_t>(color)] = true;
    }
  }
  out.vertices = out.counts[0];
  BoundReport br = check_bound(out.vertices, out.n, out.m, out.d);
  out.bound = br.bound;
  out.bound_ok = br.ok;

  for (int c = 0; c < s.num_colors; ++c) {
    if (s.delta_color && c == *s.delta_color) continue;
    if (color_rows[static_cast<std::size_t>(c)].empty())
      out.warnings.push_back("color " + std::to_string(c) + " has no halfspaces");
    else if (!color_seen[static_cast<std::size_t>(c)])
      out.warnings.push_back("color " + std::to_string(c) +
                             " has no faces inside the bounding simplex");
  }
  if (out.clipped > 0)
    out.warnings.push_back(std::to_string(out.clipped) +
                           " unbounded faces counted via clipped representatives");
  std::sort(out.warnings.begin(), out.warnings.end());
  return out;
}

}  // namespace polysub

#endif  // POLYSUB_SUBDIVISION_HPP
