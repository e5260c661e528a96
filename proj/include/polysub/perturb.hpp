#ifndef POLYSUB_PERTURB_HPP
#define POLYSUB_PERTURB_HPP

// One-halfspace-at-a-time outward perturbation to general position, with an
// exact safe step size and face-count monotonicity verification.
//
// Every halfspace keeps its normal and moves outwards by a rational epsilon
// in offset units, so containment h in h' is automatic and "distance" is
// measured exactly as |a.p - b| against the fixed normal a.  The safe bound
// keeps every candidate vertex and every face sample strictly on its side of
// both the old and the new hyperplane, and caps the induced motion of every
// intersection vertex below its clearance from every other hyperplane.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polysub/charging.hpp"
#include "polysub/gp.hpp"
#include "polysub/subdivision.hpp"

namespace polysub {

/// Full general-position report: exact distinctness and simplicity checks,
/// plus whether the deterministic vertical-direction search succeeds.
inline GeneralPositionReport check_general_position(const Scene& s) {
  GeneralPositionReport rep = check_general_position_core(s);
  if (rep.ok()) {
    try {
      pick_generic_direction(s);
      rep.generic_vertical_ok = true;
    } catch (const std::exception& e) {
      rep.generic_vertical_ok = false;
      rep.witnesses.push_back(std::string("vertical direction search failed: ") + e.what());
    }
  }
  return rep;
}

/// A positive rational strictly below half the smallest positive clearance
/// from the hyperplane of halfspace `hid` to every candidate vertex and
/// every face sample, and below every induced vertex-motion bound; halved
/// again and snapped to a power of two.  Pre: bounding simplex attached.
inline Rational safe_epsilon(const Scene& s, int hid) {
  if (!s.delta_color) throw std::invalid_argument("safe_epsilon: bounding simplex missing");
  if (hid < 0 || hid >= static_cast<int>(s.halfspaces.size()))
    throw std::invalid_argument("safe_epsilon: bad halfspace id");
  const Halfspace& h = s.halfspaces[static_cast<std::size_t>(hid)];

  std::optional<Rational> best;
  auto consider = [&](const Rational& x) {
    if (x <= 0) return;
    if (!best || x < *best) best = x;
  };
  auto clearance = [&](const RVec& p) { return Rational(abs(dot(h.normal, p) - h.offset)); };

  detail::FaceComplex fc = detail::build_face_complex(s, /*include_delta_boundary=*/false);
  for (const RVec& p : fc.vertices) consider(clearance(p));

  for (const auto& face : fc.faces) {
    RVec centroid(static_cast<std::size_t>(s.dim), Rational(0));
    for (int vi : face.vertex_ids)
      for (int j = 0; j < s.dim; ++j)
        centroid[static_cast<std::size_t>(j)] +=
            fc.vertices[static_cast<std::size_t>(vi)][static_cast<std::size_t>(j)];
    for (auto& x : centroid) x /= static_cast<int>(face.vertex_ids.size());
    Rational dc = clearance(centroid);
    if (dc > 0) {
      consider(dc);
      continue;
    }
    // Centroid sits on the hyperplane: sample midway toward a vertex off it.
    for (int vi : face.vertex_ids) {
      const RVec& w = fc.vertices[static_cast<std::size_t>(vi)];
      if (clearance(w) == 0) continue;
      RVec mid(centroid.size());
      for (std::size_t j = 0; j < mid.size(); ++j) mid[j] = (centroid[j] + w[j]) / 2;
      consider(clearance(mid));
      break;
    }
    // All face vertices on the hyperplane: the face lies inside it; no
    // sample needed.
  }

  // Vertex-motion bounds: shifting the offset by eps moves the intersection
  // point of each d-subset through h along a fixed direction; keep that
  // motion below the point's clearance from every other hyperplane.
  {
    const HyperplaneClasses hc = hyperplane_classes(s);
    const int cls_h = hc.class_of[static_cast<std::size_t>(hid)];
    Rational lead = 0;
    for (const auto& x : h.normal)
      if (x != 0) {
        lead = x;
        break;
      }
    const int nclasses = static_cast<int>(hc.normal.size());
    std::vector<int> others;
    for (int c = 0; c < nclasses; ++c)
      if (c != cls_h) others.push_back(c);
    detail::for_each_combination(static_cast<int>(others.size()), s.dim - 1,
                                 [&](const std::vector<int>& idx) {
      std::vector<int> subset{cls_h};
      for (int k : idx) subset.push_back(others[static_cast<std::size_t>(k)]);
      RMat A;
      RVec b, unit;
      for (std::size_t r = 0; r < subset.size(); ++r) {
        A.push_back(hc.normal[static_cast<std::size_t>(subset[r])]);
        b.push_back(hc.offset[static_cast<std::size_t>(subset[r])]);
        unit.push_back(Rational(r == 0 ? 1 : 0));
      }
      auto point = solve_square(A, b);
      if (!point) return;
      auto motion = solve_square(A, unit);  // d(point)/d(rep offset)
      for (int g = 0; g < nclasses; ++g) {
        bool in_subset = false;
        for (int c : subset) in_subset = in_subset || (c == g);
        if (in_subset) continue;
        Rational slack =
            abs(dot(hc.normal[static_cast<std::size_t>(g)], *point) - hc.offset[static_cast<std::size_t>(g)]);
        if (slack == 0) continue;  // coincident point; distinctness handled elsewhere
        Rational rate = abs(dot(hc.normal[static_cast<std::size_t>(g)], *motion) / lead);
        if (rate != 0) consider(slack / rate);
      }
    });
  }

  if (!best) throw std::runtime_error("safe_epsilon: no positive clearance found");
  return pow2_floor(*best / 4);
}

struct PerturbationStep {
  int hid = -1;
  RVec old_normal;
  Rational old_offset;
  RVec new_normal;
  Rational new_offset;
  Rational epsilon;
};

inline std::string perturbation_log_line(const PerturbationStep& st) {
  return "step " + std::to_string(st.hid) + " eps " + format_rational(st.epsilon) + " old " +
         format_vec(st.old_normal) + " " + format_rational(st.old_offset) + " new " +
         format_vec(st.new_normal) + " " + format_rational(st.new_offset);
}

/// Perturbs the non-simplex halfspaces one by one in input order, each moved
/// outward by a fresh power-of-two epsilon below its safe bound, retrying
/// with halved steps until the already-perturbed prefix passes the exact
/// general-position check.  The bounding simplex is attached first (if
/// absent) and never moves.
inline std::pair<Scene, std::vector<PerturbationStep>> perturb_scene(const Scene& scene) {
  scene.validate();
  Scene s = scene.delta_color ? scene : add_bounding_simplex(scene);
  std::vector<PerturbationStep> steps;

  std::vector<int> order;
  for (std::size_t i = 0; i < s.halfspaces.size(); ++i)
    if (!s.is_delta(static_cast<int>(i))) order.push_back(static_cast<int>(i));

  std::vector<bool> placed(s.halfspaces.size(), false);
  for (std::size_t i = 0; i < s.halfspaces.size(); ++i)
    if (s.is_delta(static_cast<int>(i))) placed[i] = true;

  for (int hid : order) {
    const Rational eps0 = safe_epsilon(s, hid);
    PerturbationStep st;
    st.hid = hid;
    st.old_normal = s.halfspaces[static_cast<std::size_t>(hid)].normal;
    st.old_offset = s.halfspaces[static_cast<std::size_t>(hid)].offset;

    bool committed = false;
    Rational eps = eps0;
    for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
      Scene trial = s;
      trial.halfspaces[static_cast<std::size_t>(hid)].offset += eps;
      Scene prefix;
      prefix.dim = trial.dim;
      prefix.num_colors = trial.num_colors;
      prefix.delta_color = trial.delta_color;
      for (std::size_t i = 0; i < trial.halfspaces.size(); ++i)
        if (placed[i] || static_cast<int>(i) == hid)
          prefix.halfspaces.push_back(trial.halfspaces[i]);
      if (!check_general_position_core(prefix).ok()) continue;
      s = std::move(trial);
      st.epsilon = eps;
      committed = true;
      break;
    }
    if (!committed)
      throw std::runtime_error("perturb_scene: retries exhausted at halfspace " +
                               std::to_string(hid));
    placed[static_cast<std::size_t>(hid)] = true;
    st.new_normal = s.halfspaces[static_cast<std::size_t>(hid)].normal;
    st.new_offset = s.halfspaces[static_cast<std::size_t>(hid)].offset;
    steps.push_back(std::move(st));
  }

  if (!check_general_position_core(s).ok())
    throw std::runtime_error("perturb_scene: output fails the general-position check");
  return {std::move(s), std::move(steps)};
}

struct MonotonicityReport {
  bool ok = true;
  int violating_dim = -1;
  std::vector<long long> before_counts;
  std::vector<long long> after_counts;
};

/// Census of both scenes inside the same bounding simplex; per-dimension
/// counts must not decrease.
inline MonotonicityReport verify_monotonicity(const Scene& before, const Scene& after) {
  if (!after.delta_color)
    throw std::invalid_argument("verify_monotonicity: perturbed scene has no bounding simplex");
  Scene b = before.delta_color ? before : add_bounding_simplex(before);
  // The comparison region must match: the simplex rows never move.
  {
    std::vector<std::string> bd, ad;
    for (std::size_t i = 0; i < b.halfspaces.size(); ++i)
      if (b.is_delta(static_cast<int>(i)))
        bd.push_back(format_vec(b.halfspaces[i].normal) + " " +
                     format_rational(b.halfspaces[i].offset));
    for (std::size_t i = 0; i < after.halfspaces.size(); ++i)
      if (after.is_delta(static_cast<int>(i)))
        ad.push_back(format_vec(after.halfspaces[i].normal) + " " +
                     format_rational(after.halfspaces[i].offset));
    if (bd != ad)
      throw std::invalid_argument("verify_monotonicity: bounding simplexes differ");
  }
  MonotonicityReport rep;
  rep.before_counts = census(b).counts;
  rep.after_counts = census(after).counts;
  for (std::size_t k = 0; k < rep.before_counts.size(); ++k)
    if (rep.after_counts[k] < rep.before_counts[k]) {
      rep.ok = false;
      rep.violating_dim = static_cast<int>(k);
      break;
    }
  return rep;
}

}  // namespace polysub

#endif  // POLYSUB_PERTURB_HPP
