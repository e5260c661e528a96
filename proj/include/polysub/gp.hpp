#ifndef POLYSUB_GP_HPP
#define POLYSUB_GP_HPP

// General-position checks: distinct bounding hyperplanes, and simplicity in
// the pointwise sense (no point on more than d geometric hyperplanes; every
// <= d halfspace normals that share a common point are independent).

#include <set>
#include <string>
#include <vector>

#include "polysub/scene.hpp"

namespace polysub {

struct GeneralPositionReport {
  bool distinct_hyperplanes = true;
  bool simple = true;
  bool generic_vertical_ok = false;  // filled by the full check (see perturb.hpp)
  std::vector<std::string> witnesses;

  bool ok() const { return distinct_hyperplanes && simple; }
};

/// Distinctness + simplicity, exactly.  Does not search for a vertical
/// direction; check_general_position layers that on top.
inline GeneralPositionReport check_general_position_core(const Scene& s) {
  GeneralPositionReport rep;
  const std::size_t n = s.halfspaces.size();

  // Distinctness up to positive scaling of (normal, offset).
  {
    std::unordered_map<std::string, std::vector<int>> groups;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& h = s.halfspaces[i];
      Rational lead = 0;
      for (const auto& x : h.normal)
        if (x != 0) {
          lead = abs(x);
          break;
        }
      RVec cn(h.normal.size());
      for (std::size_t j = 0; j < cn.size(); ++j) cn[j] = h.normal[j] / lead;
      groups[format_vec(cn, ",") + ";" + format_rational(Rational(h.offset / lead))].push_back(
          static_cast<int>(i));
    }
    std::vector<std::string> ws;
    for (const auto& [key, ids] : groups) {
      (void)key;
      for (std::size_t a = 0; a + 1 < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
          ws.push_back("halfspaces " + std::to_string(ids[a]) + " and " + std::to_string(ids[b]) +
                       " coincide");
    }
    if (!ws.empty()) {
      rep.distinct_hyperplanes = false;
      std::sort(ws.begin(), ws.end());
      for (auto& w : ws) rep.witnesses.push_back(std::move(w));
    }
  }

  // Every subset of <= d halfspaces with a common point has independent normals.
  std::set<std::string> simple_witnesses;
  for (int k = 2; k <= s.dim && k <= static_cast<int>(n); ++k) {
    detail::for_each_combination(static_cast<int>(n), k, [&](const std::vector<int>& idx) {
      RMat A;
      RVec b;
      for (int i : idx) {
        A.push_back(s.halfspaces[static_cast<std::size_t>(i)].normal);
        b.push_back(s.halfspaces[static_cast<std::size_t>(i)].offset);
      }
      auto sol = solve_affine(std::move(A), std::move(b));
      if (!sol.consistent || sol.rank_a == k) return;
      std::string w = "halfspaces {";
      for (std::size_t j = 0; j < idx.size(); ++j)
        w += (j ? "," : "") + std::to_string(idx[j]);
      w += "} share a point with dependent normals";
      simple_witnesses.insert(std::move(w));
    });
  }

  // No point on more than d geometric hyperplanes.
  {
    const HyperplaneClasses hc = hyperplane_classes(s);
    for (const RVec& p : candidate_vertices(s)) {
      int tight = 0;
      for (std::size_t c = 0; c < hc.normal.size(); ++c)
        if (dot(hc.normal[c], p) == hc.offset[c]) ++tight;
      if (tight > s.dim)
        simple_witnesses.insert("point (" + format_vec(p, ", ") + ") lies on " +
                                std::to_string(tight) + " hyperplanes");
    }
  }

  if (!simple_witnesses.empty()) {
    rep.simple = false;
    for (const auto& w : simple_witnesses) rep.witnesses.push_back(w);
  }
  return rep;
}

}  // namespace polysub

#endif  // POLYSUB_GP_HPP
