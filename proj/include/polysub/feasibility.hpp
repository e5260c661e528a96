#ifndef POLYSUB_FEASIBILITY_HPP
#define POLYSUB_FEASIBILITY_HPP

// Exact feasibility of homogeneous sign systems by Fourier-Motzkin
// elimination with strictness tracking.  Sized for desk scale
// (a few dozen constraints, dimension <= ~6).

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polysub/linalg.hpp"
#include "polysub/rational.hpp"

namespace polysub {

/// One requirement sign(normal . u) = sign, with sign in {-1, 0, +1}.
struct SignCondition {
  RVec normal;
  int sign = 0;
};

namespace detail {

struct HomIneq {
  RVec a;       // meaning: a . u <= 0, or < 0 when strict
  bool strict = false;
};

inline std::string ineq_key(const HomIneq& q) {
  // Normalize by the first nonzero magnitude so duplicates collapse.
  RVec v = q.a;
  Rational lead = 0;
  for (const auto& x : v)
    if (x != 0) {
      lead = abs(x);
      break;
    }
  if (lead != 0)
    for (auto& x : v) x /= lead;
  return (q.strict ? "<" : "=") + format_vec(v, ",");
}

}  // namespace detail

/// Decides whether some u satisfies every equality a.u = 0 and every
/// inequality a.u <= 0 (strict where flagged), all over the rationals.
inline bool homogeneous_feasible(std::vector<RVec> equalities,
                                 std::vector<detail::HomIneq> ineqs, int dim) {
  // Substitute equalities away first.
  std::vector<bool> eliminated(static_cast<std::size_t>(dim), false);
  for (std::size_t e = 0; e < equalities.size(); ++e) {
    RVec& a = equalities[e];
    int piv = -1;
    for (int j = 0; j < dim; ++j)
      if (!eliminated[j] && a[j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;  // 0 = 0 (homogeneous: never inconsistent)
    auto reduce = [&](RVec& c) {
      if (c[piv] == 0) return;
      Rational f = c[piv] / a[piv];
      for (int j = 0; j < dim; ++j) c[j] -= f * a[j];
    };
    for (std::size_t e2 = e + 1; e2 < equalities.size(); ++e2) reduce(equalities[e2]);
    for (auto& q : ineqs) reduce(q.a);
    eliminated[piv] = true;
  }

  auto prune = [&](std::vector<detail::HomIneq>& qs) -> bool {
    std::vector<detail::HomIneq> kept;
    std::unordered_set<std::string> seen;
    for (auto& q : qs) {
      if (is_zero_vec(q.a)) {
        if (q.strict) return false;  // 0 < 0
        continue;
      }
      std::string k = detail::ineq_key(q);
      if (seen.insert(std::move(k)).second) kept.push_back(std::move(q));
    }
    qs = std::move(kept);
    return true;
  };
  if (!prune(ineqs)) return false;

  for (int j = 0; j < dim; ++j) {
    if (eliminated[j]) continue;
    std::vector<detail::HomIneq> pos, neg, rest;
    for (auto& q : ineqs) {
      int s = sign_of(q.a[j]);
      if (s > 0)
        pos.push_back(std::move(q));
      else if (s < 0)
        neg.push_back(std::move(q));
      else
        rest.push_back(std::move(q));
    }
    if (pos.empty() || neg.empty()) {
      ineqs = std::move(rest);  // one-sided: pick u_j extreme
    } else {
      for (const auto& p : pos)
        for (const auto& n : neg) {
          detail::HomIneq q;
          q.strict = p.strict || n.strict;
          q.a.resize(static_cast<std::size_t>(dim), Rational(0));
          const Rational cp = p.a[j];   // > 0
          const Rational cn = -n.a[j];  // > 0
          for (int c = 0; c < dim; ++c) q.a[c] = cn * p.a[c] + cp * n.a[c];
          rest.push_back(std::move(q));
        }
      ineqs = std::move(rest);
    }
    if (!prune(ineqs)) return false;
  }
  return true;  // only 0 <= 0 remained
}

/// True iff some direction u has sign(normal . u) equal to the required sign
/// for every condition.  The all-zero pattern is satisfiable by u = 0.
inline bool cone_feasible(const std::vector<SignCondition>& conds, int dim) {
  // Independent normals realize every sign pattern.
  {
    RMat all;
    all.reserve(conds.size());
    for (const auto& c : conds) all.push_back(c.normal);
    if (rank(all) == static_cast<int>(conds.size())) return true;
  }
  std::vector<RVec> eqs;
  std::vector<detail::HomIneq> ineqs;
  for (const auto& c : conds) {
    if (c.sign == 0) {
      eqs.push_back(c.normal);
    } else if (c.sign < 0) {
      ineqs.push_back({c.normal, true});  // a.u < 0
    } else {
      RVec neg(c.normal.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -c.normal[i];
      ineqs.push_back({std::move(neg), true});  // a.u > 0
    }
  }
  return homogeneous_feasible(std::move(eqs), std::move(ineqs), dim);
}

}  // namespace polysub

#endif  // POLYSUB_FEASIBILITY_HPP
