#ifndef POLYSUB_REPORTS_HPP
#define POLYSUB_REPORTS_HPP

// Machine-readable reports.  Exact integers are serialized as decimal
// strings so downstream consumers never round them.

#include <json.hpp>

#include "polysub/charging.hpp"
#include "polysub/perturb.hpp"
#include "polysub/subdivision.hpp"

namespace polysub {

using Json = nlohmann::ordered_json;

inline std::string dec(long long x) { return std::to_string(x); }

inline Json census_json(const Census& c, bool include_counts = true) {
  Json j;
  j["d"] = dec(c.d);
  j["n"] = dec(c.n);
  j["m"] = dec(c.m);
  if (include_counts) {
    Json arr = Json::array();
    for (long long x : c.counts) arr.push_back(dec(x));
    j["counts"] = std::move(arr);
  }
  j["vertices"] = dec(c.vertices);
  j["bound"] = dec(c.bound);
  j["bound_ok"] = c.bound_ok;
  j["warnings"] = c.warnings;
  return j;
}

inline Json charging_json(const ChargingReport& r) {
  Json j;
  j["vertices"] = dec(r.vertices);
  Json classes = Json::array();
  for (const auto& cl : r.per_class) {
    Json e;
    e["side"] = cl.up ? "up" : "down";
    e["i"] = dec(cl.i);
    e["count"] = dec(cl.count);
    e["cap"] = dec(cl.cap);
    classes.push_back(std::move(e));
  }
  j["per_class"] = std::move(classes);
  j["injective"] = r.injective;
  j["per_vertex_ok"] = r.per_vertex_ok;
  j["bound"] = dec(r.bound);
  j["bound_ok"] = r.bound_ok;
  j["issues"] = r.issues;
  return j;
}

inline Json general_position_json(const GeneralPositionReport& r) {
  Json j;
  j["distinct_hyperplanes"] = r.distinct_hyperplanes;
  j["simple"] = r.simple;
  j["generic_vertical_ok"] = r.generic_vertical_ok;
  j["witnesses"] = r.witnesses;
  return j;
}

inline Json monotonicity_json(const MonotonicityReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["violating_dim"] = dec(r.violating_dim);
  Json b = Json::array(), a = Json::array();
  for (long long x : r.before_counts) b.push_back(dec(x));
  for (long long x : r.after_counts) a.push_back(dec(x));
  j["before"] = std::move(b);
  j["after"] = std::move(a);
  return j;
}

inline std::string perturbation_log(const std::vector<PerturbationStep>& steps) {
  std::string out;
  for (const auto& st : steps) out += perturbation_log_line(st) + "\n";
  return out;
}

}  // namespace polysub

#endif  // POLYSUB_REPORTS_HPP
