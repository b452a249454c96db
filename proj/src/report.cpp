#include "detcap/report.hpp"

#include "json_util.hpp"

namespace detcap {

RunReport make_report(const std::string& input, const CapacityResult& result,
                      double wall_time_ms) {
  RunReport r;
  r.input = input;
  r.capacity = result.capacity;
  r.wall_time_ms = wall_time_ms;
  r.iterations = result.iterations;
  if (!r.iterations.empty()) r.vx = r.iterations.front().vx;
  return r;
}

std::size_t bound_violation_count(const RunReport& r) {
  std::size_t n = 0;
  for (const auto& c : r.iterations) n += exploration_bound_violations(c).size();
  return n;
}

std::string report_to_json(const RunReport& r) {
  using json_util::Json;
  Json doc = Json::object();
  doc["schema"] = "detcap-report/1";
  doc["input"] = r.input;
  doc["capacity"] = r.capacity;
  doc["iterations"] = r.iterations.size();
  doc["wall_time_ms"] = r.wall_time_ms;
  doc["vx"] = r.vx;
  Json per = Json::array();
  for (const auto& c : r.iterations) {
    Json j = Json::object();
    j["k"] = c.iteration;
    j["found"] = c.found;
    j["k1"] = c.k1;
    j["k2"] = c.k2;
    j["k3"] = c.k3;
    j["k1_bound"] = c.vx;
    j["k2_bound"] = 2 * static_cast<std::uint64_t>(c.iteration) * c.vx;
    j["k3_bound"] = c.vx;
    j["explorations"] = c.explorations;
    j["supernode_explorations"] = c.supernode_explorations;
    j["rank_checks"] = c.rank_checks;
    j["type1_moves"] = c.type1_moves;
    j["type2_moves"] = c.type2_moves;
    j["type3_moves"] = c.type3_moves;
    Json bugs = Json::array();
    for (const auto& v : exploration_bound_violations(c)) bugs.push_back(v);
    j["bound_violations"] = std::move(bugs);
    per.push_back(std::move(j));
  }
  doc["per_iteration"] = std::move(per);
  doc["bound_violations"] = bound_violation_count(r);
  if (r.oracle) {
    Json o = Json::object();
    o["min_cut"] = r.oracle->min_cut;
    if (r.oracle->bruteforce) {
      o["bruteforce"] = *r.oracle->bruteforce;
    } else {
      o["bruteforce"] = nullptr;
    }
    o["paths_independent"] = r.oracle->paths_independent;
    o["agree"] = r.oracle->agree;
    doc["oracle"] = std::move(o);
  } else {
    doc["oracle"] = nullptr;
  }
  return json_util::dump(doc);
}

}  // namespace detcap
