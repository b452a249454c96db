#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detcap/mdfs.hpp"

namespace detcap {

struct OracleVerdict {
  int min_cut = 0;
  std::optional<int> bruteforce;  // absent when path enumeration was skipped
  bool paths_independent = false;
  bool agree = false;
};

struct RunReport {
  std::string input;
  int capacity = 0;
  double wall_time_ms = 0.0;
  std::uint64_t vx = 0;
  std::vector<IterationCounters> iterations;
  std::optional<OracleVerdict> oracle;
};

RunReport make_report(const std::string& input, const CapacityResult& result,
                      double wall_time_ms);

// Total exploration-bound violations over all iterations.
std::size_t bound_violation_count(const RunReport& r);

// Stable JSON layout, documented in the README. Ends with a newline.
std::string report_to_json(const RunReport& r);

}  // namespace detcap
