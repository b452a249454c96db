#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detcap/network.hpp"

namespace detcap {

// Edge i of a path crosses layer cut i. A complete S-D path has layers-1
// edges; consecutive edges meet at the same super node.
using Path = std::vector<Edge>;

struct PathSet {
  std::vector<Path> paths;      // complete S-D paths
  std::optional<Path> partial;  // the path still being extended, if any

  std::size_t size() const { return paths.size(); }
  bool operator==(const PathSet&) const = default;
};

std::string to_string(const Path& path);

}  // namespace detcap
