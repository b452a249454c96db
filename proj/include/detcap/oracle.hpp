#pragma once

// Exponential reference computations used to cross-check the search on small
// instances. Nothing here shares code with the solver beyond gf2 and the
// network model.

#include <set>
#include <string>
#include <vector>

#include "detcap/network.hpp"
#include "detcap/paths.hpp"

namespace detcap {

// S-side of a cut: must contain the source and not the destination.
struct Cut {
  std::set<std::string> omega;
};

// Sum over layer cuts of the rank of the crossing edges' adjacency.
int cut_rank(const LayeredNetwork& net, const Cut& cut);

// Rank of the whole crossing adjacency as one matrix (block diagonal by
// layer). Always equal to cut_rank; kept as an independent second route.
int cut_rank_block(const LayeredNetwork& net, const Cut& cut);

struct MinCut {
  int capacity = 0;
  Cut argmin;
};

inline constexpr int kDefaultOracleBound = 20;

// Enumerates all 2^m cuts over the m intermediate super nodes. Throws
// SizeError when m exceeds max_intermediate.
MinCut min_cut_capacity(const LayeredNetwork& net,
                        int max_intermediate = kDefaultOracleBound);

// True iff every path is a complete S-D path and, in each layer cut, the
// paths' edges have distinct endpoints and a full-rank adjacency. Throws
// ContractViolation when a path uses an edge the network does not have.
bool verify_paths_independent(const LayeredNetwork& net, const PathSet& paths);

// All S-D paths, in lexicographic edge order. Throws SizeError beyond limit.
std::vector<Path> enumerate_paths(const LayeredNetwork& net,
                                  std::size_t limit);

inline constexpr std::size_t kDefaultPathBound = 16;

// Largest k such that some k of the enumerated S-D paths are independent.
// Throws SizeError when the network has more than max_paths S-D paths.
int max_independent_paths_bruteforce(const LayeredNetwork& net,
                                     std::size_t max_paths = kDefaultPathBound);

}  // namespace detcap
