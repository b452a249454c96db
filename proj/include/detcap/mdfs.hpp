#pragma once

// Unicast capacity of a layered linear deterministic network by path
// augmentation. Iteration k runs a modified depth-first search over super
// nodes that either completes a k-th S-D path, linearly independent of the
// k-1 found so far (possibly rewiring those), or proves none exists.
//
// Moves available while exploring super node N in layer l:
//   type 1  extend the partial path along a fresh edge (x, y) whose addition
//           keeps the layer-l used edges independent;
//   type 2  swap along an alternating path x -> x' inside layer l, handing
//           the partial path over to the prefix ending at N(x');
//   type 3  walk backwards along a used edge (x, y) into N, freeing it.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detcap/indexed_network.hpp"
#include "detcap/paths.hpp"

namespace detcap {

struct UsedEdge {
  TxId tx{};
  RxId rx{};

  auto operator<=>(const UsedEdge&) const = default;
  bool operator==(const UsedEdge&) const = default;
};

using IndexedPath = std::vector<UsedEdge>;

enum class TxType : std::uint8_t { kType1 = 1, kType2 = 2, kType3 = 3 };

// Per-iteration instrumentation. k1/k2/k3 count transmitting nodes explored
// as type 1, labelled type 2 and labelled type 3 respectively.
struct IterationCounters {
  int iteration = 0;
  bool found = false;
  std::uint64_t k1 = 0;
  std::uint64_t k2 = 0;
  std::uint64_t k3 = 0;
  std::uint64_t explorations = 0;           // transmitting-node explorations
  std::uint64_t supernode_explorations = 0;
  std::uint64_t rank_checks = 0;
  std::uint64_t type1_moves = 0;
  std::uint64_t type2_moves = 0;
  std::uint64_t type3_moves = 0;
  std::uint64_t vx = 0;  // transmitting nodes with an outgoing edge
};

// Violations of k1 <= |Vx|, k3 <= |Vx|, k2 <= 2 k |Vx|; empty when none.
std::vector<std::string> exploration_bound_violations(
    const IterationCounters& c);

// Shadow checks run when SolverOptions::debug_checks is set. Each pair is
// (checks performed, failures).
struct DebugStats {
  std::uint64_t rank_checks = 0;
  std::uint64_t rank_check_mismatches = 0;
  std::uint64_t span_cache_checks = 0;
  std::uint64_t span_cache_mismatches = 0;
  std::uint64_t independence_checks = 0;
  std::uint64_t independence_violations = 0;
  std::uint64_t layer_count_checks = 0;
  std::uint64_t layer_count_violations = 0;
  std::uint64_t restore_checks = 0;
  std::uint64_t restore_mismatches = 0;
  std::vector<std::string> messages;  // first few failures

  std::uint64_t failures() const {
    return rank_check_mismatches + span_cache_mismatches +
           independence_violations + layer_count_violations +
           restore_mismatches;
  }
  void merge(const DebugStats& other);
};

struct SolverOptions {
  // Recompute every fast rank check, cached span and used-edge rank from
  // scratch, and compare path sets before and after every undo.
  bool debug_checks = false;
};

// Search state for one iteration. The used edges of layer cut i are kept
// sorted; tx_partner/rx_partner mirror them for O(1) membership.
struct SearchState {
  static constexpr std::uint32_t kNone = UINT32_MAX;

  const IndexedNetwork* net = nullptr;
  SolverOptions options;
  int iteration = 1;  // k: searching for the k-th path

  std::vector<std::vector<UsedEdge>> used_edges;
  std::vector<std::uint32_t> tx_partner;
  std::vector<std::uint32_t> rx_partner;
  std::vector<char> committed_rx;  // receiving ends of the previous paths

  std::vector<char> super_explored;
  std::vector<char> tx_explored;
  std::vector<char> rx_explored;
  std::vector<TxType> tx_type;
  // Span handed to a node by the type-2 move that relabelled it.
  std::vector<std::optional<std::vector<TxId>>> span_cache;

  // Slots 0..k-2 hold complete paths; the last slot is the partial path.
  std::vector<IndexedPath> pprime;

  IterationCounters counters;
  DebugStats debug;

  // Fresh state for iteration |prev| + 1: everything unexplored and type 1,
  // used edges and pprime taken from prev. Throws ContractViolation when prev
  // is not a set of complete, endpoint-disjoint paths of the network.
  static SearchState begin_iteration(const IndexedNetwork& net,
                                     const PathSet& prev,
                                     SolverOptions options = {});

  bool used(TxId x) const { return tx_partner[idx(x)] != kNone; }
  bool used(RxId y) const { return rx_partner[idx(y)] != kNone; }
  RxId partner(TxId x) const { return static_cast<RxId>(tx_partner[idx(x)]); }
  TxId partner(RxId y) const { return static_cast<TxId>(rx_partner[idx(y)]); }

  PathSet path_set() const;
  // Text form of pprime and the used edges; equal strings mean equal state.
  std::string fingerprint() const;
};

// The unique used transmitting nodes of layer L(x) whose rows, restricted to
// the used receiving nodes, sum to x's row. Ascending. x must not be used.
std::vector<TxId> span(const SearchState& state, TxId x);

// Alternating path x=x_0 -> x': (x, y1), (x1, y1), (x1, y2), ..., (x', ym),
// with the odd-positioned edges drawn from the used edges of the layer.
struct AlternatingPath {
  std::vector<UsedEdge> edges;
  TxId target() const { return edges.back().tx; }
};

std::map<TxId, AlternatingPath> find_ind_paths(const SearchState& state,
                                               TxId x,
                                               const std::vector<TxId>& span);

// Whether adding edge (x, y) keeps the layer's used edges independent, given
// x's current span: T(x, y) != sum over span of T(x', y).
bool fast_type1_check(const SearchState& state, TxId x,
                      const std::vector<TxId>& span, RxId y);

// Runs the search from `start` (the source for a fresh state). On success
// pprime holds `iteration` complete independent paths; otherwise every move
// has been undone and pprime equals the input paths. Labels are not reset.
bool mdfs(SearchState& state, SuperId start);

struct CapacityResult {
  int capacity = 0;
  PathSet paths;
  std::vector<IterationCounters> iterations;  // capacity + 1 entries
  DebugStats debug;
};

// Throws ContractViolation for invalid networks.
CapacityResult unicast_capacity(const LayeredNetwork& net,
                                const SolverOptions& options = {});
CapacityResult unicast_capacity(const IndexedNetwork& net,
                                const SolverOptions& options = {});

}  // namespace detcap
