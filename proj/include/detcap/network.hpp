#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detcap/gf2.hpp"

namespace detcap {

enum class NodeKind : std::uint8_t { kTransmitting = 0, kReceiving = 1 };

// One signal level of a super node.
struct NodeId {
  std::string super_node;
  NodeKind kind = NodeKind::kTransmitting;
  int level = 0;

  auto operator<=>(const NodeId&) const = default;
  bool operator==(const NodeId&) const = default;

  std::string to_string() const;
};

inline NodeId tx(std::string super_node, int level) {
  return {std::move(super_node), NodeKind::kTransmitting, level};
}
inline NodeId rx(std::string super_node, int level) {
  return {std::move(super_node), NodeKind::kReceiving, level};
}

struct SuperNode {
  std::string id;
  int layer = 0;
  int tx_levels = 0;
  int rx_levels = 0;

  bool operator==(const SuperNode&) const = default;
};

// Directed edge from a transmitting level to a receiving level one layer on.
struct Edge {
  NodeId from;
  NodeId to;

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;

  std::string to_string() const;
};

// A layered linear deterministic relay network. Plain data: nothing here is
// checked on construction, call validate() before handing it to a solver.
struct LayeredNetwork {
  int layers = 0;
  std::vector<SuperNode> supernodes;
  std::vector<Edge> edges;
  std::string source;
  std::string destination;

  const SuperNode* find(const std::string& id) const;
  const SuperNode& at(const std::string& id) const;  // throws if unknown

  // Supernodes ordered by (layer, id), edges sorted. Serialization and
  // structural comparison both work on this form.
  LayeredNetwork canonical() const;

  bool operator==(const LayeredNetwork&) const = default;
};

bool structurally_equal(const LayeredNetwork& a, const LayeredNetwork& b);

// Returns every violated invariant; empty means the network is valid.
std::vector<std::string> validate(const LayeredNetwork& net);

// Throws ContractViolation listing all violations unless net is valid.
void require_valid(const LayeredNetwork& net);

// Stable label for a level, unique within `net`. Usable as a Gf2Matrix label.
Label node_label(const LayeredNetwork& net, const NodeId& node);

// T(tx, rx): 1 exactly where the network has an edge.
Gf2Matrix adjacency(const LayeredNetwork& net, const std::vector<NodeId>& tx,
                    const std::vector<NodeId>& rx);

// Adjacency of an edge set: rows are the distinct transmitting ends, columns
// the distinct receiving ends, both in first-seen order.
Gf2Matrix edge_adjacency(const LayeredNetwork& net,
                         const std::vector<Edge>& edges);

// Edges whose transmitting end lies in layer i, sorted.
std::vector<Edge> layer_cut_edges(const LayeredNetwork& net, int i);

// Number of levels above the noise floor: ceil(log2(snr) / 2).
int levels_from_snr(double snr);

// Incremental construction helper; build() fills source/destination from the
// first and last layers and returns the canonical form.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(int layers) { net_.layers = layers; }

  NetworkBuilder& supernode(std::string id, int layer, int tx_levels,
                            int rx_levels);
  NetworkBuilder& edge(const std::string& from, int from_level,
                       const std::string& to, int to_level);
  // Point-to-point link with `gain` levels above noise: tx level i reaches rx
  // level i for every i < gain that exists on both ends.
  NetworkBuilder& shift_link(const std::string& from, const std::string& to,
                             int gain);

  LayeredNetwork build() const;

 private:
  LayeredNetwork net_;
};

// Two super nodes, `levels` levels each, joined by a shift link of `gain`.
LayeredNetwork point_to_point(int levels, int gain);

struct RandomNetworkParams {
  int layers = 3;
  int max_supernodes_per_layer = 2;
  int max_levels = 2;
  double edge_density = 0.5;
  std::uint64_t seed = 0;
};

// Seeded random layered network in canonical form. Intermediate layers get
// 1..max_supernodes_per_layer super nodes, every super node 1..max_levels
// levels per side, and each possible inter-layer edge appears independently
// with probability edge_density. Deterministic on every platform.
LayeredNetwork gen_random(const RandomNetworkParams& params);

}  // namespace detcap
