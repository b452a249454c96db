#include "detcap/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "detcap/errors.hpp"

namespace detcap {

std::string NodeId::to_string() const {
  std::ostringstream os;
  os << super_node << (kind == NodeKind::kTransmitting ? ".tx" : ".rx")
     << level;
  return os.str();
}

std::string Edge::to_string() const {
  return from.to_string() + "->" + to.to_string();
}

const SuperNode* LayeredNetwork::find(const std::string& id) const {
  for (const auto& s : supernodes) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const SuperNode& LayeredNetwork::at(const std::string& id) const {
  const SuperNode* s = find(id);
  if (s == nullptr) throw ContractViolation("unknown super node '" + id + "'");
  return *s;
}

LayeredNetwork LayeredNetwork::canonical() const {
  LayeredNetwork out = *this;
  std::sort(out.supernodes.begin(), out.supernodes.end(),
            [](const SuperNode& a, const SuperNode& b) {
              return std::tie(a.layer, a.id) < std::tie(b.layer, b.id);
            });
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool structurally_equal(const LayeredNetwork& a, const LayeredNetwork& b) {
  return a.canonical() == b.canonical();
}

namespace {

bool level_exists(const SuperNode& s, const NodeId& node) {
  const int count = node.kind == NodeKind::kTransmitting ? s.tx_levels
                                                         : s.rx_levels;
  return node.level >= 0 && node.level < count;
}

}  // namespace

std::vector<std::string> validate(const LayeredNetwork& net) {
  std::vector<std::string> out;
  if (net.layers < 2) {
    out.push_back("network needs at least 2 layers, has " +
                  std::to_string(net.layers));
  }

  std::map<std::string, const SuperNode*> by_id;
  std::vector<int> per_layer(std::max(net.layers, 0), 0);
  for (const auto& s : net.supernodes) {
    if (!by_id.emplace(s.id, &s).second) {
      out.push_back("duplicate super node id '" + s.id + "'");
    }
    if (s.layer < 0 || s.layer >= net.layers) {
      out.push_back("super node '" + s.id + "' has layer " +
                    std::to_string(s.layer) + " outside [0, " +
                    std::to_string(net.layers) + ")");
    } else {
      ++per_layer[s.layer];
    }
    if (s.tx_levels < 0 || s.rx_levels < 0) {
      out.push_back("super node '" + s.id + "' has a negative level count");
    }
  }
  for (int i = 0; i < net.layers; ++i) {
    if (per_layer[i] == 0) {
      out.push_back("layer " + std::to_string(i) + " has no super nodes");
    }
  }
  if (net.layers >= 2) {
    if (per_layer[0] > 1) out.push_back("multiple super nodes in source layer 0");
    if (per_layer[net.layers - 1] > 1) {
      out.push_back("multiple super nodes in destination layer " +
                    std::to_string(net.layers - 1));
    }
  }

  auto src = by_id.find(net.source);
  if (src == by_id.end()) {
    out.push_back("source '" + net.source + "' is not a super node");
  } else {
    if (src->second->layer != 0) out.push_back("source is not in layer 0");
    if (src->second->rx_levels != 0) {
      out.push_back("source must have no receiving levels");
    }
  }
  auto dst = by_id.find(net.destination);
  if (dst == by_id.end()) {
    out.push_back("destination '" + net.destination + "' is not a super node");
  } else {
    if (dst->second->layer != net.layers - 1) {
      out.push_back("destination is not in the last layer");
    }
    if (dst->second->tx_levels != 0) {
      out.push_back("destination must have no transmitting levels");
    }
  }

  std::set<Edge> seen;
  for (const auto& e : net.edges) {
    const std::string name = "edge " + e.to_string();
    if (e.from.kind != NodeKind::kTransmitting ||
        e.to.kind != NodeKind::kReceiving) {
      out.push_back(name + ": edge endpoints have wrong kinds");
    }
    auto f = by_id.find(e.from.super_node);
    auto t = by_id.find(e.to.super_node);
    if (f == by_id.end() || t == by_id.end()) {
      out.push_back(name + ": dangling node reference (unknown super node)");
      continue;
    }
    if (!level_exists(*f->second, e.from) || !level_exists(*t->second, e.to)) {
      out.push_back(name + ": dangling node reference (level out of range)");
    }
    if (t->second->layer != f->second->layer + 1) {
      out.push_back(name + ": non-consecutive layers");
    }
    if (!seen.insert(e).second) out.push_back(name + ": duplicate edge");
  }
  return out;
}

void require_valid(const LayeredNetwork& net) {
  const auto violations = validate(net);
  if (violations.empty()) return;
  std::string msg = "invalid network:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw ContractViolation(msg);
}

namespace {

const SuperNode& require_node(const LayeredNetwork& net, const NodeId& node,
                              NodeKind kind) {
  const SuperNode* s = net.find(node.super_node);
  if (s == nullptr || node.kind != kind || !level_exists(*s, node)) {
    throw ContractViolation("unknown " +
                            std::string(kind == NodeKind::kTransmitting
                                            ? "transmitting"
                                            : "receiving") +
                            " node " + node.to_string());
  }
  return *s;
}

}  // namespace

Label node_label(const LayeredNetwork& net, const NodeId& node) {
  // Ordinal among ids sorted lexicographically; independent of vector order.
  std::uint64_t ordinal = 0;
  bool found = false;
  for (const auto& s : net.supernodes) {
    if (s.id < node.super_node) ++ordinal;
    if (s.id == node.super_node) found = true;
  }
  if (!found || node.level < 0) {
    throw ContractViolation("unknown node " + node.to_string());
  }
  return (ordinal << 33) |
         (static_cast<std::uint64_t>(node.kind) << 32) |
         static_cast<std::uint32_t>(node.level);
}

Gf2Matrix adjacency(const LayeredNetwork& net, const std::vector<NodeId>& tx,
                    const std::vector<NodeId>& rx) {
  std::vector<Label> row_labels, col_labels;
  for (const auto& x : tx) {
    require_node(net, x, NodeKind::kTransmitting);
    row_labels.push_back(node_label(net, x));
  }
  for (const auto& y : rx) {
    require_node(net, y, NodeKind::kReceiving);
    col_labels.push_back(node_label(net, y));
  }
  Gf2Matrix m(std::move(row_labels), std::move(col_labels));

  std::map<NodeId, std::size_t> row_index, col_index;
  for (std::size_t i = 0; i < tx.size(); ++i) row_index.emplace(tx[i], i);
  for (std::size_t j = 0; j < rx.size(); ++j) col_index.emplace(rx[j], j);
  for (const auto& e : net.edges) {
    auto r = row_index.find(e.from);
    if (r == row_index.end()) continue;
    auto c = col_index.find(e.to);
    if (c == col_index.end()) continue;
    m.set(r->second, c->second);
  }
  return m;
}

Gf2Matrix edge_adjacency(const LayeredNetwork& net,
                         const std::vector<Edge>& edges) {
  std::vector<NodeId> tx, rx;
  for (const auto& e : edges) {
    if (std::find(tx.begin(), tx.end(), e.from) == tx.end()) {
      tx.push_back(e.from);
    }
    if (std::find(rx.begin(), rx.end(), e.to) == rx.end()) rx.push_back(e.to);
  }
  return adjacency(net, tx, rx);
}

std::vector<Edge> layer_cut_edges(const LayeredNetwork& net, int i) {
  if (i < 0 || i > net.layers - 2) {
    throw ContractViolation("layer cut " + std::to_string(i) +
                            " outside [0, " + std::to_string(net.layers - 2) +
                            "]");
  }
  std::vector<Edge> out;
  for (const auto& e : net.edges) {
    const SuperNode* s = net.find(e.from.super_node);
    if (s != nullptr && s->layer == i) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int levels_from_snr(double snr) {
  if (!(snr > 1.0)) {
    throw DomainError("snr must exceed 1 for a link with nonzero levels");
  }
  return static_cast<int>(std::ceil(0.5 * std::log2(snr)));
}

NetworkBuilder& NetworkBuilder::supernode(std::string id, int layer,
                                          int tx_levels, int rx_levels) {
  net_.supernodes.push_back({std::move(id), layer, tx_levels, rx_levels});
  return *this;
}

NetworkBuilder& NetworkBuilder::edge(const std::string& from, int from_level,
                                     const std::string& to, int to_level) {
  net_.edges.push_back({tx(from, from_level), rx(to, to_level)});
  return *this;
}

NetworkBuilder& NetworkBuilder::shift_link(const std::string& from,
                                           const std::string& to, int gain) {
  const SuperNode& f = net_.at(from);
  const SuperNode& t = net_.at(to);
  const int n = std::min({gain, f.tx_levels, t.rx_levels});
  for (int i = 0; i < n; ++i) edge(from, i, to, i);
  return *this;
}

LayeredNetwork NetworkBuilder::build() const {
  LayeredNetwork out = net_.canonical();
  for (const auto& s : out.supernodes) {
    if (s.layer == 0 && out.source.empty()) out.source = s.id;
    if (s.layer == out.layers - 1 && out.destination.empty()) {
      out.destination = s.id;
    }
  }
  return out;
}

LayeredNetwork point_to_point(int levels, int gain) {
  return NetworkBuilder(2)
      .supernode("S", 0, levels, 0)
      .supernode("D", 1, 0, levels)
      .shift_link("S", "D", gain)
      .build();
}

namespace {

// Raw engine output only; the standard distributions are not portable.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  int between(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

LayeredNetwork gen_random(const RandomNetworkParams& p) {
  if (p.layers < 2 || p.max_supernodes_per_layer < 1 || p.max_levels < 1 ||
      !(p.edge_density >= 0.0 && p.edge_density <= 1.0)) {
    throw ContractViolation("gen_random: parameters out of range");
  }
  PortableRng rng(p.seed);
  NetworkBuilder b(p.layers);
  std::vector<std::vector<std::string>> layer_ids(p.layers);

  b.supernode("S", 0, rng.between(1, p.max_levels), 0);
  layer_ids[0].push_back("S");
  for (int layer = 1; layer + 1 < p.layers; ++layer) {
    const int count = rng.between(1, p.max_supernodes_per_layer);
    for (int j = 0; j < count; ++j) {
      std::string id = "R" + std::to_string(layer) + "." + std::to_string(j);
      const int rx_levels = rng.between(1, p.max_levels);
      const int tx_levels = rng.between(1, p.max_levels);
      b.supernode(id, layer, tx_levels, rx_levels);
      layer_ids[layer].push_back(std::move(id));
    }
  }
  b.supernode("D", p.layers - 1, 0, rng.between(1, p.max_levels));
  layer_ids[p.layers - 1].push_back("D");

  const LayeredNetwork shape = b.build();
  for (int layer = 0; layer + 1 < p.layers; ++layer) {
    for (const auto& from : layer_ids[layer]) {
      const SuperNode& f = shape.at(from);
      for (int xl = 0; xl < f.tx_levels; ++xl) {
        for (const auto& to : layer_ids[layer + 1]) {
          const SuperNode& t = shape.at(to);
          for (int yl = 0; yl < t.rx_levels; ++yl) {
            if (rng.unit() < p.edge_density) b.edge(from, xl, to, yl);
          }
        }
      }
    }
  }
  return b.build();
}

}  // namespace detcap
