#include "detcap/indexed_network.hpp"

#include <algorithm>

#include "detcap/errors.hpp"
#include "detcap/paths.hpp"

namespace detcap {

std::string to_string(const Path& path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) s += ", ";
    s += path[i].to_string();
  }
  return "[" + s + "]";
}

IndexedNetwork::IndexedNetwork(const LayeredNetwork& net)
    : net_(net.canonical()) {
  require_valid(net_);

  std::vector<const SuperNode*> order;
  for (const auto& s : net_.supernodes) order.push_back(&s);
  std::sort(order.begin(), order.end(),
            [](const SuperNode* a, const SuperNode* b) { return a->id < b->id; });

  for (const SuperNode* s : order) {
    Super info;
    info.id = s->id;
    info.layer = s->layer;
    info.tx_begin = static_cast<std::uint32_t>(tx_super_.size());
    info.tx_count = static_cast<std::uint32_t>(s->tx_levels);
    info.rx_begin = static_cast<std::uint32_t>(rx_super_.size());
    info.rx_count = static_cast<std::uint32_t>(s->rx_levels);
    const auto id = static_cast<SuperId>(supers_.size());
    tx_super_.insert(tx_super_.end(), info.tx_count, id);
    rx_super_.insert(rx_super_.end(), info.rx_count, id);
    if (s->id == net_.source) source_ = id;
    if (s->id == net_.destination) destination_ = id;
    supers_.push_back(std::move(info));
  }

  out_.resize(tx_super_.size());
  for (const auto& e : net_.edges) {
    out_[idx(tx_id(e.from))].push_back(rx_id(e.to));
  }
  for (auto& targets : out_) {
    std::sort(targets.begin(), targets.end());
    if (!targets.empty()) ++vx_size_;
  }
}

bool IndexedNetwork::has_edge(TxId x, RxId y) const {
  const auto& targets = out_[idx(x)];
  return std::binary_search(targets.begin(), targets.end(), y);
}

SuperId IndexedNetwork::super_id(const std::string& id) const {
  auto it = std::lower_bound(
      supers_.begin(), supers_.end(), id,
      [](const Super& s, const std::string& key) { return s.id < key; });
  if (it == supers_.end() || it->id != id) {
    throw ContractViolation("unknown super node '" + id + "'");
  }
  return static_cast<SuperId>(it - supers_.begin());
}

TxId IndexedNetwork::tx_id(const NodeId& node) const {
  const Super& s = super(super_id(node.super_node));
  if (node.kind != NodeKind::kTransmitting || node.level < 0 ||
      static_cast<std::uint32_t>(node.level) >= s.tx_count) {
    throw ContractViolation("unknown transmitting node " + node.to_string());
  }
  return static_cast<TxId>(s.tx_begin + node.level);
}

RxId IndexedNetwork::rx_id(const NodeId& node) const {
  const Super& s = super(super_id(node.super_node));
  if (node.kind != NodeKind::kReceiving || node.level < 0 ||
      static_cast<std::uint32_t>(node.level) >= s.rx_count) {
    throw ContractViolation("unknown receiving node " + node.to_string());
  }
  return static_cast<RxId>(s.rx_begin + node.level);
}

NodeId IndexedNetwork::node(TxId x) const {
  return tx(super(super_of(x)).id, level_of(x));
}

NodeId IndexedNetwork::node(RxId y) const {
  return rx(super(super_of(y)).id, level_of(y));
}

}  // namespace detcap
