#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "detcap/network.hpp"

namespace detcap {

enum class TxId : std::uint32_t {};
enum class RxId : std::uint32_t {};
enum class SuperId : std::uint32_t {};

constexpr std::size_t idx(TxId v) { return static_cast<std::size_t>(v); }
constexpr std::size_t idx(RxId v) { return static_cast<std::size_t>(v); }
constexpr std::size_t idx(SuperId v) { return static_cast<std::size_t>(v); }

// Dense integer view of a validated network. Super nodes are numbered in
// lexicographic id order and levels are contiguous within a super node, so
// index order is (super node id, level) order everywhere.
class IndexedNetwork {
 public:
  struct Super {
    std::string id;
    int layer = 0;
    std::uint32_t tx_begin = 0;
    std::uint32_t tx_count = 0;
    std::uint32_t rx_begin = 0;
    std::uint32_t rx_count = 0;
  };

  // Throws ContractViolation unless validate(net) is empty.
  explicit IndexedNetwork(const LayeredNetwork& net);

  const LayeredNetwork& network() const { return net_; }
  int layers() const { return net_.layers; }
  SuperId source() const { return source_; }
  SuperId destination() const { return destination_; }

  std::size_t super_count() const { return supers_.size(); }
  std::size_t tx_count() const { return tx_super_.size(); }
  std::size_t rx_count() const { return rx_super_.size(); }

  const Super& super(SuperId s) const { return supers_[idx(s)]; }
  SuperId super_of(TxId x) const { return tx_super_[idx(x)]; }
  SuperId super_of(RxId y) const { return rx_super_[idx(y)]; }
  int layer_of(TxId x) const { return super(super_of(x)).layer; }
  int layer_of(RxId y) const { return super(super_of(y)).layer; }
  int level_of(TxId x) const {
    return static_cast<int>(idx(x) - super(super_of(x)).tx_begin);
  }
  int level_of(RxId y) const {
    return static_cast<int>(idx(y) - super(super_of(y)).rx_begin);
  }

  // Out-neighbours of x, ascending.
  std::span<const RxId> out(TxId x) const { return out_[idx(x)]; }
  bool has_edge(TxId x, RxId y) const;

  // Transmitting levels with at least one outgoing edge.
  std::size_t transmitting_node_count() const { return vx_size_; }

  SuperId super_id(const std::string& id) const;  // throws if unknown
  TxId tx_id(const NodeId& node) const;           // throws if unknown
  RxId rx_id(const NodeId& node) const;
  NodeId node(TxId x) const;
  NodeId node(RxId y) const;
  Edge edge(TxId x, RxId y) const { return {node(x), node(y)}; }

 private:
  LayeredNetwork net_;
  std::vector<Super> supers_;
  std::vector<SuperId> tx_super_;
  std::vector<SuperId> rx_super_;
  std::vector<std::vector<RxId>> out_;
  SuperId source_{};
  SuperId destination_{};
  std::size_t vx_size_ = 0;
};

}  // namespace detcap
