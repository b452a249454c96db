#pragma once

// Test-side helpers. naive_rank deliberately avoids the library's bit-packed
// elimination so it can serve as an independent reference.

#include <string>
#include <utility>
#include <vector>

#include "detcap/network.hpp"

namespace detcap::testing {

using Dense = std::vector<std::vector<int>>;

inline int naive_rank(Dense m) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] & 1) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = 0; i < rows; ++i) {
      if (i != r && (m[i][c] & 1)) {
        for (int j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
      }
    }
    ++r;
  }
  return r;
}

// Edge-list adjacency, read straight from net.edges.
inline Dense dense_adjacency(const LayeredNetwork& net,
                             const std::vector<NodeId>& tx,
                             const std::vector<NodeId>& rx) {
  Dense m(tx.size(), std::vector<int>(rx.size(), 0));
  for (const auto& e : net.edges) {
    for (std::size_t i = 0; i < tx.size(); ++i) {
      for (std::size_t j = 0; j < rx.size(); ++j) {
        if (e.from == tx[i] && e.to == rx[j]) m[i][j] = 1;
      }
    }
  }
  return m;
}

// Five levels on each end, the first four joined level to level. Written out
// edge by edge rather than through the builder.
inline LayeredNetwork five_level_link() {
  LayeredNetwork net;
  net.layers = 2;
  net.source = "S";
  net.destination = "D";
  net.supernodes = {{"S", 0, 5, 0}, {"D", 1, 0, 5}};
  for (int i = 0; i < 4; ++i) net.edges.push_back({tx("S", i), rx("D", i)});
  return net;
}

// S -> A -> D with k x k identity links.
inline LayeredNetwork identity_chain(int k) {
  LayeredNetwork net;
  net.layers = 3;
  net.source = "S";
  net.destination = "D";
  net.supernodes = {{"S", 0, k, 0}, {"A", 1, k, k}, {"D", 2, 0, k}};
  for (int i = 0; i < k; ++i) {
    net.edges.push_back({tx("S", i), rx("A", i)});
    net.edges.push_back({tx("A", i), rx("D", i)});
  }
  return net.canonical();
}

inline LayeredNetwork single_edge() {
  LayeredNetwork net;
  net.layers = 2;
  net.source = "S";
  net.destination = "D";
  net.supernodes = {{"S", 0, 1, 0}, {"D", 1, 0, 1}};
  net.edges = {{tx("S", 0), rx("D", 0)}};
  return net;
}

inline LayeredNetwork no_edges() {
  LayeredNetwork net = single_edge();
  net.edges.clear();
  return net;
}

}  // namespace detcap::testing
