#include "detcap/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "detcap/errors.hpp"
#include "detcap/gf2.hpp"

namespace detcap {

namespace {

void require_cut(const LayeredNetwork& net, const Cut& cut) {
  for (const auto& id : cut.omega) {
    if (net.find(id) == nullptr) {
      throw ContractViolation("cut names unknown super node '" + id + "'");
    }
  }
  if (!cut.omega.contains(net.source)) {
    throw ContractViolation("cut must contain the source");
  }
  if (cut.omega.contains(net.destination)) {
    throw ContractViolation("cut must not contain the destination");
  }
}

// Adjacency of the crossing edges, rows/columns in first-seen order.
Gf2Matrix crossing_adjacency(const std::vector<const Edge*>& edges) {
  std::map<NodeId, std::size_t> rows, cols;
  for (const Edge* e : edges) {
    rows.emplace(e->from, rows.size());
    cols.emplace(e->to, cols.size());
  }
  Gf2Matrix m(rows.size(), cols.size());
  for (const Edge* e : edges) m.set(rows.at(e->from), cols.at(e->to));
  return m;
}

std::vector<std::vector<const Edge*>> crossing_by_layer(
    const LayeredNetwork& net, const std::set<std::string>& omega) {
  std::map<std::string, int> layer_of;
  for (const auto& s : net.supernodes) layer_of.emplace(s.id, s.layer);
  std::vector<std::vector<const Edge*>> out(std::max(net.layers - 1, 0));
  for (const auto& e : net.edges) {
    if (omega.contains(e.from.super_node) && !omega.contains(e.to.super_node)) {
      out[layer_of.at(e.from.super_node)].push_back(&e);
    }
  }
  return out;
}

int layered_cut_rank(const LayeredNetwork& net,
                     const std::set<std::string>& omega) {
  int total = 0;
  for (const auto& edges : crossing_by_layer(net, omega)) {
    total += static_cast<int>(rank(crossing_adjacency(edges)));
  }
  return total;
}

}  // namespace

int cut_rank(const LayeredNetwork& net, const Cut& cut) {
  require_valid(net);
  require_cut(net, cut);
  return layered_cut_rank(net, cut.omega);
}

int cut_rank_block(const LayeredNetwork& net, const Cut& cut) {
  require_valid(net);
  require_cut(net, cut);
  std::vector<const Edge*> all;
  for (const auto& edges : crossing_by_layer(net, cut.omega)) {
    all.insert(all.end(), edges.begin(), edges.end());
  }
  return static_cast<int>(rank(crossing_adjacency(all)));
}

MinCut min_cut_capacity(const LayeredNetwork& net, int max_intermediate) {
  require_valid(net);
  std::vector<std::string> relays;
  for (const auto& s : net.supernodes) {
    if (s.id != net.source && s.id != net.destination) relays.push_back(s.id);
  }
  std::sort(relays.begin(), relays.end());
  if (static_cast<int>(relays.size()) > max_intermediate) {
    throw SizeError("min-cut enumeration over " +
                    std::to_string(relays.size()) +
                    " intermediate super nodes exceeds the bound of " +
                    std::to_string(max_intermediate) +
                    "; use the path-augmentation solver alone");
  }

  MinCut best;
  bool have = false;
  const std::uint64_t count = std::uint64_t{1} << relays.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::set<std::string> omega{net.source};
    for (std::size_t i = 0; i < relays.size(); ++i) {
      if ((mask >> i) & 1u) omega.insert(relays[i]);
    }
    const int value = layered_cut_rank(net, omega);
    if (!have || value < best.capacity) {
      best.capacity = value;
      best.argmin.omega = std::move(omega);
      have = true;
    }
  }
  return best;
}

namespace {

bool layers_independent(const LayeredNetwork& net,
                        const std::vector<const Path*>& paths) {
  if (paths.empty()) return true;
  const std::size_t hops = static_cast<std::size_t>(net.layers - 1);
  for (std::size_t i = 0; i < hops; ++i) {
    std::vector<NodeId> tx, rx;
    for (const Path* p : paths) {
      tx.push_back((*p)[i].from);
      rx.push_back((*p)[i].to);
    }
    std::sort(tx.begin(), tx.end());
    std::sort(rx.begin(), rx.end());
    if (std::adjacent_find(tx.begin(), tx.end()) != tx.end() ||
        std::adjacent_find(rx.begin(), rx.end()) != rx.end()) {
      return false;
    }
    if (rank(adjacency(net, tx, rx)) != paths.size()) return false;
  }
  return true;
}

bool is_sd_path(const LayeredNetwork& net, const Path& p) {
  if (p.size() != static_cast<std::size_t>(net.layers - 1)) return false;
  std::string here = net.source;
  for (const auto& e : p) {
    if (e.from.super_node != here) return false;
    here = e.to.super_node;
  }
  return here == net.destination;
}

}  // namespace

bool verify_paths_independent(const LayeredNetwork& net, const PathSet& paths) {
  require_valid(net);
  const std::set<Edge> edges(net.edges.begin(), net.edges.end());
  for (const auto& p : paths.paths) {
    for (const auto& e : p) {
      if (!edges.contains(e)) {
        throw ContractViolation("path uses edge " + e.to_string() +
                                " which is not in the network");
      }
    }
  }
  std::vector<const Path*> ptrs;
  for (const auto& p : paths.paths) {
    if (!is_sd_path(net, p)) return false;
    ptrs.push_back(&p);
  }
  return layers_independent(net, ptrs);
}

std::vector<Path> enumerate_paths(const LayeredNetwork& net,
                                  std::size_t limit) {
  require_valid(net);
  std::map<std::string, std::vector<const Edge*>> out_edges;
  std::vector<Edge> sorted = net.edges;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& e : sorted) out_edges[e.from.super_node].push_back(&e);

  std::vector<Path> result;
  Path current;
  // Iterative DFS: stack of (super node, next edge index).
  std::vector<std::pair<std::string, std::size_t>> stack{{net.source, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (node == net.destination) {
      result.push_back(current);
      if (result.size() > limit) {
        throw SizeError("more than " + std::to_string(limit) + " S-D paths");
      }
      stack.pop_back();
      if (!current.empty()) current.pop_back();
      continue;
    }
    const auto& candidates = out_edges[node];
    if (next == candidates.size()) {
      stack.pop_back();
      if (!current.empty()) current.pop_back();
      continue;
    }
    const Edge* e = candidates[next++];
    current.push_back(*e);
    stack.emplace_back(e->to.super_node, 0);
  }
  return result;
}

int max_independent_paths_bruteforce(const LayeredNetwork& net,
                                     std::size_t max_paths) {
  const std::vector<Path> paths = enumerate_paths(net, max_paths);
  const std::size_t n = paths.size();
  for (std::size_t k = n; k >= 1; --k) {
    // Walk all k-subsets in lexicographic order.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<const Path*> chosen;
      for (std::size_t i : pick) chosen.push_back(&paths[i]);
      if (layers_independent(net, chosen)) return static_cast<int>(k);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return 0;
}

}  // namespace detcap
