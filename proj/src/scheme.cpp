#include "detcap/scheme.hpp"

#include <algorithm>
#include <set>

#include "detcap/errors.hpp"
#include "detcap/oracle.hpp"
#include "json_util.hpp"

namespace detcap {

namespace {

std::vector<std::vector<Edge>> cut_edges(int layers,
                                         const std::vector<Path>& paths) {
  std::vector<std::vector<Edge>> out(std::max(layers - 1, 0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& p : paths) {
      if (i < p.size()) out[i].push_back(p[i]);
    }
  }
  return out;
}

// Levels of super node `id` that the scheme's paths receive on / send from.
void used_levels(const TransmissionScheme& s, const std::string& id,
                 std::set<int>& rx_levels, std::set<int>& tx_levels) {
  for (const auto& p : s.paths) {
    for (const auto& e : p) {
      if (e.to.super_node == id) rx_levels.insert(e.to.level);
      if (e.from.super_node == id) tx_levels.insert(e.from.level);
    }
  }
}

std::vector<NodeId> sorted_unique(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_scheme(const LayeredNetwork& net, const TransmissionScheme& s) {
  const auto problems = validate_scheme(net, s);
  if (problems.empty()) return;
  std::string msg = "invalid scheme:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw ContractViolation(msg);
}

}  // namespace

std::vector<std::string> validate_scheme(const LayeredNetwork& net,
                                         const TransmissionScheme& s) {
  std::vector<std::string> out = validate(net);
  if (!out.empty()) return out;

  if (s.k != static_cast<int>(s.paths.size())) {
    out.push_back("k = " + std::to_string(s.k) + " but there are " +
                  std::to_string(s.paths.size()) + " paths");
  }
  try {
    if (!verify_paths_independent(net, PathSet{s.paths, std::nullopt})) {
      out.push_back("paths are not complete, endpoint-disjoint and independent");
    }
  } catch (const ContractViolation& e) {
    out.push_back(e.what());
  }
  if (!out.empty()) return out;

  if (s.inter_layer != cut_edges(net.layers, s.paths)) {
    out.push_back("inter_layer edges do not match the paths");
  }

  std::set<std::string> relays;
  for (const auto& p : s.paths) {
    for (std::size_t i = 1; i < p.size(); ++i) {
      relays.insert(p[i].from.super_node);
    }
  }
  for (const auto& [id, pairs] : s.relay_maps) {
    if (!relays.contains(id)) {
      out.push_back("relay map for '" + id + "', which no path relays through");
    }
  }
  for (const auto& id : relays) {
    auto it = s.relay_maps.find(id);
    if (it == s.relay_maps.end()) {
      out.push_back("missing relay map for '" + id + "'");
      continue;
    }
    std::set<int> rx_used, tx_used, rx_seen, tx_seen;
    used_levels(s, id, rx_used, tx_used);
    for (const auto& [r, t] : it->second) {
      if (!rx_used.contains(r) || !tx_used.contains(t) ||
          !rx_seen.insert(r).second || !tx_seen.insert(t).second) {
        out.push_back("relay map for '" + id + "' is not a bijection between "
                      "its used receiving and transmitting levels");
        break;
      }
    }
    if (out.empty() && (rx_seen != rx_used || tx_seen != tx_used)) {
      out.push_back("relay map for '" + id + "' does not cover every used level");
    }
  }
  return out;
}

TransmissionScheme extract_scheme(const LayeredNetwork& net,
                                  const PathSet& paths) {
  if (paths.partial) {
    throw ContractViolation("cannot build a scheme from a partial path");
  }
  if (!verify_paths_independent(net, paths)) {
    throw ContractViolation("paths are not complete independent S-D paths");
  }
  TransmissionScheme s;
  s.k = static_cast<int>(paths.paths.size());
  s.paths = paths.paths;
  s.inter_layer = cut_edges(net.layers, s.paths);
  for (const auto& p : s.paths) {
    for (std::size_t i = 1; i < p.size(); ++i) {
      s.relay_maps[p[i].from.super_node].emplace_back(p[i - 1].to.level,
                                                      p[i].from.level);
    }
  }
  for (auto& [id, pairs] : s.relay_maps) std::sort(pairs.begin(), pairs.end());
  return s;
}

Gf2Matrix transfer_matrix(const LayeredNetwork& net,
                          const TransmissionScheme& s) {
  require_scheme(net, s);
  if (s.k == 0) return Gf2Matrix(0, 0);

  std::optional<Gf2Matrix> product;
  std::vector<NodeId> prev_rx;
  for (const auto& edges : s.inter_layer) {
    std::vector<NodeId> tx, rx;
    for (const auto& e : edges) {
      tx.push_back(e.from);
      rx.push_back(e.to);
    }
    tx = sorted_unique(std::move(tx));
    rx = sorted_unique(std::move(rx));
    Gf2Matrix hop = adjacency(net, tx, rx);
    if (product) {
      // Relay permutation from the previous cut's receivers to these senders.
      Gf2Matrix relay(prev_rx.size(), tx.size());
      for (std::size_t r = 0; r < prev_rx.size(); ++r) {
        for (const auto& [rl, tl] : s.relay_maps.at(prev_rx[r].super_node)) {
          if (rl != prev_rx[r].level) continue;
          const NodeId target = detcap::tx(prev_rx[r].super_node, tl);
          const auto c = std::lower_bound(tx.begin(), tx.end(), target);
          relay.set(r, static_cast<std::size_t>(c - tx.begin()));
        }
      }
      product = multiply(multiply(*product, relay), hop);
    } else {
      product = std::move(hop);
    }
    prev_rx = std::move(rx);
  }
  return *product;
}

BitVector simulate(const LayeredNetwork& net, const TransmissionScheme& s,
                   const BitVector& message) {
  require_scheme(net, s);
  if (message.size() != static_cast<std::size_t>(s.k)) {
    throw ContractViolation("message has " + std::to_string(message.size()) +
                            " bits, the scheme carries " +
                            std::to_string(s.k));
  }
  if (s.k == 0) return BitVector(0);

  std::map<NodeId, bool> sending;
  {
    std::vector<NodeId> tx;
    for (const auto& e : s.inter_layer.front()) tx.push_back(e.from);
    tx = sorted_unique(std::move(tx));
    for (std::size_t i = 0; i < tx.size(); ++i) sending[tx[i]] = message.get(i);
  }

  std::map<NodeId, bool> heard;
  for (int layer = 0; layer + 1 < net.layers; ++layer) {
    heard.clear();
    for (const auto& e : net.edges) {
      auto it = sending.find(e.from);
      if (it != sending.end() && it->second) heard[e.to] ^= true;
    }
    if (layer + 2 == net.layers) break;
    sending.clear();
    for (const auto& [id, pairs] : s.relay_maps) {
      if (net.at(id).layer != layer + 1) continue;
      for (const auto& [rl, tl] : pairs) {
        auto it = heard.find(detcap::rx(id, rl));
        sending[detcap::tx(id, tl)] = it != heard.end() && it->second;
      }
    }
  }

  std::vector<NodeId> rx;
  for (const auto& e : s.inter_layer.back()) rx.push_back(e.to);
  rx = sorted_unique(std::move(rx));
  BitVector out(rx.size());
  for (std::size_t i = 0; i < rx.size(); ++i) {
    auto it = heard.find(rx[i]);
    out.set(i, it != heard.end() && it->second);
  }
  return out;
}

BitVector decode(const TransmissionScheme& s, const BitVector& received,
                 const Gf2Matrix& tm) {
  const auto k = static_cast<std::size_t>(s.k);
  if (tm.rows() != k || tm.cols() != k || received.size() != k) {
    throw ContractViolation("decode expects a " + std::to_string(k) + "x" +
                            std::to_string(k) + " matrix and " +
                            std::to_string(k) + " received bits");
  }
  const auto inv = inverse(tm);
  if (!inv) throw ContractViolation("transfer matrix is singular");
  return multiply(received, *inv);
}

std::string serialize_scheme(const LayeredNetwork& net,
                             const TransmissionScheme& s) {
  using json_util::Json;
  Json doc = json_util::network_to_json(net);
  doc["k"] = s.k;
  Json paths = Json::array();
  for (const auto& p : s.paths) {
    Json edges = Json::array();
    for (const auto& e : p) edges.push_back(json_util::edge_to_json(e));
    paths.push_back(std::move(edges));
  }
  doc["paths"] = std::move(paths);
  Json maps = Json::object();
  for (const auto& [id, pairs] : s.relay_maps) {
    Json list = Json::array();
    for (const auto& [r, t] : pairs) list.push_back(Json::array({r, t}));
    maps[id] = std::move(list);
  }
  doc["relay_maps"] = std::move(maps);
  return json_util::dump(doc);
}

SchemeDocument parse_scheme(const std::string& text) {
  using json_util::Json;
  const Json doc = json_util::parse_text(text);
  SchemeDocument out;
  out.network = json_util::network_from_json(doc);
  TransmissionScheme& s = out.scheme;
  s.k = json_util::as_int(json_util::member(doc, "k", "$"), "$.k");

  const Json& paths = json_util::member(doc, "paths", "$");
  if (!paths.is_array()) json_util::fail("$.paths", "expected an array");
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::string where = "$.paths[" + std::to_string(i) + "]";
    if (!paths[i].is_array()) json_util::fail(where, "expected an array");
    Path p;
    for (std::size_t j = 0; j < paths[i].size(); ++j) {
      p.push_back(json_util::edge_from_json(
          paths[i][j], out.network, where + "[" + std::to_string(j) + "]"));
    }
    s.paths.push_back(std::move(p));
  }
  s.inter_layer = cut_edges(out.network.layers, s.paths);

  const Json& maps = json_util::member(doc, "relay_maps", "$");
  if (!maps.is_object()) json_util::fail("$.relay_maps", "expected an object");
  for (const auto& [id, list] : maps.items()) {
    const std::string where = "$.relay_maps." + id;
    if (out.network.find(id) == nullptr) {
      json_util::fail(where, "unknown super node '" + id + "'");
    }
    if (!list.is_array()) json_util::fail(where, "expected an array");
    auto& pairs = s.relay_maps[id];
    for (std::size_t j = 0; j < list.size(); ++j) {
      const std::string at = where + "[" + std::to_string(j) + "]";
      if (!list[j].is_array() || list[j].size() != 2) {
        json_util::fail(at, "expected [rx_level, tx_level]");
      }
      pairs.emplace_back(json_util::as_int(list[j][0], at + "[0]"),
                         json_util::as_int(list[j][1], at + "[1]"));
    }
    std::sort(pairs.begin(), pairs.end());
  }
  return out;
}

}  // namespace detcap
