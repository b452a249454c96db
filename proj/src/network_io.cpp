#include "detcap/network_io.hpp"

#include <algorithm>
#include <set>

#include "detcap/errors.hpp"
#include "json_util.hpp"

namespace detcap {

namespace json_util {

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t pos = std::min<std::size_t>(
        e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("syntax error at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " +
                         e.what(),
                     line, column);
  }
}

void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what, 0, 0);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  const auto value = v.get<long long>();
  if (value < -(1LL << 30) || value > (1LL << 30)) {
    fail(where, "integer out of range");
  }
  return static_cast<int>(value);
}

std::string as_string(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

Json level_ref(const NodeId& node) {
  return Json::array({node.super_node, node.level});
}

Json edge_to_json(const Edge& e) {
  Json j = Json::object();
  j["from"] = level_ref(e.from);
  j["to"] = level_ref(e.to);
  return j;
}

namespace {

NodeId level_from_json(const Json& v, NodeKind kind, const LayeredNetwork& net,
                       const std::string& where) {
  if (!v.is_array() || v.size() != 2) {
    fail(where, "expected [super_node, level]");
  }
  NodeId node{as_string(v[0], where + "[0]"), kind, as_int(v[1], where + "[1]")};
  if (net.find(node.super_node) == nullptr) {
    fail(where, "unknown super node '" + node.super_node + "'");
  }
  return node;
}

}  // namespace

Edge edge_from_json(const Json& v, const LayeredNetwork& net,
                    const std::string& where) {
  return {level_from_json(member(v, "from", where), NodeKind::kTransmitting,
                          net, where + ".from"),
          level_from_json(member(v, "to", where), NodeKind::kReceiving, net,
                          where + ".to")};
}

Json network_to_json(const LayeredNetwork& net) {
  const LayeredNetwork c = net.canonical();
  Json doc = Json::object();
  doc["layers"] = c.layers;
  Json supers = Json::array();
  for (const auto& s : c.supernodes) {
    Json j = Json::object();
    j["id"] = s.id;
    j["layer"] = s.layer;
    j["tx"] = s.tx_levels;
    j["rx"] = s.rx_levels;
    supers.push_back(std::move(j));
  }
  doc["supernodes"] = std::move(supers);
  Json edges = Json::array();
  for (const auto& e : c.edges) edges.push_back(edge_to_json(e));
  doc["edges"] = std::move(edges);
  return doc;
}

LayeredNetwork network_from_json(const Json& doc) {
  LayeredNetwork net;
  net.layers = as_int(member(doc, "layers", "$"), "$.layers");

  const Json& supers = member(doc, "supernodes", "$");
  if (!supers.is_array()) fail("$.supernodes", "expected an array");
  for (std::size_t i = 0; i < supers.size(); ++i) {
    const std::string where = "$.supernodes[" + std::to_string(i) + "]";
    const Json& s = supers[i];
    net.supernodes.push_back(
        {as_string(member(s, "id", where), where + ".id"),
         as_int(member(s, "layer", where), where + ".layer"),
         as_int(member(s, "tx", where), where + ".tx"),
         as_int(member(s, "rx", where), where + ".rx")});
  }

  const Json& edges = member(doc, "edges", "$");
  if (!edges.is_array()) fail("$.edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    net.edges.push_back(
        edge_from_json(edges[i], net, "$.edges[" + std::to_string(i) + "]"));
  }

  net = net.canonical();
  // Unique layer-0 / last-layer nodes become source and destination;
  // anything else is reported by validate().
  for (const auto& s : net.supernodes) {
    if (s.layer == 0 && net.source.empty()) net.source = s.id;
    if (s.layer == net.layers - 1 && net.destination.empty()) {
      net.destination = s.id;
    }
  }
  return net;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace json_util

LayeredNetwork parse_network(const std::string& text) {
  return json_util::network_from_json(json_util::parse_text(text));
}

std::string serialize_network(const LayeredNetwork& net) {
  return json_util::dump(json_util::network_to_json(net));
}

}  // namespace detcap
