#pragma once

// JSON helpers shared by the network and scheme readers/writers.

#include <string>

#include "detcap/network.hpp"
#include "json.hpp"

namespace detcap::json_util {

using Json = nlohmann::ordered_json;

// Parses text, turning syntax errors into ParseError with line/column.
Json parse_text(const std::string& text);

// ParseError without a text position, prefixed with the JSON path.
[[noreturn]] void fail(const std::string& where, const std::string& what);

const Json& member(const Json& obj, const char* key, const std::string& where);
int as_int(const Json& v, const std::string& where);
std::string as_string(const Json& v, const std::string& where);

Json level_ref(const NodeId& node);
Json edge_to_json(const Edge& e);
// Checks that both ends name declared super nodes.
Edge edge_from_json(const Json& v, const LayeredNetwork& net,
                    const std::string& where);

Json network_to_json(const LayeredNetwork& net);
LayeredNetwork network_from_json(const Json& doc);

std::string dump(const Json& doc);

}  // namespace detcap::json_util
