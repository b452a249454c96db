#pragma once

#include <string>

#include "detcap/network.hpp"

namespace detcap {

// JSON network document:
//   {"layers": L,
//    "supernodes": [{"id": "S", "layer": 0, "tx": 3, "rx": 0}, ...],
//    "edges": [{"from": ["S", 0], "to": ["A", 1]}, ...]}
//
// parse() throws ParseError on malformed JSON (with line/column), on missing
// or mistyped fields, and on edges naming a super node that is not declared.
// Everything else (bad layers, out-of-range levels, ...) is left to
// validate(). The result is in canonical form.
LayeredNetwork parse_network(const std::string& text);

// Byte-stable: canonical order, two-space indentation, trailing newline.
std::string serialize_network(const LayeredNetwork& net);

}  // namespace detcap
