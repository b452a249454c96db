#pragma once

// Rate-K one-bit relay scheme built from K independent S-D paths. Every
// relay forwards each bit it receives on a used receiving level to one used
// transmitting level; all other transmitting levels stay silent.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "detcap/gf2.hpp"
#include "detcap/network.hpp"
#include "detcap/paths.hpp"

namespace detcap {

struct TransmissionScheme {
  int k = 0;
  std::vector<Path> paths;
  // inter_layer[i]: the K edges crossing layer cut i, in path order.
  std::vector<std::vector<Edge>> inter_layer;
  // Relay super node -> (rx level, tx level) pairs sorted by rx level.
  std::map<std::string, std::vector<std::pair<int, int>>> relay_maps;

  bool operator==(const TransmissionScheme&) const = default;
};

// Violated scheme invariants (bijective relay maps over the levels the paths
// use, full-rank layer cuts, consistent k); empty when the scheme is sound.
std::vector<std::string> validate_scheme(const LayeredNetwork& net,
                                         const TransmissionScheme& s);

// Path-following relay maps: the receiving level of path p is forwarded on
// path p's transmitting level. Throws ContractViolation unless the paths are
// complete and independent.
TransmissionScheme extract_scheme(const LayeredNetwork& net,
                                  const PathSet& paths);

// Message bits ride on S's used transmitting levels in ascending level order;
// output bits are D's used receiving levels in ascending order. Row vector
// convention: received = message * transfer_matrix.
Gf2Matrix transfer_matrix(const LayeredNetwork& net,
                          const TransmissionScheme& s);

// Level-by-level simulation with broadcast on every edge and XOR at every
// receiving level. Throws ContractViolation on a length mismatch.
BitVector simulate(const LayeredNetwork& net, const TransmissionScheme& s,
                   const BitVector& message);

// Inverts the transfer matrix. Throws ContractViolation when it is singular
// or the lengths disagree.
BitVector decode(const TransmissionScheme& s, const BitVector& received,
                 const Gf2Matrix& tm);

struct SchemeDocument {
  LayeredNetwork network;
  TransmissionScheme scheme;
};

// Network document plus "k", "paths" and "relay_maps". Parsing throws
// ParseError on malformed input; scheme invariants are left to
// validate_scheme.
std::string serialize_scheme(const LayeredNetwork& net,
                             const TransmissionScheme& s);
SchemeDocument parse_scheme(const std::string& text);

}  // namespace detcap
