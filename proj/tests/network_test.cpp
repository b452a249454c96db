#include <gtest/gtest.h>

#include <algorithm>

#include "detcap/errors.hpp"
#include "detcap/gf2.hpp"
#include "detcap/network.hpp"
#include "detcap/network_io.hpp"
#include "support.hpp"

namespace detcap {
namespace {

using testing::dense_adjacency;
using testing::naive_rank;

bool has_violation(const LayeredNetwork& net, const std::string& needle) {
  for (const auto& v : validate(net)) {
    if (v.find(needle) != std::string::npos) return true;
  }
  return false;
}

TEST(Validate, TwoLayerSingleEdgeIsValid) {
  EXPECT_TRUE(validate(testing::single_edge()).empty());
}

TEST(Validate, ReversedEdgeHasWrongKinds) {
  LayeredNetwork net = testing::single_edge();
  net.edges = {{rx("D", 0), tx("S", 0)}};
  EXPECT_TRUE(has_violation(net, "edge endpoints have wrong kinds"));
}

TEST(Validate, LayerSkippingEdge) {
  LayeredNetwork net = testing::identity_chain(1);
  net.edges.push_back({tx("S", 0), rx("D", 0)});
  EXPECT_TRUE(has_violation(net, "non-consecutive layers"));
}

TEST(Validate, ReportsEveryViolation) {
  LayeredNetwork net = testing::identity_chain(2);
  net.supernodes.push_back({"S2", 0, 1, 0});
  net.edges.push_back(net.edges.front());
  net.edges.push_back({tx("A", 0), rx("Q", 0)});
  net.edges.push_back({tx("A", 0), rx("D", 7)});
  EXPECT_TRUE(has_violation(net, "multiple super nodes in source layer"));
  EXPECT_TRUE(has_violation(net, "duplicate edge"));
  EXPECT_TRUE(has_violation(net, "unknown super node"));
  EXPECT_TRUE(has_violation(net, "level out of range"));
  EXPECT_THROW(require_valid(net), ContractViolation);
}

TEST(Validate, SourceAndDestinationShape) {
  LayeredNetwork net = testing::single_edge();
  net.supernodes[0].rx_levels = 1;
  net.supernodes[1].tx_levels = 2;
  EXPECT_TRUE(has_violation(net, "source must have no receiving levels"));
  EXPECT_TRUE(has_violation(net, "destination must have no transmitting levels"));
}

TEST(Validate, EmptyIntermediateLayer) {
  LayeredNetwork net = testing::single_edge();
  net.layers = 3;
  net.supernodes[1].layer = 2;
  net.edges.clear();
  EXPECT_TRUE(has_violation(net, "layer 1 has no super nodes"));
}

TEST(Validate, IsolatedLevelsAndUnequalRelayCountsAreFine) {
  LayeredNetwork net = testing::identity_chain(2);
  for (auto& s : net.supernodes) {
    if (s.id == "A") s.tx_levels = 4;
  }
  EXPECT_TRUE(validate(net).empty());
}

TEST(Adjacency, SingleEdge) {
  const auto net = testing::single_edge();
  EXPECT_EQ(adjacency(net, {tx("S", 0)}, {rx("D", 0)}).to_string(),
            Gf2Matrix::from_rows({"1"}).to_string());
}

TEST(Adjacency, PointToPointHasRankFour) {
  const auto net = testing::five_level_link();
  std::vector<NodeId> txs, rxs;
  for (int i = 0; i < 5; ++i) {
    txs.push_back(tx("S", i));
    rxs.push_back(rx("D", i));
  }
  const Gf2Matrix m = adjacency(net, txs, rxs);
  EXPECT_EQ(m.rows(), 5u);
  EXPECT_EQ(m.cols(), 5u);
  EXPECT_EQ(rank(m), 4u);
}

TEST(Adjacency, NoConnectingEdgesGivesZero) {
  const auto net = testing::identity_chain(2);
  const Gf2Matrix m = adjacency(net, {tx("S", 0)}, {rx("A", 1)});
  EXPECT_EQ(rank(m), 0u);
  EXPECT_THROW(adjacency(net, {tx("S", 9)}, {rx("A", 0)}), ContractViolation);
  EXPECT_THROW(adjacency(net, {rx("A", 0)}, {rx("A", 0)}), ContractViolation);
}

TEST(Adjacency, MatchesEdgeListOnRandomNetworks) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto net = gen_random({4, 3, 3, 0.5, seed});
    for (int i = 0; i + 1 < net.layers; ++i) {
      std::vector<NodeId> txs, rxs;
      for (const auto& s : net.supernodes) {
        for (int l = 0; l < s.tx_levels && s.layer == i; ++l) {
          txs.push_back(tx(s.id, l));
        }
        for (int l = 0; l < s.rx_levels && s.layer == i + 1; ++l) {
          rxs.push_back(rx(s.id, l));
        }
      }
      const Gf2Matrix full = adjacency(net, txs, rxs);
      ASSERT_EQ(static_cast<int>(rank(full)),
                naive_rank(dense_adjacency(net, txs, rxs)));
      // Restricting to the nodes touched by layer-i edges keeps the rank.
      std::vector<NodeId> touched_tx, touched_rx;
      for (const auto& e : layer_cut_edges(net, i)) {
        touched_tx.push_back(e.from);
        touched_rx.push_back(e.to);
      }
      std::sort(touched_tx.begin(), touched_tx.end());
      touched_tx.erase(std::unique(touched_tx.begin(), touched_tx.end()),
                       touched_tx.end());
      std::sort(touched_rx.begin(), touched_rx.end());
      touched_rx.erase(std::unique(touched_rx.begin(), touched_rx.end()),
                       touched_rx.end());
      EXPECT_EQ(rank(full), rank(adjacency(net, touched_tx, touched_rx)));
    }
  }
}

TEST(LayerCutEdges, PointToPointHasFourPairs) {
  const auto edges = layer_cut_edges(testing::five_level_link(), 0);
  ASSERT_EQ(edges.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(edges[i].from, tx("S", i));
    EXPECT_EQ(edges[i].to, rx("D", i));
  }
}

TEST(LayerCutEdges, ChainMiddleLayerAndBounds) {
  const auto net = testing::identity_chain(2);
  const auto edges = layer_cut_edges(net, 1);
  ASSERT_EQ(edges.size(), 2u);
  for (const auto& e : edges) EXPECT_EQ(e.from.super_node, "A");
  EXPECT_TRUE(layer_cut_edges(testing::no_edges(), 0).empty());
  EXPECT_THROW(layer_cut_edges(net, 2), ContractViolation);
  EXPECT_THROW(layer_cut_edges(net, -1), ContractViolation);
}

TEST(LevelsFromSnr, Formula) {
  EXPECT_EQ(levels_from_snr(256.0), 4);
  EXPECT_EQ(levels_from_snr(2.0), 1);
  EXPECT_EQ(levels_from_snr(100.0), 4);
  EXPECT_THROW(levels_from_snr(1.0), DomainError);
  EXPECT_THROW(levels_from_snr(0.5), DomainError);
}

TEST(Builder, ShiftLinkReproducesPointToPoint) {
  EXPECT_EQ(point_to_point(5, 4), testing::five_level_link().canonical());
  const auto net = NetworkBuilder(2)
                       .supernode("S", 0, 3, 0)
                       .supernode("D", 1, 0, 2)
                       .shift_link("S", "D", 5)
                       .build();
  EXPECT_EQ(net.edges.size(), 2u);
  EXPECT_EQ(net.source, "S");
  EXPECT_EQ(net.destination, "D");
}

TEST(GenRandom, ZeroDensityHasNoEdges) {
  const auto net = gen_random({4, 3, 3, 0.0, 1});
  EXPECT_TRUE(net.edges.empty());
  EXPECT_TRUE(validate(net).empty());
}

TEST(GenRandom, FullDensityIsCompleteBipartite) {
  const auto net = gen_random({3, 2, 2, 1.0, 4});
  std::size_t expected = 0;
  for (const auto& a : net.supernodes) {
    for (const auto& b : net.supernodes) {
      if (b.layer == a.layer + 1) {
        expected += static_cast<std::size_t>(a.tx_levels * b.rx_levels);
      }
    }
  }
  EXPECT_EQ(net.edges.size(), expected);
}

TEST(GenRandom, ValidAndDeterministicAcrossParameters) {
  for (int layers = 2; layers <= 6; ++layers) {
    for (double d : {0.0, 0.2, 0.5, 0.8, 1.0}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RandomNetworkParams p{layers, 3, 3, d, seed};
        const auto a = gen_random(p);
        ASSERT_TRUE(validate(a).empty()) << serialize_network(a);
        EXPECT_EQ(serialize_network(a), serialize_network(gen_random(p)));
      }
    }
  }
  EXPECT_THROW(gen_random({1, 1, 1, 0.5, 0}), ContractViolation);
  EXPECT_THROW(gen_random({3, 1, 1, 1.5, 0}), ContractViolation);
}

TEST(Format, MinimalDocument) {
  const auto net = parse_network(
      R"({"layers": 2,
          "supernodes": [{"id": "S", "layer": 0, "tx": 1, "rx": 0},
                         {"id": "D", "layer": 1, "tx": 0, "rx": 1}],
          "edges": [{"from": ["S", 0], "to": ["D", 0]}]})");
  EXPECT_EQ(net, testing::single_edge().canonical());
  EXPECT_TRUE(validate(net).empty());
}

TEST(Format, UnknownReferenceIsNamed) {
  try {
    parse_network(
        R"({"layers": 2,
            "supernodes": [{"id": "S", "layer": 0, "tx": 1, "rx": 0},
                           {"id": "D", "layer": 1, "tx": 0, "rx": 1}],
            "edges": [{"from": ["S", 0], "to": ["Q", 0]}]})");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'Q'"), std::string::npos) << e.what();
  }
}

TEST(Format, SyntaxErrorCarriesPosition) {
  try {
    parse_network("{\"layers\": 2,\n  \"supernodes\": [,]}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(Format, MistypedFields) {
  EXPECT_THROW(parse_network("[]"), ParseError);
  EXPECT_THROW(parse_network(R"({"layers": "2", "supernodes": [], "edges": []})"),
               ParseError);
  EXPECT_THROW(parse_network(R"({"layers": 2, "supernodes": []})"), ParseError);
}

TEST(Format, SerializationIsCanonical) {
  LayeredNetwork shuffled = testing::identity_chain(2);
  std::reverse(shuffled.supernodes.begin(), shuffled.supernodes.end());
  std::reverse(shuffled.edges.begin(), shuffled.edges.end());
  EXPECT_EQ(serialize_network(shuffled),
            serialize_network(testing::identity_chain(2)));
  const std::string text = serialize_network(shuffled);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.find("\t"), std::string::npos);
}

TEST(Format, RoundTripOnGeneratedNetworks) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto net = gen_random({2 + static_cast<int>(seed % 5), 3, 3,
                                 0.1 + 0.2 * static_cast<double>(seed % 5),
                                 seed});
    const std::string text = serialize_network(net);
    const LayeredNetwork back = parse_network(text);
    ASSERT_TRUE(structurally_equal(back, net));
    ASSERT_EQ(serialize_network(back), text);
  }
}

}  // namespace
}  // namespace detcap
