#include <gtest/gtest.h>

#include <algorithm>

#include "detcap/errors.hpp"
#include "detcap/mdfs.hpp"
#include "detcap/oracle.hpp"
#include "support.hpp"

namespace detcap {
namespace {

TEST(CutRank, PointToPointSourceCut) {
  EXPECT_EQ(cut_rank(testing::five_level_link(), {{"S"}}), 4);
}

TEST(CutRank, NoCrossingEdges) {
  EXPECT_EQ(cut_rank(testing::no_edges(), {{"S"}}), 0);
}

TEST(CutRank, IdentityChainCuts) {
  const auto net = testing::identity_chain(2);
  EXPECT_EQ(cut_rank(net, {{"S"}}), 2);
  EXPECT_EQ(cut_rank(net, {{"S", "A"}}), 2);
}

TEST(CutRank, InvalidCuts) {
  const auto net = testing::identity_chain(2);
  EXPECT_THROW(cut_rank(net, {{"A"}}), ContractViolation);
  EXPECT_THROW(cut_rank(net, {{"S", "D"}}), ContractViolation);
  EXPECT_THROW(cut_rank(net, {{"S", "Z"}}), ContractViolation);
}

TEST(CutRank, BlockAndPerLayerAgree) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto net = gen_random({4, 3, 3, 0.5, seed});
    std::vector<std::string> relays;
    for (const auto& s : net.supernodes) {
      if (s.id != net.source && s.id != net.destination) relays.push_back(s.id);
    }
    for (std::uint32_t mask = 0; mask < (1u << relays.size()); ++mask) {
      Cut cut{{net.source}};
      for (std::size_t i = 0; i < relays.size(); ++i) {
        if ((mask >> i) & 1u) cut.omega.insert(relays[i]);
      }
      ASSERT_EQ(cut_rank(net, cut), cut_rank_block(net, cut));
    }
  }
}

TEST(CutRank, SourceCutIsFirstLayerRank) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto net = gen_random({3, 3, 3, 0.5, seed});
    std::vector<NodeId> txs, rxs;
    for (const auto& e : layer_cut_edges(net, 0)) {
      txs.push_back(e.from);
      rxs.push_back(e.to);
    }
    std::sort(txs.begin(), txs.end());
    txs.erase(std::unique(txs.begin(), txs.end()), txs.end());
    std::sort(rxs.begin(), rxs.end());
    rxs.erase(std::unique(rxs.begin(), rxs.end()), rxs.end());
    EXPECT_EQ(cut_rank(net, {{"S"}}),
              testing::naive_rank(testing::dense_adjacency(net, txs, rxs)));
  }
}

TEST(MinCut, Examples) {
  EXPECT_EQ(min_cut_capacity(testing::no_edges()).capacity, 0);
  EXPECT_EQ(min_cut_capacity(testing::five_level_link()).capacity, 4);
  const auto chain = min_cut_capacity(testing::identity_chain(2));
  EXPECT_EQ(chain.capacity, 2);
  EXPECT_TRUE(chain.argmin.omega.contains("S"));
}

TEST(MinCut, ArgminAchievesMinimum) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto net = gen_random({4, 2, 3, 0.5, seed});
    const auto mc = min_cut_capacity(net);
    EXPECT_EQ(cut_rank(net, mc.argmin), mc.capacity);
  }
}

TEST(MinCut, SeededInstanceMatchesSolver) {
  const auto net = gen_random({4, 2, 3, 0.5, 17});
  EXPECT_EQ(min_cut_capacity(net).capacity, unicast_capacity(net).capacity);
}

TEST(MinCut, SizeBound) {
  const auto net = gen_random({6, 3, 1, 0.5, 2});
  EXPECT_THROW(min_cut_capacity(net, 2), SizeError);
}

TEST(VerifyPaths, Basics) {
  const auto net = testing::identity_chain(2);
  EXPECT_TRUE(verify_paths_independent(net, {}));
  const Path p0{{tx("S", 0), rx("A", 0)}, {tx("A", 0), rx("D", 0)}};
  const Path p1{{tx("S", 1), rx("A", 1)}, {tx("A", 1), rx("D", 1)}};
  EXPECT_TRUE(verify_paths_independent(net, {{p0, p1}, std::nullopt}));
  EXPECT_FALSE(verify_paths_independent(net, {{p0, p0}, std::nullopt}));
  const Path bogus{{tx("S", 0), rx("A", 1)}, {tx("A", 1), rx("D", 1)}};
  EXPECT_THROW(verify_paths_independent(net, {{bogus}, std::nullopt}),
               ContractViolation);
  // Not an S-D path: stops one layer short.
  EXPECT_FALSE(verify_paths_independent(net, {{{p0.front()}}, std::nullopt}));
}

TEST(VerifyPaths, SharedTransmitterIsDependent) {
  const auto net = NetworkBuilder(2)
                       .supernode("S", 0, 1, 0)
                       .supernode("D", 1, 0, 2)
                       .edge("S", 0, "D", 0)
                       .edge("S", 0, "D", 1)
                       .build();
  const Path a{{tx("S", 0), rx("D", 0)}}, b{{tx("S", 0), rx("D", 1)}};
  EXPECT_FALSE(verify_paths_independent(net, {{a, b}, std::nullopt}));
}

TEST(VerifyPaths, RankDeficientPair) {
  // Full 2x2 block: any two disjoint edges span a rank-1 matrix.
  const auto net = NetworkBuilder(2)
                       .supernode("S", 0, 2, 0)
                       .supernode("D", 1, 0, 2)
                       .edge("S", 0, "D", 0)
                       .edge("S", 0, "D", 1)
                       .edge("S", 1, "D", 0)
                       .edge("S", 1, "D", 1)
                       .build();
  const Path a{{tx("S", 0), rx("D", 0)}}, b{{tx("S", 1), rx("D", 1)}};
  EXPECT_FALSE(verify_paths_independent(net, {{a, b}, std::nullopt}));
  EXPECT_TRUE(verify_paths_independent(net, {{a}, std::nullopt}));
}

TEST(Bruteforce, Examples) {
  EXPECT_EQ(max_independent_paths_bruteforce(testing::single_edge()), 1);
  EXPECT_EQ(max_independent_paths_bruteforce(testing::no_edges()), 0);
  EXPECT_EQ(max_independent_paths_bruteforce(testing::five_level_link()), 4);
  EXPECT_EQ(max_independent_paths_bruteforce(testing::identity_chain(3)), 3);
}

TEST(Bruteforce, PathBound) {
  const auto net = gen_random({4, 3, 3, 1.0, 1});
  EXPECT_THROW(max_independent_paths_bruteforce(net, 4), SizeError);
  EXPECT_THROW(enumerate_paths(net, 4), SizeError);
}

TEST(EnumeratePaths, RelaysMayChangeLevel) {
  // Two ways into A times two ways out.
  const auto paths = enumerate_paths(testing::identity_chain(2), 100);
  ASSERT_EQ(paths.size(), 4u);
  EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
}

// Min-cut and brute force never disagree with each other.
TEST(Oracles, AgreeOnSmallInstances) {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 300 && compared < 120; ++seed) {
    const auto net = gen_random({3, 2, 2, 0.5, seed});
    int brute = 0;
    try {
      brute = max_independent_paths_bruteforce(net, 12);
    } catch (const SizeError&) {
      continue;
    }
    ++compared;
    ASSERT_EQ(brute, min_cut_capacity(net).capacity);
  }
  EXPECT_GE(compared, 100);
}

}  // namespace
}  // namespace detcap
