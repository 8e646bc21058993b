#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "powdeg/classify.hpp"
#include "powdeg/oracle.hpp"

namespace powdeg {
namespace {

VertexId vertex(Canonicalized const& cg, std::vector<BigInt> residues) {
  return static_cast<VertexId>(
      element_index(cg.group, map_element(cg.map, residues)));
}

TEST(BuildDirected, Examples) {
  auto z2 = canonicalize("2");
  auto d2 = build_directed(z2.group);
  EXPECT_TRUE(d2.successors[0].empty());
  EXPECT_EQ(d2.successors[1], (std::vector<VertexId>{0}));

  auto z4 = canonicalize("4");
  auto d4 = build_directed(z4.group);
  EXPECT_EQ(d4.successors[vertex(z4, {1})], (std::vector<VertexId>{0, 2, 3}));

  auto klein = canonicalize("Z2xZ2");
  auto dk = build_directed(klein.group);
  for (VertexId u = 1; u < 4; ++u) {
    EXPECT_EQ(dk.successors[u], (std::vector<VertexId>{0}));
  }
}

TEST(BuildDirected, Budget) {
  EXPECT_THROW(build_directed(canonicalize("Z1024xZ1024").group, 100),
               BudgetExceeded);
}

TEST(ProjectUndirected, Examples) {
  DirectedPowerGraph k2;
  k2.vertices.resize(2);
  k2.successors = {{1}, {0}};
  k2.predecessors = {{1}, {0}};
  auto g2 = project_undirected(k2);
  EXPECT_EQ(g2.edge_count(), 1U);
  EXPECT_EQ(g2.edges(), (std::vector<std::pair<VertexId, VertexId>>{{0, 1}}));

  auto z4 = project_undirected(build_directed(canonicalize("4").group));
  EXPECT_TRUE(z4.is_complete());
  EXPECT_EQ(z4.edge_count(), 6U);

  auto klein = project_undirected(build_directed(canonicalize("Z2xZ2").group));
  EXPECT_EQ(klein.edge_count(), 3U);
  EXPECT_EQ(klein.adjacency[0].size(), 3U);
  EXPECT_FALSE(klein.is_complete());
}

TEST(OracleTriple, Examples) {
  for (std::uint64_t n : {2, 5, 12}) {
    auto d = build_directed(canonicalize(std::to_string(n)).group);
    EXPECT_EQ(oracle_triple(d, 0), (DegreeTriple{0, n - 1, 0}));
  }
  auto z4 = canonicalize("4");
  EXPECT_EQ(oracle_triple(build_directed(z4.group), vertex(z4, {2})),
            (DegreeTriple{1, 2, 0}));
  auto z6 = canonicalize("6");
  EXPECT_EQ(oracle_triple(build_directed(z6.group), vertex(z6, {1})),
            (DegreeTriple{5, 1, 1}));
}

TEST(Oracle, AgreesWithTestOnlyBruteForce) {
  for (auto const& spec : {"Z6", "Z4xZ2", "Z12xZ2", "2,3,5", "Z9xZ3", "Z8xZ2xZ2"}) {
    auto [group, map] = canonicalize(spec);
    auto directed = build_directed(group);
    auto undirected = project_undirected(directed);
    brute::Group reference(map.factors);
    for (VertexId u = 0; u < directed.size(); ++u) {
      auto expected = reference.triple(inverse_map(map, directed.vertices[u]));
      EXPECT_EQ(oracle_triple(directed, u),
                (DegreeTriple{expected.out, expected.in, expected.bidir}))
          << spec;
      EXPECT_EQ(undirected.adjacency[u].size(), expected.degree) << spec;
    }
  }
}

TEST(Oracle, DirectedGraphLaws) {
  for (auto const& group : abelian_groups_up_to(200)) {
    auto directed = build_directed(group);
    auto undirected = project_undirected(directed);
    EXPECT_TRUE(undirected.is_connected()) << group.to_string();
    EXPECT_EQ(undirected.is_complete(), is_complete(group)) << group.to_string();
    EXPECT_TRUE(directed.successors[0].empty());
    for (VertexId u = 0; u < directed.size(); ++u) {
      auto const& g = directed.vertices[u];
      BigInt order = element_order(group, g);
      auto triple = oracle_triple(directed, u);
      ASSERT_EQ(triple.out_deg, order - 1);
      auto const& succ = directed.successors[u];
      ASSERT_TRUE(std::find(succ.begin(), succ.end(), u) == succ.end());
      if (u != 0) {
        ASSERT_EQ(succ.front(), 0U);
        BigInt phi = 0;
        for (BigInt k = 1; k <= order; ++k) phi += gcd(k, order) == 1;
        ASSERT_EQ(triple.bidir, phi - 1);
        ASSERT_EQ(triple.undirected(), order - phi + triple.in_deg);
      }
      ASSERT_EQ(triple.undirected(), undirected.adjacency[u].size());
    }
  }
}

TEST(Verify, Examples) {
  auto z8 = verify(canonicalize("8").group);
  EXPECT_EQ(z8.mismatches, 0U);
  EXPECT_EQ(z8.oracle_edges, 28);
  EXPECT_TRUE(z8.ok());

  EXPECT_TRUE(verify(canonicalize("Z4xZ2").group).ok());
  auto z30 = verify(canonicalize("2,3,5").group);
  EXPECT_TRUE(z30.ok());
  EXPECT_EQ(z30.rows.size(), 30U);

  EXPECT_THROW(verify(canonicalize("Z1024xZ1024").group, 100), BudgetExceeded);
}

}  // namespace
}  // namespace powdeg
