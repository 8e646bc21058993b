#include <cstdint>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "powdeg/classify.hpp"
#include "powdeg/degree.hpp"

namespace powdeg {
namespace {

std::vector<std::uint64_t> flat_moduli(CanonicalAbelianGroup const& group) {
  std::vector<std::uint64_t> out;
  for (std::size_t c = 0; c < group.num_components(); ++c) {
    out.insert(out.end(), group.moduli(c).begin(), group.moduli(c).end());
  }
  return out;
}

std::vector<std::uint64_t> flat_coords(Element const& g) {
  std::vector<std::uint64_t> out;
  for (auto const& v : g.coords) out.insert(out.end(), v.begin(), v.end());
  return out;
}

DegreeTriple at(Canonicalized const& cg, std::vector<BigInt> residues) {
  return degree_triple(cg.group, map_element(cg.map, residues));
}

// --- indegree_p_component ----------------------------------------------------

TEST(IndegreePComponent, Examples) {
  EXPECT_EQ(indegree_p_component(2, {1, 1}, {1, 0}), 0);
  EXPECT_EQ(indegree_p_component(2, {1, 2}, {0, 1}), 4);
  EXPECT_EQ(indegree_p_component(2, {1, 2}, {1, 2}), 1);
}

TEST(IndegreePComponent, CyclicClosedForm) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned m = 1; m <= 12; ++m) {
      for (unsigned k = 1; k <= m; ++k) {
        EXPECT_EQ(indegree_p_component(p, {m}, {k}),
                  pow(p, m) - pow(p, k - 1) - 1)
            << p << " " << m << " " << k;
      }
    }
  }
}

TEST(IndegreePComponent, Errors) {
  EXPECT_THROW(indegree_p_component(2, {1, 2}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(indegree_p_component(2, {1, 2}, {1}), std::invalid_argument);
  EXPECT_THROW(indegree_p_component(2, {2, 1}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(indegree_p_component(2, {1, 2}, {2, 0}), std::invalid_argument);
}

TEST(IndegreeIdentity, Examples) {
  EXPECT_EQ(indegree_identity(canonicalize("2").group), 1);
  EXPECT_EQ(indegree_identity(canonicalize("Z4xZ2").group), 7);
  EXPECT_EQ(indegree_identity(canonicalize("12").group), 11);
}

// --- compose_coprime ----------------------------------------------------------

TEST(ComposeCoprime, Examples) {
  EXPECT_EQ(compose_coprime(std::vector<BigInt>{0, 2}), 2);
  EXPECT_EQ(compose_coprime(std::vector<BigInt>{41}), 41);
  EXPECT_EQ(compose_coprime(std::vector<BigInt>{1, 1, 1}), 7);
  EXPECT_THROW(compose_coprime(std::vector<BigInt>{}), std::invalid_argument);
  EXPECT_THROW(compose_coprime(std::vector<BigInt>{-1}), std::invalid_argument);
}

// --- degree_triple / undirected_degree ----------------------------------------

TEST(DegreeTriple, Examples) {
  EXPECT_EQ(at(canonicalize("4"), {2}), (DegreeTriple{1, 2, 0}));
  EXPECT_EQ(at(canonicalize("6"), {3}), (DegreeTriple{1, 2, 0}));
  EXPECT_EQ(at(canonicalize("6"), {1}), (DegreeTriple{5, 1, 1}));
  for (std::uint64_t n : {2, 7, 12, 360}) {
    auto cg = canonicalize(std::to_string(n));
    EXPECT_EQ(at(cg, {0}), (DegreeTriple{0, n - 1, 0})) << n;
  }
}

TEST(UndirectedDegree, Examples) {
  auto z4 = canonicalize("4");
  for (int r = 0; r < 4; ++r) {
    EXPECT_EQ(undirected_degree(z4.group, map_element(z4.map, {r})), 3);
  }
  auto z6 = canonicalize("6");
  EXPECT_EQ(undirected_degree(z6.group, map_element(z6.map, {3})), 3);
  auto z4z2 = canonicalize("Z4xZ2");
  EXPECT_EQ(undirected_degree(z4z2.group, map_element(z4z2.map, {2, 0})), 5);
  auto klein = canonicalize("Z2xZ2");
  for (auto const& r : {std::vector<BigInt>{1, 0}, {0, 1}, {1, 1}}) {
    EXPECT_EQ(undirected_degree(klein.group, map_element(klein.map, r)), 1);
  }
}

TEST(DegreeTriple, MatchesIndependentBruteForce) {
  for (auto const& group : abelian_groups_up_to(96)) {
    brute::Group reference(flat_moduli(group));
    for (Element const& g : enumerate_elements(group, 96)) {
      auto expected = reference.triple(flat_coords(g));
      auto triple = degree_triple(group, g);
      ASSERT_EQ(triple, (DegreeTriple{expected.out, expected.in, expected.bidir}))
          << group.to_string();
      ASSERT_EQ(undirected_degree(group, g), expected.degree) << group.to_string();
    }
  }
}

// User-coordinate check on groups given in non-canonical form.
TEST(DegreeTriple, MatchesBruteForceInUserCoordinates) {
  for (auto const& spec : {"Z6xZ10", "Z12xZ18", "Z20x6", "2,4,8", "Z45"}) {
    auto [group, map] = canonicalize(spec);
    brute::Group reference(map.factors);
    for (std::uint64_t i = 0; i < reference.size(); ++i) {
      auto const& r = reference.element(i);
      auto expected = reference.triple(i);
      auto triple = degree_triple(group, map_element(map, std::vector<BigInt>(r.begin(), r.end())));
      ASSERT_EQ(triple, (DegreeTriple{expected.out, expected.in, expected.bidir}))
          << spec;
    }
  }
}

TEST(DegreeTriple, Invariants) {
  for (auto const& group : abelian_groups_up_to(256)) {
    BigInt sum_out = 0, sum_in = 0;
    bool all_full = true;
    for (Element const& g : enumerate_elements(group, 256)) {
      auto d = degree_triple(group, g);
      ASSERT_LE(d.bidir, d.out_deg);
      ASSERT_LE(d.bidir, d.in_deg);
      BigInt degree = undirected_degree(group, g);
      ASSERT_EQ(degree, d.undirected());
      ASSERT_LE(degree, group.order() - 1);
      all_full = all_full && degree == group.order() - 1;
      sum_out += d.out_deg;
      sum_in += d.in_deg;
      if (is_identity(g)) {
        ASSERT_EQ(d, (DegreeTriple{0, group.order() - 1, 0}));
      }
    }
    EXPECT_EQ(sum_out, sum_in) << group.to_string();
    EXPECT_EQ(all_full, is_complete(group)) << group.to_string();
  }
}

// --- histograms -------------------------------------------------------------

TEST(DegreeHistogram, Examples) {
  EXPECT_EQ(degree_histogram(canonicalize("4").group), (DegreeHistogram{{3, 4}}));
  EXPECT_EQ(degree_histogram(canonicalize("Z2xZ2").group),
            (DegreeHistogram{{1, 3}, {3, 1}}));
  // Elements 2 and 4 are reached from 1 and 5, so they have degree 4.
  EXPECT_EQ(degree_histogram(canonicalize("6").group),
            (DegreeHistogram{{3, 1}, {4, 2}, {5, 3}}));
  EXPECT_EQ(degree_histogram(canonicalize("Z4xZ2").group),
            (DegreeHistogram{{1, 2}, {3, 4}, {5, 1}, {7, 1}}));
}

TEST(DegreeHistogram, MatchesPerElementEvaluationUpTo512) {
  for (auto const& group : abelian_groups_up_to(512)) {
    DegreeHistogram per_element;
    for (Element const& g : enumerate_elements(group, 512)) {
      per_element[undirected_degree(group, g)] += 1;
    }
    ASSERT_EQ(degree_histogram(group), per_element) << group.to_string();
  }
}

TEST(DegreeHistogram, HugeGroupCountsSumToOrder) {
  CanonicalAbelianGroup group({{2, {60, 60, 60}}, {3, {30, 30}}, {5, {20}}});
  auto histogram = degree_histogram(group);
  BigInt total = 0, degree_sum = 0;
  for (auto const& [degree, count] : histogram) {
    total += count;
    degree_sum += degree * count;
  }
  EXPECT_EQ(total, group.order());
  EXPECT_EQ(degree_sum % 2, 0);
  EXPECT_EQ(histogram.rbegin()->first, group.order() - 1);
  EXPECT_GT(group.order(), BigInt(1) << 200);
}

TEST(EdgeCount, Examples) {
  EXPECT_EQ(edge_count(canonicalize("4").group), 6);
  EXPECT_EQ(edge_count(canonicalize("Z2xZ2").group), 3);
  EXPECT_EQ(edge_count(canonicalize("6").group), 13);
  EXPECT_EQ(edge_count(canonicalize("2,3,5").group), 341);
  EXPECT_EQ(edge_count(canonicalize("8").group), 28);
}

TEST(EdgeCount, RejectsOddDegreeSum) {
  EXPECT_THROW(edge_count(DegreeHistogram{{3, 1}}), InvariantViolation);
}

TEST(IsComplete, Examples) {
  EXPECT_TRUE(is_complete(canonicalize("8").group));
  EXPECT_FALSE(is_complete(canonicalize("Z2xZ2").group));
  EXPECT_FALSE(is_complete(canonicalize("12").group));
  EXPECT_TRUE(is_complete(canonicalize("Z2187").group));
}

TEST(IsComplete, CorollaryForCyclicPrimePowers) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31, 43}) {
    for (unsigned m = 1; checked_pow(p, m) <= 2048; ++m) {
      CanonicalAbelianGroup group(std::vector<PrimeComponent>{{p, {m}}});
      EXPECT_EQ(degree_histogram(group),
                (DegreeHistogram{{group.order() - 1, group.order()}}));
    }
  }
}

TEST(OrderTypeSufficiency, EqualTypesGiveEqualTriples) {
  for (auto const& spec : {"Z2xZ4xZ8", "Z3xZ9xZ4", "Z2xZ2xZ2xZ4xZ3"}) {
    auto group = canonicalize(spec).group;
    std::map<OrderType, DegreeTriple> seen;
    brute::Group reference(flat_moduli(group));
    for (Element const& g : enumerate_elements(group, 1024)) {
      auto expected = reference.triple(flat_coords(g));
      DegreeTriple oracle{expected.out, expected.in, expected.bidir};
      auto [it, inserted] = seen.emplace(order_type(group, g), oracle);
      if (!inserted) {
        EXPECT_EQ(it->second, oracle) << spec;
      }
      EXPECT_EQ(degree_triple(group, g), oracle) << spec;
    }
  }
}

}  // namespace
}  // namespace powdeg
