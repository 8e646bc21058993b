#pragma once

// Brute-force power graphs built only from the group operation. This is the
// ground truth the closed-form degrees in degree.hpp are checked against, so
// nothing here may depend on order types or totients.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <utility>
#include <vector>

#include "powdeg/bigint.hpp"
#include "powdeg/degree.hpp"
#include "powdeg/errors.hpp"
#include "powdeg/group.hpp"

namespace powdeg {

inline constexpr std::uint64_t kDefaultBudget = 65536;

using VertexId = std::uint32_t;

/// Edge u -> v whenever v != u is a power of u. Vertex i is the i-th element
/// of enumerate_elements().
struct DirectedPowerGraph {
  std::vector<Element> vertices;
  std::vector<std::vector<VertexId>> successors;    // sorted
  std::vector<std::vector<VertexId>> predecessors;  // sorted, derived

  std::size_t size() const { return vertices.size(); }
};

/// Underlying simple graph of a DirectedPowerGraph.
struct PowerGraph {
  std::vector<Element> vertices;
  std::vector<std::vector<VertexId>> adjacency;  // sorted, symmetric

  std::size_t size() const { return vertices.size(); }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (auto const& adj : adjacency) total += adj.size();
    return total / 2;
  }

  /// Edges {u, v} with u < v, ordered by u then v.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < adjacency.size(); ++u) {
      for (VertexId v : adjacency[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool is_complete() const {
    return std::all_of(adjacency.begin(), adjacency.end(), [&](auto const& adj) {
      return adj.size() + 1 == adjacency.size();
    });
  }

  bool is_connected() const {
    if (adjacency.empty()) return true;
    std::vector<bool> seen(adjacency.size(), false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : adjacency[u]) {
        if (!seen[v]) {
          seen[v] = true;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    return reached == adjacency.size();
  }
};

inline DirectedPowerGraph build_directed(CanonicalAbelianGroup const& group,
                                         std::uint64_t budget = kDefaultBudget) {
  DirectedPowerGraph graph;
  for (Element const& g : enumerate_elements(group, budget)) {
    graph.vertices.push_back(g);
  }
  std::size_t const n = graph.vertices.size();
  if (n > std::numeric_limits<VertexId>::max()) {
    throw BudgetExceeded("too many vertices for 32-bit vertex ids");
  }
  graph.successors.resize(n);
  graph.predecessors.resize(n);

  // Flat residues, same coordinate order as element_index().
  std::vector<std::uint64_t> mods;
  for (std::size_t c = 0; c < group.num_components(); ++c) {
    mods.insert(mods.end(), group.moduli(c).begin(), group.moduli(c).end());
  }
  std::size_t const dim = mods.size();
  std::vector<std::uint64_t> base(dim), power(dim);
  std::vector<bool> marked(n, false);

  for (std::size_t u = 0; u < n; ++u) {
    std::size_t k = 0;
    for (auto const& comp : graph.vertices[u].coords) {
      for (std::uint64_t r : comp) base[k++] = r;
    }
    power = base;
    auto& succ = graph.successors[u];
    // u^2, u^3, ... up to and including u^|u| = e.
    for (;;) {
      bool is_e = true;
      VertexId v = 0;
      for (std::size_t a = 0; a < dim; ++a) {
        std::uint64_t x = power[a], y = base[a];
        power[a] = x >= mods[a] - y ? x - (mods[a] - y) : x + y;
        v = static_cast<VertexId>(v * mods[a] + power[a]);
        is_e = is_e && power[a] == 0;
      }
      if (v != u) succ.push_back(v);
      if (is_e) break;
    }
    // Powers of u are pairwise distinct, so only ordering is needed.
    if (succ.size() > n / 16) {
      for (VertexId v : succ) marked[v] = true;
      succ.clear();
      for (std::size_t v = 0; v < n; ++v) {
        if (marked[v]) {
          succ.push_back(static_cast<VertexId>(v));
          marked[v] = false;
        }
      }
    } else {
      std::sort(succ.begin(), succ.end());
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (VertexId v : graph.successors[u]) {
      graph.predecessors[v].push_back(static_cast<VertexId>(u));
    }
  }
  return graph;
}

inline PowerGraph project_undirected(DirectedPowerGraph const& directed) {
  PowerGraph graph;
  graph.vertices = directed.vertices;
  graph.adjacency.resize(directed.size());
  for (std::size_t u = 0; u < directed.size(); ++u) {
    auto& adj = graph.adjacency[u];
    std::set_union(directed.successors[u].begin(), directed.successors[u].end(),
                   directed.predecessors[u].begin(),
                   directed.predecessors[u].end(), std::back_inserter(adj));
  }
  return graph;
}

inline DegreeTriple oracle_triple(DirectedPowerGraph const& directed,
                                  VertexId u) {
  auto const& succ = directed.successors.at(u);
  auto const& pred = directed.predecessors.at(u);
  std::size_t both = 0;
  for (auto s = succ.begin(), p = pred.begin(); s != succ.end() && p != pred.end();) {
    if (*s < *p) {
      ++s;
    } else if (*p < *s) {
      ++p;
    } else {
      ++both;
      ++s;
      ++p;
    }
  }
  return {succ.size(), pred.size(), both};
}

/// Histogram of undirected degrees read off an explicit graph.
inline DegreeHistogram oracle_histogram(PowerGraph const& graph) {
  DegreeHistogram histogram;
  for (auto const& adj : graph.adjacency) histogram[adj.size()] += 1;
  return histogram;
}

struct VerifyRow {
  Element element;
  DegreeTriple formula;
  DegreeTriple oracle;
  BigInt formula_degree;
  BigInt oracle_degree;

  bool matches() const {
    return formula == oracle && formula_degree == oracle_degree;
  }
};

struct VerifyReport {
  CanonicalAbelianGroup group;
  std::vector<VerifyRow> rows;
  std::size_t mismatches = 0;
  BigInt formula_edges;
  BigInt oracle_edges;
  DegreeHistogram formula_histogram;
  DegreeHistogram oracle_histogram;
  bool formula_complete = false;
  bool oracle_complete = false;

  bool ok() const {
    return mismatches == 0 && formula_edges == oracle_edges &&
           formula_histogram == oracle_histogram &&
           formula_complete == oracle_complete;
  }
};

/// Compares every element's closed-form triple and degree with the oracle.
inline VerifyReport verify(CanonicalAbelianGroup const& group,
                           std::uint64_t budget = kDefaultBudget) {
  VerifyReport report;
  report.group = group;
  DirectedPowerGraph directed = build_directed(group, budget);
  PowerGraph undirected = project_undirected(directed);

  report.rows.reserve(directed.size());
  for (VertexId u = 0; u < directed.size(); ++u) {
    VerifyRow row{directed.vertices[u], degree_triple(group, directed.vertices[u]),
                  oracle_triple(directed, u),
                  undirected_degree(group, directed.vertices[u]),
                  undirected.adjacency[u].size()};
    if (!row.matches()) ++report.mismatches;
    report.rows.push_back(std::move(row));
  }
  report.formula_histogram = degree_histogram(group);
  report.oracle_histogram = oracle_histogram(undirected);
  report.formula_edges = edge_count(report.formula_histogram);
  report.oracle_edges = undirected.edge_count();
  report.formula_complete = is_complete(group);
  report.oracle_complete = undirected.is_complete();
  return report;
}

}  // namespace powdeg
