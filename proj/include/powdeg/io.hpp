#pragma once

// Text renderings: histogram JSON/CSV, DOT and edge lists.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "powdeg/degree.hpp"
#include "powdeg/group.hpp"
#include "powdeg/oracle.hpp"

namespace powdeg {

/// {"<degree>": "<count>", ...} in ascending degree order, all decimal strings.
inline nlohmann::ordered_json histogram_json(DegreeHistogram const& histogram) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (auto const& [degree, count] : histogram) out[degree.str()] = count.str();
  return out;
}

inline void write_histogram_csv(std::ostream& os,
                                DegreeHistogram const& histogram) {
  for (auto const& [degree, count] : histogram) os << degree << ',' << count << '\n';
}

inline nlohmann::ordered_json triple_json(DegreeTriple const& d) {
  return {{"out_degree", d.out_deg.str()},
          {"in_degree", d.in_deg.str()},
          {"bidirectional", d.bidir.str()},
          {"degree", d.undirected().str()}};
}

/// "(r1,r2,...)" in user coordinates.
inline std::string user_label(CoordinateMap const& map, Element const& g) {
  std::string label = "(";
  auto residues = inverse_map(map, g);
  for (std::size_t j = 0; j < residues.size(); ++j) {
    if (j > 0) label += ',';
    label += std::to_string(residues[j]);
  }
  return label + ")";
}

inline void write_dot(std::ostream& os, PowerGraph const& graph,
                      CanonicalAbelianGroup const& group,
                      CoordinateMap const& map) {
  os << "graph \"" << group.to_string() << "\" {\n";
  for (VertexId u = 0; u < graph.size(); ++u) {
    os << "  " << u << " [label=\"" << user_label(map, graph.vertices[u])
       << "\"];\n";
  }
  for (auto const& [u, v] : graph.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

inline void write_edge_list(std::ostream& os, PowerGraph const& graph) {
  for (auto const& [u, v] : graph.edges()) os << u << ' ' << v << '\n';
}

}  // namespace powdeg
