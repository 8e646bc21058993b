#pragma once

// Subcommand implementations for the powdeg CLI. Kept out of main() so the
// test suite can run them in-process against string streams.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powdeg/powdeg.hpp"

namespace powdeg::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kElementError = 3,
  kBudgetExceeded = 4,
};

struct CliConfig {
  std::string group;
  std::optional<std::string> element;
  std::string format;
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::uint64_t> order_max;
  int verbosity = 0;
};

using Json = nlohmann::ordered_json;

inline Json order_type_json(CanonicalAbelianGroup const& group,
                            OrderType const& type) {
  Json out = Json::object();
  for (std::size_t c = 0; c < group.num_components(); ++c) {
    Json t = Json::array();
    for (unsigned x : type.t[c]) t.push_back(std::to_string(x));
    out[std::to_string(group.component(c).p)] = t;
  }
  return out;
}

inline std::string order_type_text(CanonicalAbelianGroup const& group,
                                   OrderType const& type) {
  std::string out;
  for (std::size_t c = 0; c < group.num_components(); ++c) {
    if (c > 0) out += ' ';
    out += std::to_string(group.component(c).p) + ":[";
    for (std::size_t a = 0; a < type.t[c].size(); ++a) {
      if (a > 0) out += ',';
      out += std::to_string(type.t[c][a]);
    }
    out += ']';
  }
  return out;
}

inline int cmd_degree(CliConfig const& cfg, std::ostream& out) {
  auto [group, map] = canonicalize(cfg.group);
  if (!cfg.element) throw ElementError("--element is required for degree");
  Element g = map_element(map, parse_residues(*cfg.element));
  OrderType type = order_type(group, g);
  DegreeTriple triple = degree_triple(group, type);
  BigInt degree = undirected_degree(group, g);
  BigInt order = element_order(group, g);

  if (cfg.format == "json") {
    Json j;
    j["group"] = group.to_string();
    j["group_order"] = group.order().str();
    Json residues = Json::array();
    for (auto r : inverse_map(map, g)) residues.push_back(std::to_string(r));
    j["element"] = residues;
    j["element_order"] = order.str();
    j["order_type"] = order_type_json(group, type);
    j["out_degree"] = triple.out_deg.str();
    j["in_degree"] = triple.in_deg.str();
    j["bidirectional"] = triple.bidir.str();
    j["degree"] = degree.str();
    out << j.dump(2) << '\n';
  } else if (cfg.format == "text") {
    out << "group " << group.to_string() << '\n'
        << "group_order " << group.order() << '\n'
        << "element " << user_label(map, g) << '\n'
        << "element_order " << order << '\n'
        << "order_type " << order_type_text(group, type) << '\n'
        << "out_degree " << triple.out_deg << '\n'
        << "in_degree " << triple.in_deg << '\n'
        << "bidirectional " << triple.bidir << '\n'
        << "degree " << degree << '\n';
  } else {
    throw ParseError("format '" + cfg.format + "' not supported by degree", 0);
  }
  return kOk;
}

inline int cmd_histogram(CliConfig const& cfg, std::ostream& out) {
  auto group = canonicalize(cfg.group).group;
  DegreeHistogram histogram = degree_histogram(group);
  if (cfg.format == "csv") {
    write_histogram_csv(out, histogram);
  } else if (cfg.format == "json") {
    out << histogram_json(histogram).dump(2) << '\n';
  } else if (cfg.format == "text") {
    for (auto const& [degree, count] : histogram) {
      out << "degree " << degree << ": " << count << '\n';
    }
  } else {
    throw ParseError("format '" + cfg.format + "' not supported by histogram", 0);
  }
  return kOk;
}

inline int cmd_edges(CliConfig const& cfg, std::ostream& out) {
  auto group = canonicalize(cfg.group).group;
  BigInt edges = edge_count(group);
  if (cfg.format == "json") {
    out << Json{{"group", group.to_string()}, {"edges", edges.str()}}.dump(2)
        << '\n';
  } else {
    out << edges << '\n';
  }
  return kOk;
}

inline int cmd_complete(CliConfig const& cfg, std::ostream& out) {
  auto group = canonicalize(cfg.group).group;
  bool complete = is_complete(group);
  if (cfg.format == "json") {
    out << Json{{"group", group.to_string()}, {"complete", complete}}.dump(2)
        << '\n';
  } else {
    out << (complete ? "true" : "false") << '\n';
  }
  return kOk;
}

inline Json report_json(VerifyReport const& report, CoordinateMap const* map,
                        bool with_rows) {
  Json j;
  j["group"] = report.group.to_string();
  j["order"] = report.group.order().str();
  j["mismatches"] = std::to_string(report.mismatches);
  j["formula_edges"] = report.formula_edges.str();
  j["oracle_edges"] = report.oracle_edges.str();
  j["histograms_match"] = report.formula_histogram == report.oracle_histogram;
  j["formula_complete"] = report.formula_complete;
  j["oracle_complete"] = report.oracle_complete;
  j["ok"] = report.ok();
  if (with_rows) {
    Json rows = Json::array();
    for (auto const& row : report.rows) {
      Json r;
      r["element"] = map ? user_label(*map, row.element)
                         : std::to_string(element_index(report.group, row.element));
      r["formula"] = triple_json(row.formula);
      r["oracle"] = triple_json(row.oracle);
      r["match"] = row.matches();
      rows.push_back(r);
    }
    j["elements"] = rows;
  }
  return j;
}

inline void report_text(std::ostream& out, VerifyReport const& report,
                        CoordinateMap const* map, bool with_rows) {
  if (with_rows) {
    for (auto const& row : report.rows) {
      out << "  "
          << (map ? user_label(*map, row.element)
                  : std::to_string(element_index(report.group, row.element)))
          << " formula(" << row.formula.out_deg << ',' << row.formula.in_deg
          << ',' << row.formula.bidir << ")=" << row.formula_degree
          << " oracle(" << row.oracle.out_deg << ',' << row.oracle.in_deg << ','
          << row.oracle.bidir << ")=" << row.oracle_degree
          << (row.matches() ? "" : "  MISMATCH") << '\n';
    }
  }
  out << report.group.to_string() << ": " << report.rows.size()
      << " elements, " << report.mismatches << " mismatches, edges "
      << report.formula_edges << '/' << report.oracle_edges << ", histogram "
      << (report.formula_histogram == report.oracle_histogram ? "match"
                                                              : "MISMATCH")
      << ", complete " << (report.formula_complete ? "yes" : "no") << '/'
      << (report.oracle_complete ? "yes" : "no") << '\n';
}

inline int cmd_verify(CliConfig const& cfg, std::ostream& out) {
  bool const json = cfg.format == "json";
  if (!json && cfg.format != "text") {
    throw ParseError("format '" + cfg.format + "' not supported by verify", 0);
  }
  bool const rows = cfg.verbosity > 0;

  if (!cfg.order_max) {
    auto [group, map] = canonicalize(cfg.group);
    VerifyReport report = verify(group, cfg.budget);
    if (json) {
      out << report_json(report, &map, rows).dump(2) << '\n';
    } else {
      report_text(out, report, &map, rows);
    }
    return report.ok() ? kOk : kMismatch;
  }

  // Check the whole sweep against the budget before doing any work.
  auto groups = abelian_groups_up_to(*cfg.order_max);
  for (auto const& group : groups) check_budget(group, cfg.budget);

  std::size_t failed = 0, elements = 0, mismatches = 0;
  Json all = Json::array();
  for (auto const& group : groups) {
    VerifyReport report = verify(group, cfg.budget);
    elements += report.rows.size();
    mismatches += report.mismatches;
    if (!report.ok()) ++failed;
    if (json) {
      all.push_back(report_json(report, nullptr, rows));
    } else {
      report_text(out, report, nullptr, rows);
    }
  }
  if (json) {
    Json j;
    j["order_max"] = std::to_string(*cfg.order_max);
    j["groups"] = std::to_string(groups.size());
    j["elements"] = std::to_string(elements);
    j["mismatches"] = std::to_string(mismatches);
    j["failed_groups"] = std::to_string(failed);
    j["reports"] = all;
    out << j.dump(2) << '\n';
  } else {
    out << "verified " << groups.size() << " groups, " << elements
        << " elements, " << mismatches << " mismatches, " << failed
        << " failed groups\n";
  }
  return failed == 0 ? kOk : kMismatch;
}

inline int cmd_export(CliConfig const& cfg, std::ostream& out) {
  auto [group, map] = canonicalize(cfg.group);
  PowerGraph graph = project_undirected(build_directed(group, cfg.budget));
  if (cfg.format == "dot") {
    write_dot(out, graph, group, map);
  } else if (cfg.format == "edges") {
    write_edge_list(out, graph);
  } else {
    throw ParseError("format '" + cfg.format + "' not supported by export", 0);
  }
  return kOk;
}

/// Runs one CLI invocation; args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Degrees of vertices in power graphs of finite abelian groups",
               "powdeg"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group,
                    "Group, e.g. Z4xZ2, 12 or 2,3,5")
        ->required();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "Maximum group order for brute force")
        ->check(CLI::PositiveNumber);
  };

  auto* degree = app.add_subcommand("degree", "Degree triple of one element");
  add_group(degree);
  degree->add_option("--element", cfg.element, "Residues r1,r2,... per factor")
      ->required();
  degree->add_option("--format", cfg.format, "json or text (default text)");

  auto* histogram = app.add_subcommand("histogram", "Degree histogram");
  add_group(histogram);
  histogram->add_option("--format", cfg.format, "csv, json or text (default csv)");

  auto* edges = app.add_subcommand("edges", "Number of edges of the power graph");
  add_group(edges);
  edges->add_option("--format", cfg.format, "text or json");

  auto* complete = app.add_subcommand("complete", "Whether the power graph is complete");
  add_group(complete);
  complete->add_option("--format", cfg.format, "text or json");

  auto* verify_cmd = app.add_subcommand("verify", "Check formulas against brute force");
  auto* vg = verify_cmd->add_option("--group", cfg.group, "Group to verify");
  auto* vo = verify_cmd->add_option("--order-max", cfg.order_max,
                                    "Verify every abelian group up to this order");
  vg->excludes(vo);
  verify_cmd->add_option("--format", cfg.format, "text or json");
  verify_cmd->add_flag("-v,--verbose", cfg.verbosity, "Print per-element rows");
  add_budget(verify_cmd);

  auto* export_cmd = app.add_subcommand("export", "Write the power graph");
  add_group(export_cmd);
  export_cmd->add_option("--format", cfg.format, "dot or edges (default dot)");
  add_budget(export_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
    if (verify_cmd->parsed() && cfg.group.empty() && !cfg.order_max) {
      throw CLI::RequiredError("verify needs --group or --order-max");
    }
    if (cfg.format.empty()) {
      cfg.format = histogram->parsed() ? "csv"
                   : export_cmd->parsed() ? "dot"
                                          : "text";
    }
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (degree->parsed()) return cmd_degree(cfg, out);
    if (histogram->parsed()) return cmd_histogram(cfg, out);
    if (edges->parsed()) return cmd_edges(cfg, out);
    if (complete->parsed()) return cmd_complete(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (export_cmd->parsed()) return cmd_export(cfg, out);
  } catch (ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (ElementError const& e) {
    err << "error: " << e.what() << '\n';
    return kElementError;
  } catch (BudgetExceeded const& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace powdeg::cli
