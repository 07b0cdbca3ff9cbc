#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dcolor/instance.hpp"
#include "dcolor/recursion.hpp"
#include "dcolor/sim.hpp"

namespace dcolor {

// Graph file: "n m" then m lines "u v", 0-based ids.
void write_graph(const Graph& g, std::ostream& out);
Graph read_graph(std::istream& in);

// Hypergraph file: "n m r" then m lines of space-separated node ids.
void write_hypergraph(const Hypergraph& h, std::ostream& out);
Hypergraph read_hypergraph(std::istream& in);

// Instance JSON: {"mode": ..., "C": ..., "lists": {"<node>": [[color, defect], ...]}}
nlohmann::json instance_to_json(const ListInstance& inst);
ListInstance instance_from_json(const nlohmann::json& j, int node_count);

// Solution JSON: {"colors": {"<node>": color}, "orientation": [[u, v], ...]}
nlohmann::json solution_to_json(const Solution& sol);
Solution solution_from_json(const nlohmann::json& j, int node_count);

nlohmann::json roundlog_to_json(const RoundLog& log);
nlohmann::json trace_to_json(const TraceNode& node);
nlohmann::json slack_report_to_json(const SlackReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dcolor
