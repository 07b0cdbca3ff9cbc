#include "dcolor/io.hpp"

#include <fstream>
#include <sstream>

namespace dcolor {

void write_graph(const Graph& g, std::ostream& out) {
    out << g.node_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph read_graph(std::istream& in) {
    int n;
    long long m;
    if (!(in >> n >> m)) throw SpecParse("graph header expects 'n m'");
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        NodeId u, v;
        if (!(in >> u >> v)) throw SpecParse("graph edge line expects 'u v'");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

void write_hypergraph(const Hypergraph& h, std::ostream& out) {
    out << h.node_count << " " << h.edges.size() << " " << h.rank << "\n";
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << "\n";
    }
}

Hypergraph read_hypergraph(std::istream& in) {
    int n, r;
    long long m;
    if (!(in >> n >> m >> r)) throw SpecParse("hypergraph header expects 'n m r'");
    std::string dummy;
    std::getline(in, dummy);
    std::vector<std::vector<NodeId>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        std::string line;
        if (!std::getline(in, line)) throw SpecParse("missing hyperedge line");
        std::istringstream ls(line);
        std::vector<NodeId> e;
        NodeId v;
        while (ls >> v) e.push_back(v);
        if (static_cast<int>(e.size()) > r) throw SpecParse("hyperedge larger than declared rank");
        edges.push_back(std::move(e));
    }
    return Hypergraph::make(n, std::move(edges));
}

nlohmann::json instance_to_json(const ListInstance& inst) {
    nlohmann::json lists = nlohmann::json::object();
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& cd : inst.lists[v]) entries.push_back({cd.color, cd.defect});
        lists[std::to_string(v)] = std::move(entries);
    }
    return nlohmann::json{{"mode", mode_name(inst.mode)}, {"C", inst.color_space},
                          {"lists", std::move(lists)}};
}

ListInstance instance_from_json(const nlohmann::json& j, int node_count) {
    ListInstance inst;
    try {
        inst.mode = mode_from_name(j.at("mode").get<std::string>());
        inst.color_space = j.at("C").get<long long>();
        inst.lists.assign(node_count, {});
        for (const auto& [key, entries] : j.at("lists").items()) {
            int v = std::stoi(key);
            if (v < 0 || v >= node_count) throw SpecParse("instance node id out of range");
            for (const auto& e : entries)
                inst.lists[v].push_back({e.at(0).get<Color>(), e.at(1).get<long long>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw SpecParse(std::string("bad instance JSON: ") + e.what());
    }
    inst.normalize();
    return inst;
}

nlohmann::json solution_to_json(const Solution& sol) {
    nlohmann::json colors = nlohmann::json::object();
    for (NodeId v = 0; v < static_cast<NodeId>(sol.colors.size()); ++v)
        if (sol.colors[v] != kUncolored) colors[std::to_string(v)] = sol.colors[v];
    nlohmann::json orient = nlohmann::json::array();
    for (auto [u, v] : sol.orientation) orient.push_back({u, v});
    return nlohmann::json{{"colors", std::move(colors)}, {"orientation", std::move(orient)}};
}

Solution solution_from_json(const nlohmann::json& j, int node_count) {
    Solution sol;
    sol.colors.assign(node_count, kUncolored);
    try {
        for (const auto& [key, value] : j.at("colors").items()) {
            int v = std::stoi(key);
            if (v < 0 || v >= node_count) throw SpecParse("solution node id out of range");
            sol.colors[v] = value.get<Color>();
        }
        for (const auto& e : j.at("orientation"))
            sol.orientation.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
    } catch (const nlohmann::json::exception& e) {
        throw SpecParse(std::string("bad solution JSON: ") + e.what());
    }
    return sol;
}

nlohmann::json roundlog_to_json(const RoundLog& log) {
    return nlohmann::json{{"total_rounds", log.total_rounds},
                          {"rounds_by_label", log.rounds_by_label},
                          {"invocations", log.invocations}};
}

nlohmann::json trace_to_json(const TraceNode& node) {
    nlohmann::json j{{"kind", node.kind},
                     {"family", std::string(1, node.family)},
                     {"slack", node.slack},
                     {"C", node.color_space},
                     {"nodes", node.node_count},
                     {"rounds", node.rounds}};
    if (node.base_call) j["base"] = true;
    if (!node.stats.empty()) j["stats"] = node.stats;
    if (!node.children.empty()) {
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& c : node.children) kids.push_back(trace_to_json(*c));
        j["children"] = std::move(kids);
    }
    return j;
}

nlohmann::json slack_report_to_json(const SlackReport& report) {
    nlohmann::json ratios = nlohmann::json::array();
    for (const auto& r : report.ratio) ratios.push_back(r ? r->str() : "inf");
    return nlohmann::json{{"satisfied", report.satisfied},
                          {"global_min", report.global_min ? report.global_min->str() : "inf"},
                          {"per_node", std::move(ratios)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << content;
}

}  // namespace dcolor
