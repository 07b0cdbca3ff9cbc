#include "dcolor/experiment.hpp"

#include <chrono>
#include <sstream>

#include "dcolor/generators.hpp"
#include "dcolor/io.hpp"

namespace dcolor {

ExperimentSpec ExperimentSpec::from_json(const nlohmann::json& j) {
    ExperimentSpec spec;
    try {
        if (j.contains("name")) spec.name = j.at("name").get<std::string>();
        if (j.contains("generator")) {
            const auto& gen = j.at("generator");
            if (gen.contains("n_hyper")) spec.n_hyper = gen.at("n_hyper").get<std::vector<int>>();
            if (gen.contains("r")) spec.r = gen.at("r").get<int>();
            if (gen.contains("d_hyper")) spec.d_hyper = gen.at("d_hyper").get<std::vector<int>>();
        }
        if (j.contains("instance")) {
            const auto& inst = j.at("instance");
            std::string preset = inst.value("preset", "");
            if (preset == "delta_plus_one") {
                spec.preset_delta_plus_one = true;
            } else if (preset.empty()) {
                spec.preset_delta_plus_one = false;
                spec.color_space = inst.at("C").get<long long>();
                spec.slack = Rational::parse(inst.at("slack").get<std::string>());
                if (inst.value("mode", "arbdefective") != "arbdefective")
                    throw SpecParse("experiments solve arbdefective instances");
            } else {
                throw SpecParse("unknown instance preset: " + preset);
            }
        }
        if (j.contains("trials")) spec.trials = j.at("trials").get<int>();
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("eps_policy"))
            spec.eps_policy = eps_policy_from_name(j.at("eps_policy").get<std::string>());
        if (j.contains("round_cap")) spec.round_cap = j.at("round_cap").get<long long>();
    } catch (const nlohmann::json::exception& e) {
        throw SpecParse(std::string("bad experiment spec: ") + e.what());
    }
    if (spec.n_hyper.empty() || spec.d_hyper.empty() || spec.trials < 1)
        throw SpecParse("experiment spec needs cases and at least one trial");
    return spec;
}

ExperimentSpec parse_experiment_spec(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw SpecParse("experiment spec is not valid JSON");
    return ExperimentSpec::from_json(j);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    // splitmix64 over the packed inputs
    std::uint64_t x = base + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

namespace {

nlohmann::json trace_sample(const TraceNode& node, int depth_left) {
    nlohmann::json j{{"kind", node.kind},
                     {"nodes", node.node_count},
                     {"rounds", node.rounds},
                     {"children", node.children.size()}};
    if (!node.stats.empty()) j["stats"] = node.stats;
    if (depth_left > 0 && !node.children.empty()) {
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& c : node.children) kids.push_back(trace_sample(*c, depth_left - 1));
        j["sample"] = std::move(kids);
    }
    return j;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    std::ostringstream csv;
    csv << kCsvHeader << "\n";
    nlohmann::json cases = nlohmann::json::array();

    int case_index = 0;
    for (int nh : spec.n_hyper) {
        for (int dh : spec.d_hyper) {
            nlohmann::json case_json{{"n_hyper", nh}, {"d_hyper", dh}, {"r", spec.r}};
            nlohmann::json walls = nlohmann::json::array();
            long long rounds_sum = 0;
            for (int trial = 0; trial < spec.trials; ++trial) {
                std::uint64_t seed = mix_seed(spec.seed, case_index, trial);
                Hypergraph h = gen_hypergraph(nh, spec.r, dh, seed);
                Graph g = line_graph(h);
                auto ni = neighborhood_independence(g);

                ListInstance inst = spec.preset_delta_plus_one
                                        ? delta_plus_one_instance(g)
                                        : gen_instance(g, spec.color_space, spec.slack,
                                                       Mode::Arbdefective, mix_seed(seed, 7, 7));

                SimConfig cfg = SimConfig::for_graph(g);
                cfg.theta = ni.theta;
                cfg.color_space = inst.color_space;
                cfg.round_cap = spec.round_cap;

                SolveOptions opt;
                opt.eps_policy = spec.eps_policy;
                opt.round_cap = spec.round_cap;

                auto t0 = std::chrono::steady_clock::now();
                SolveResult res = solve_main(g, cfg, inst, opt);
                auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();

                long long violations =
                    static_cast<long long>(verify_arbdefective(g, inst, res.solution).size());
                long long logstar_rounds = 0;
                for (const char* label : {"linial", "defective"}) {
                    auto it = res.log.rounds_by_label.find(label);
                    if (it != res.log.rounds_by_label.end()) logstar_rounds += it->second;
                }

                csv << case_index << "," << nh << "," << spec.r << "," << dh << "," << seed << ","
                    << g.node_count() << "," << g.max_degree() << "," << ni.theta << ","
                    << inst.color_space << ","
                    << (spec.preset_delta_plus_one ? std::string("1") : spec.slack.str()) << ","
                    << res.log.total_rounds << "," << logstar_rounds << ","
                    << res.trace.root->depth() << "," << res.stats.subinstances_A << ","
                    << res.stats.subinstances_D << "," << res.stats.base_calls << ","
                    << res.stats.slack_checks << "," << violations << "\n";

                rounds_sum += res.log.total_rounds;
                walls.push_back(wall_ms);
                if (trial == 0) case_json["trace_sample"] = trace_sample(*res.trace.root, 3);
            }
            case_json["wall_ms"] = std::move(walls);
            case_json["mean_rounds"] =
                static_cast<double>(rounds_sum) / static_cast<double>(spec.trials);
            cases.push_back(std::move(case_json));
            ++case_index;
        }
    }

    ExperimentResult out;
    out.csv = csv.str();
    out.report = nlohmann::json{{"name", spec.name},
                                {"eps_policy", eps_policy_name(spec.eps_policy)},
                                {"trials", spec.trials},
                                {"seed", spec.seed},
                                {"cases", std::move(cases)}};
    return out;
}

}  // namespace dcolor
