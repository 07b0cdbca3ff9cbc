#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcolor/recursion.hpp"

namespace dcolor {

/// Declarative experiment: a sweep over line graphs of random r-uniform
/// d-regular hypergraphs, solved end to end, with per-trial accounting.
struct ExperimentSpec {
    std::string name = "experiment";
    std::vector<int> n_hyper{30};
    int r = 3;
    std::vector<int> d_hyper{3};
    bool preset_delta_plus_one = true;
    long long color_space = 0;     // used when preset is off
    Rational slack = Rational(1);  // used when preset is off
    int trials = 1;
    std::uint64_t seed = 1;
    EpsPolicy eps_policy = EpsPolicy::Auto;
    long long round_cap = 1'000'000;

    static ExperimentSpec from_json(const nlohmann::json& j);
};

ExperimentSpec parse_experiment_spec(const std::string& text);

struct ExperimentResult {
    std::string csv;         // byte-reproducible under (spec, seed)
    nlohmann::json report;   // wall times, aggregates, trace samples
};

inline constexpr const char* kCsvHeader =
    "case,n_hyper,r,d_hyper,seed,n,delta,theta,C,S,rounds_total,rounds_logstar_components,"
    "recursion_depth,subinstances_A,subinstances_D,base_calls,slack_checks,violations";

ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Deterministic per-trial seed derivation.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

}  // namespace dcolor
