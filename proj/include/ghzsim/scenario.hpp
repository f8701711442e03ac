#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzsim/kerr.hpp"
#include "ghzsim/noise.hpp"
#include "ghzsim/source.hpp"

#include <nlohmann/json.hpp>

namespace ghz {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_path(field) {}
    std::string field_path;
};

struct OutputSpec {
    std::string path;
    std::string format;  // "json" | "csv"
};

struct Scenario {
    // Single case carries weight 1; a mix must sum to 1.
    std::vector<std::pair<PairCase, double>> case_weights = {{PairCase::Cross, 1.0}};
    std::optional<NoiseSpec> noise;
    std::optional<KerrParams> kerr;
    uint64_t shots = 1;
    uint64_t seed = 0;
    std::vector<OutputSpec> outputs;

    bool mixed_case() const { return case_weights.size() > 1; }
    void validate() const;  // throws ConfigError
    nlohmann::ordered_json echo() const;
};

// Minimal TOML subset: [table] / [[array-of-table]] headers, bare or quoted
// keys, string / integer / float / boolean / flat-array values, # comments.
nlohmann::ordered_json parse_toml_lite(const std::string& text);

Scenario scenario_from_toml(const std::string& text);
Scenario load_scenario(const std::string& path);

}  // namespace ghz
