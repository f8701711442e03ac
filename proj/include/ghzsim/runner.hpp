#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghzsim/scenario.hpp"

namespace ghz {

struct ShotRecord {
    uint64_t shot = 0;
    std::string case_true;
    std::string case_decided;
    std::string syndrome;  // "I-X-Z-XZ"
    std::string pattern;   // "e1E2e3E4"
    int n = -1;            // QND herald, -1 when no kerr stage configured
    double fidelity = 0.0;
};

struct RunReport {
    nlohmann::ordered_json config;
    std::string rng_name;
    uint64_t seed = 0;
    bool case_known = true;
    std::vector<ShotRecord> records;

    // Aggregates, recomputable from the records.
    double mean_fidelity = 0.0;
    std::map<std::string, uint64_t> pattern_hist;
    std::map<std::string, uint64_t> decision_confusion;  // "true->decided" counts

    void recompute_aggregates();
    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
};

enum class ExecutionMode { Serial, Parallel };

RunReport run_scenario(const Scenario& sc, ExecutionMode mode = ExecutionMode::Parallel);

void write_report(const RunReport& report, const std::string& path, const std::string& format);

}  // namespace ghz
