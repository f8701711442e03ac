#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ghzsim/runner.hpp"
#include "ghzsim/verify.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitConfigError = 2;

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    return file;
}

int cmd_verify() {
    bool all_pass = true;
    for (const auto& r : ghz::verify_suite()) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : kExitVerifyFail;
}

int cmd_prepare(const std::string& case_name, const std::string& out_path) {
    ghz::PairCase c;
    if (case_name == "cross")
        c = ghz::PairCase::Cross;
    else if (case_name == "same")
        c = ghz::PairCase::Same;
    else if (case_name == "physical")
        c = ghz::PairCase::Physical;
    else
        throw ghz::ConfigError("case", "expected cross|same|physical");

    ghz::PreparationResult res = ghz::prepare(c);
    nlohmann::ordered_json j;
    j["case"] = ghz::pair_case_name(c);
    j["probability"] = res.probability;
    j["state"] = nlohmann::ordered_json::parse(res.state.dump_json());
    std::ofstream file;
    open_out(file, out_path) << j.dump(2) << "\n";
    return 0;
}

int cmd_purify_sweep(const std::string& case_name, const std::string& out_path,
                     const std::string& format) {
    ghz::PairCase c = case_name == "same" ? ghz::PairCase::Same : ghz::PairCase::Cross;
    if (case_name != "same" && case_name != "cross")
        throw ghz::ConfigError("case", "expected cross|same");
    std::vector<int> positions = c == ghz::PairCase::Cross ? std::vector<int>{2, 3, 4}
                                                           : std::vector<int>{1, 2, 3, 4};
    std::vector<ghz::PauliString> strings{ghz::PauliString{}};
    for (int pos : positions) {
        std::vector<ghz::PauliString> next;
        for (const auto& base : strings)
            for (ghz::PauliOp op :
                 {ghz::PauliOp::I, ghz::PauliOp::X, ghz::PauliOp::Z, ghz::PauliOp::XZ}) {
                ghz::PauliString ps = base;
                ps.set(pos, op);
                next.push_back(ps);
            }
        strings = std::move(next);
    }

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    if (format == "csv") {
        out << "syndrome,pattern,probability,fidelity\n";
        out.precision(17);
        for (const auto& ps : strings)
            for (const auto& o : ghz::purify_enumerate(c, ps))
                out << ps.str() << ',' << o.pattern.str() << ',' << o.probability << ','
                    << o.fidelity << "\n";
    } else {
        for (const auto& ps : strings)
            for (const auto& o : ghz::purify_enumerate(c, ps)) {
                nlohmann::ordered_json j{{"syndrome", ps.str()},
                                         {"pattern", o.pattern.str()},
                                         {"probability", o.probability},
                                         {"fidelity", o.fidelity}};
                out << j.dump() << "\n";
            }
    }
    return 0;
}

int cmd_qnd_sweep(const std::vector<double>& alphas, const std::vector<double>& thetas,
                  uint64_t shots, uint64_t seed, const std::string& out_path) {
    struct Row {
        double alpha, theta, closed, enumerated, mean_n;
    };
    std::vector<std::pair<double, double>> grid;
    for (double a : alphas)
        for (double t : thetas) grid.push_back({a, t});
    std::vector<Row> rows(grid.size());

    const ghz::ModeId p2 = ghz::probe_mode(ghz::Site::p2);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(grid.size()); ++i) {
        auto [a, t] = grid[i];
        ghz::KerrParams kp;
        kp.alpha = {a, 0.0};
        kp.theta = t;
        const double r = 1.0 / std::sqrt(2.0);
        ghz::FockOccupation f02, f20;
        f02.add(ghz::mode(ghz::Site::a2, ghz::Pol::H), 2);
        f20.add(ghz::mode(ghz::Site::a1, ghz::Pol::H), 2);
        ghz::HybridState same = ghz::scale(ghz::HybridState::single_term({1.0, 0.0}, f02), r) +
                                ghz::scale(ghz::HybridState::single_term({1.0, 0.0}, f20), r);
        auto outcomes = ghz::measure_probe_number(ghz::first_stage(same, kp), p2);
        double p0 = 0.0;
        std::vector<double> w;
        for (const auto& o : outcomes) {
            if (o.n == 0) p0 = o.probability;
            w.push_back(o.probability);
        }
        double mean_n = 0.0;
        ghz::Rng rng = ghz::Rng::substream(seed, static_cast<uint64_t>(i));
        for (uint64_t s = 0; s < shots; ++s) mean_n += outcomes[rng.pick(w)].n;
        if (shots) mean_n /= static_cast<double>(shots);
        rows[i] = {a, t, ghz::misid_probability(a, t), p0, mean_n};
    }

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << "alpha,theta,p_misid_closed_form,p_misid_enumerated,mean_n,shots\n";
    out.precision(17);
    for (const auto& r : rows)
        out << r.alpha << ',' << r.theta << ',' << r.closed << ',' << r.enumerated << ','
            << r.mean_n << ',' << shots << "\n";
    return 0;
}

int cmd_sample(const std::string& config_path, std::optional<uint64_t> seed,
               std::optional<uint64_t> shots, const std::string& out_path,
               const std::string& format, bool serial) {
    ghz::Scenario sc = ghz::load_scenario(config_path);
    if (seed) sc.seed = *seed;
    if (shots) sc.shots = *shots;
    sc.validate();

    ghz::RunReport report = ghz::run_scenario(
        sc, serial ? ghz::ExecutionMode::Serial : ghz::ExecutionMode::Parallel);
    for (const auto& o : sc.outputs) ghz::write_report(report, o.path, o.format);
    if (!out_path.empty()) {
        ghz::write_report(report, out_path, format);
    } else if (sc.outputs.empty()) {
        if (format == "csv")
            std::cout << report.to_csv();
        else
            std::cout << report.to_json().dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Four-photon GHZ preparation, purification and QND simulator"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run every derivation check");

    std::string case_name = "cross";
    std::string out_path;
    std::string format = "json";

    auto* prepare = app.add_subcommand("prepare", "Prepare a state and dump it");
    prepare->add_option("--case", case_name, "cross|same|physical");
    prepare->add_option("--out", out_path, "output path (stdout if omitted)");

    auto* psweep = app.add_subcommand("purify-sweep", "Enumerate all syndromes end to end");
    psweep->add_option("--case", case_name, "cross|same");
    psweep->add_option("--out", out_path, "output path");
    psweep->add_option("--format", format, "json|csv");

    std::vector<double> alphas{0.5, 1.0, 2.0, 5.0};
    std::vector<double> thetas{0.001, 0.01, 0.1, 0.3};
    uint64_t sweep_shots = 10000;
    uint64_t seed_flag = 0;
    auto* qsweep = app.add_subcommand("qnd-sweep", "Sweep (alpha, theta) misidentification grid");
    qsweep->add_option("--alpha", alphas, "probe amplitudes")->delimiter(',');
    qsweep->add_option("--theta", thetas, "Kerr phases")->delimiter(',');
    qsweep->add_option("--shots", sweep_shots, "MC shots per grid point for mean_n");
    qsweep->add_option("--seed", seed_flag, "RNG seed");
    qsweep->add_option("--out", out_path, "output path");

    std::string config_path;
    bool serial = false;
    std::optional<uint64_t> seed_opt, shots_opt;
    auto* sample = app.add_subcommand("sample", "Run a scenario from a TOML config");
    sample->add_option("--config", config_path, "scenario TOML file")->required();
    sample->add_option_function<uint64_t>(
        "--seed", [&](uint64_t v) { seed_opt = v; }, "override config seed");
    sample->add_option_function<uint64_t>(
        "--shots", [&](uint64_t v) { shots_opt = v; }, "override config shots");
    sample->add_option("--out", out_path, "output path");
    sample->add_option("--format", format, "json|csv");
    sample->add_flag("--serial", serial, "serial reference execution");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify();
        if (prepare->parsed()) return cmd_prepare(case_name, out_path);
        if (psweep->parsed()) return cmd_purify_sweep(case_name, out_path, format);
        if (qsweep->parsed())
            return cmd_qnd_sweep(alphas, thetas, sweep_shots, seed_flag, out_path);
        if (sample->parsed())
            return cmd_sample(config_path, seed_opt, shots_opt, out_path, format, serial);
    } catch (const ghz::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
