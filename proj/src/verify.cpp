#include "ghzsim/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "ghzsim/kerr.hpp"

namespace ghz {

namespace {
FockOccupation dd_term(const char* word, const std::array<bool, 4>& upper) {
    FockOccupation f;
    for (int i = 0; i < 4; ++i) {
        PositionGroup g = dd_group(i + 1);
        f.add(mode(upper[i] ? g.upper : g.lower, word[i] == 'H' ? Pol::H : Pol::V), 1);
    }
    return f;
}

FockOccupation ee_term(const char* word, const char* pattern) {
    FockOccupation f;
    for (int i = 0; i < 4; ++i) {
        PositionGroup g = ee_group(i + 1);
        f.add(mode(pattern[i] == 'E' ? g.upper : g.lower, word[i] == 'H' ? Pol::H : Pol::V), 1);
    }
    return f;
}

HybridState four_terms(std::array<std::pair<FockOccupation, double>, 4> terms) {
    HybridState s;
    for (auto& [f, a] : terms) s.terms.push_back({a, std::move(f), {}});
    return canonicalize(s);
}
}  // namespace

HybridState postselected_same_state() {
    return four_terms({{{dd_term("HVVH", {true, true, true, true}), 0.5},
                        {dd_term("VHHV", {true, true, true, true}), 0.5},
                        {dd_term("HVVH", {false, false, false, false}), 0.5},
                        {dd_term("VHHV", {false, false, false, false}), 0.5}}});
}

HybridState postselected_cross_state() {
    return four_terms({{{dd_term("HVVH", {true, false, true, false}), 0.5},
                        {dd_term("HVVH", {false, true, false, true}), 0.5},
                        {dd_term("VHHV", {false, false, true, true}), 0.5},
                        {dd_term("VHHV", {true, true, false, false}), 0.5}}});
}

HybridState output_same_state() {
    return four_terms({{{ee_term("HVVH", "eEEe"), 0.5},
                        {ee_term("VHHV", "eEEe"), 0.5},
                        {ee_term("HVVH", "EeeE"), 0.5},
                        {ee_term("VHHV", "EeeE"), 0.5}}});
}

HybridState output_cross_state() {
    return four_terms({{{ee_term("HHVV", "eEEe"), 0.5},
                        {ee_term("VVHH", "eEEe"), 0.5},
                        {ee_term("HVHV", "EeeE"), 0.5},
                        {ee_term("VHVH", "EeeE"), 0.5}}});
}

HybridState evolved_noisy(int k, int sign) {
    struct Row {
        const char* p1;
        const char* p2;
        const char* pat_p;
        const char* q1;
        const char* q2;
        const char* pat_q;
    };
    static constexpr Row rows[8] = {
        {"HHVV", "VVHH", "eEEe", "HVHV", "VHVH", "EeeE"},
        {"HHHH", "VVVV", "eEeE", "HVVH", "VHHV", "EeEe"},
        {"HVVH", "VHHV", "eeEE", "HHHH", "VVVV", "EEee"},
        {"HHVH", "VVHV", "eEEE", "HVHH", "VHVV", "Eeee"},
        {"HHHV", "VVVH", "eEee", "HVVV", "VHHH", "EeEE"},
        {"HVVV", "VHHH", "eeEe", "HHHV", "VVVH", "EEeE"},
        {"HVHH", "VHVV", "eeeE", "HHVH", "VVHV", "EEEe"},
        {"HVHV", "VHVH", "eeee", "HHVV", "VVHH", "EEEE"},
    };
    const Row& r = rows[k - 1];
    double sg = 0.5 * sign;
    return four_terms({{{ee_term(r.p1, r.pat_p), 0.5},
                        {ee_term(r.p2, r.pat_p), 0.5},
                        {ee_term(r.q1, r.pat_q), sg},
                        {ee_term(r.q2, r.pat_q), sg}}});
}

namespace {
using Check = std::function<CheckResult()>;

CheckResult make(const std::string& name, bool pass, const std::string& detail = "") {
    return {name, pass, detail};
}

std::string fmt(double x) {
    std::ostringstream o;
    o.precision(12);
    o << x;
    return o.str();
}

std::vector<PauliString> all_strings(const std::vector<int>& positions) {
    std::vector<PauliString> out{PauliString{}};
    for (int pos : positions) {
        std::vector<PauliString> next;
        for (const auto& base : out) {
            for (PauliOp op : {PauliOp::I, PauliOp::X, PauliOp::Z, PauliOp::XZ}) {
                PauliString ps = base;
                ps.set(pos, op);
                next.push_back(ps);
            }
        }
        out = std::move(next);
    }
    return out;
}

CheckResult check_state_derivations() {
    HybridState routed_c = apply_map(front_end_map(), emit_two_pairs(PairCase::Cross));
    PreparationResult post_c = postselect_coincidence(routed_c);
    HybridState routed_s = apply_map(front_end_map(), emit_two_pairs(PairCase::Same));
    PreparationResult post_s = postselect_coincidence(routed_s);

    double f8 = fidelity_up_to_global_phase(post_c.state, postselected_cross_state());
    double f7 = fidelity_up_to_global_phase(post_s.state, postselected_same_state());
    double f10 = fidelity_up_to_global_phase(prepare(PairCase::Cross).state, output_cross_state());
    double f9 = fidelity_up_to_global_phase(prepare(PairCase::Same).state, output_same_state());
    bool ok = f7 >= 1 - 1e-9 && f8 >= 1 - 1e-9 && f9 >= 1 - 1e-9 && f10 >= 1 - 1e-9;
    return make("state-derivations (postselected and back-end states)", ok,
                "fidelities " + fmt(f7) + " " + fmt(f8) + " " + fmt(f9) + " " + fmt(f10));
}

CheckResult check_postselection_probabilities() {
    double pc = postselect_coincidence(apply_map(front_end_map(), emit_two_pairs(PairCase::Cross)))
                    .probability;
    double ps = postselect_coincidence(apply_map(front_end_map(), emit_two_pairs(PairCase::Same)))
                    .probability;
    bool ok = std::abs(pc - 1.0 / 16.0) < 1e-12 && std::abs(ps - 1.0 / 24.0) < 1e-12;
    return make("postselection probabilities 1/16 and 1/24", ok,
                "cross " + fmt(pc) + ", same " + fmt(ps));
}

CheckResult check_noisy_family() {
    double worst = 1.0;
    for (int k = 1; k <= 8; ++k) {
        for (int sign : {1, -1}) {
            HybridState evolved = apply_map(back_end_map(), canonical_noisy(k, sign));
            worst = std::min(worst, fidelity_up_to_global_phase(evolved, evolved_noisy(k, sign)));
        }
    }
    double max_overlap = 0.0;
    for (int i = 0; i < 16; ++i) {
        for (int j = i + 1; j < 16; ++j) {
            HybridState a = canonical_noisy(i / 2 + 1, i % 2 ? -1 : 1);
            HybridState b = canonical_noisy(j / 2 + 1, j % 2 ? -1 : 1);
            max_overlap = std::max(max_overlap, std::abs(inner(a, b)));
        }
    }
    bool ok = worst >= 1 - 1e-9 && max_overlap < 1e-12;
    return make("sixteen-state family: back-end evolution and orthogonality", ok,
                "worst fidelity " + fmt(worst) + ", max overlap " + fmt(max_overlap));
}

CheckResult check_purification_closure() {
    double worst = 1.0;
    size_t count = 0;
    for (const auto& ps : all_strings({2, 3, 4})) {
        for (const auto& o : purify_enumerate(PairCase::Cross, ps)) {
            worst = std::min(worst, o.fidelity);
            ++count;
        }
    }
    for (const auto& ps : all_strings({1, 2, 3, 4})) {
        for (const auto& o : purify_enumerate(PairCase::Same, ps)) {
            worst = std::min(worst, o.fidelity);
            ++count;
        }
    }
    bool ok = worst >= 1 - 1e-9;
    return make("purification closure over 64 + 256 syndromes", ok,
                "worst fidelity " + fmt(worst) + " over " + std::to_string(count) + " outcomes");
}

CheckResult check_brute_force_masks() {
    // Independent mask search over every reachable (noisy state, pattern).
    auto run = [&](PairCase c, const std::vector<int>& positions) -> bool {
        for (const auto& ps : all_strings(positions)) {
            PreparationResult prep = prepare(c, ps);
            CaseTag tag = c == PairCase::Same ? CaseTag::Same : CaseTag::Cross;
            for (const auto& det : measure_fcd(prep.state)) {
                bool any = false;
                bool table_ok = false;
                XMask table_mask = CorrectionTable::standard().lookup(det.pattern, tag);
                for (int bits = 0; bits < 16; ++bits) {
                    XMask m;
                    for (int i = 0; i < 4; ++i) m.bits[i] = (bits >> i) & 1;
                    double f = ghz_fidelity(apply_xmask(det.collapsed, m));
                    if (f >= 1 - 1e-9) {
                        any = true;
                        if (m == table_mask) table_ok = true;
                    }
                }
                if (!any || !table_ok) return false;
            }
        }
        return true;
    };
    bool ok = run(PairCase::Cross, {2, 3, 4}) && run(PairCase::Same, {1, 2, 3, 4});
    return make("brute-force mask search never contradicts the table", ok);
}

CheckResult check_faultless_position_1() {
    // Bit flips on position 1 leave the sixteen-state family. A lone phase
    // flip there is indistinguishable from phase flips on positions 2-4
    // (Z x Z x Z x Z acts as the identity on the family), so it classifies
    // as psi_1^- and is corrected for free; it is not a detectable fault.
    bool classify_ok = true;
    for (PauliOp op : {PauliOp::X, PauliOp::XZ}) {
        HybridState corrupted = apply_pauli(postselected_cross_state(), 1, op);
        if (classify_noisy(corrupted).has_value()) classify_ok = false;
    }
    auto z1 = classify_noisy(apply_pauli(postselected_cross_state(), 1, PauliOp::Z));
    classify_ok = classify_ok && z1.has_value() && z1->k == 1 && z1->sign == -1;
    // X on position 1 must break at least one tabulated correction.
    PauliString ps;
    ps.set(1, PauliOp::X);
    double min_fid = 1.0;
    for (const auto& o : purify_enumerate(PairCase::Cross, ps))
        min_fid = std::min(min_fid, o.fidelity);
    bool ok = classify_ok && min_fid < 1 - 1e-3;
    return make("faultless-position-1 constraint (cross case)", ok,
                "min corrected fidelity " + fmt(min_fid));
}

HybridState two_mode_signal(int n1, int n2) {
    FockOccupation f;
    if (n1) f.add(mode(Site::a1, Pol::H), n1);
    if (n2) f.add(mode(Site::a2, Pol::H), n2);
    return HybridState::single_term({1.0, 0.0}, f);
}

HybridState same_superposition() {
    const double r = 1.0 / std::sqrt(2.0);
    HybridState s = scale(two_mode_signal(0, 2), r) + scale(two_mode_signal(2, 0), r);
    return s;
}

CheckResult check_qnd_amplitudes() {
    KerrParams kp;
    kp.alpha = {1.0, 0.0};
    kp.theta = 0.01;
    const double s2 = std::sqrt(2.0);
    ModeId p1 = probe_mode(Site::p1), p2 = probe_mode(Site::p2);

    HybridState cross = first_stage(two_mode_signal(1, 1), kp);
    bool ok29 = cross.terms.size() == 1 &&
                std::abs(cross.terms[0].coherent.amp(p1) - Complex{s2, 0.0}) < 1e-12 &&
                std::abs(cross.terms[0].coherent.amp(p2)) < 1e-12;

    HybridState same = first_stage(same_superposition(), kp);
    bool ok30 = same.terms.size() == 2;
    if (ok30) {
        for (const auto& t : same.terms) {
            bool is02 = t.fock.count(mode(Site::a2, Pol::H)) == 2;
            Complex want2 = is02 ? Complex{0.0, s2 * std::sin(kp.theta)}
                                 : Complex{0.0, -s2 * std::sin(kp.theta)};
            if (std::abs(t.coherent.amp(p1) - Complex{s2 * std::cos(kp.theta), 0.0}) > 1e-12)
                ok30 = false;
            if (std::abs(t.coherent.amp(p2) - want2) > 1e-12) ok30 = false;
        }
    }

    // Poisson law of the herald and agreement with the closed form.
    bool ok_poisson = true;
    double r2 = 2.0 * std::sin(kp.theta) * std::sin(kp.theta);  // alpha = 1
    auto outcomes = measure_probe_number(same, p2);
    double p0 = 0.0, total = 0.0;
    for (const auto& o : outcomes) {
        double want = std::exp(-r2) * std::pow(r2, o.n) / std::tgamma(o.n + 1.0);
        if (std::abs(o.probability - want) > 1e-9) ok_poisson = false;
        if (o.n == 0) p0 = o.probability;
        total += o.probability;
    }
    ok_poisson = ok_poisson && std::abs(p0 - misid_probability(1.0, 0.01)) < 1e-9 &&
                 std::abs(total - 1.0) < 1e-9;

    return make("QND first-stage amplitudes and herald statistics", ok29 && ok30 && ok_poisson);
}

CheckResult check_feed_forward() {
    KerrParams kp;
    kp.alpha = {2.0, 0.0};
    kp.theta = 0.3;
    ModeId p1 = probe_mode(Site::p1), p2 = probe_mode(Site::p2);
    HybridState staged = first_stage(same_superposition(), kp);
    HybridState target = same_superposition();
    double worst = 1.0;
    for (const auto& o : measure_probe_number(staged, p2)) {
        if (o.n == 0) continue;  // misidentified branch, no erasure defined
        HybridState restored = discard_probe(feed_forward(o.post_state, o.n), p1);
        worst = std::min(worst, fidelity_up_to_global_phase(restored, target));
    }
    return make("feed-forward phase erasure for all enumerated n", worst >= 1 - 1e-9,
                "worst fidelity " + fmt(worst));
}

CheckResult check_hom() {
    FockOccupation f;
    f.add(mode(Site::a1, Pol::H), 1);
    f.add(mode(Site::a2, Pol::H), 1);
    HybridState in = HybridState::single_term({1.0, 0.0}, f);
    HybridState out = apply_map(bs50(Site::a1, Site::a2), in);
    double coincidence = 0.0;
    for (const auto& t : out.terms)
        if (t.fock.count(mode(Site::a1, Pol::H)) == 1 &&
            t.fock.count(mode(Site::a2, Pol::H)) == 1)
            coincidence += std::norm(t.amplitude);
    return make("Hong-Ou-Mandel coincidence suppression", coincidence < 1e-12,
                "coincidence probability " + fmt(coincidence));
}

CheckResult check_three_photon() {
    double worst = 1.0;
    for (int pos = 1; pos <= 4; ++pos) {
        for (const auto& o : extract_three_photon_enumerate(ghz4(), pos))
            worst = std::min(worst, fidelity_up_to_global_phase(o.state3, ghz3(pos)));
    }
    return make("three-photon GHZ extraction for both outcomes", worst >= 1 - 1e-9,
                "worst fidelity " + fmt(worst));
}
}  // namespace

CheckResult verify_table(const CorrectionTable& table) {
    double worst = 1.0;
    for (const auto& ps : all_strings({2, 3, 4})) {
        for (const auto& det : measure_fcd(prepare(PairCase::Cross, ps).state)) {
            XMask m = table.lookup(det.pattern, CaseTag::Cross);
            worst = std::min(worst, ghz_fidelity(apply_xmask(det.collapsed, m)));
        }
    }
    for (const auto& ps : all_strings({1, 2, 3, 4})) {
        for (const auto& det : measure_fcd(prepare(PairCase::Same, ps).state)) {
            XMask m = table.lookup(det.pattern, CaseTag::Same);
            worst = std::min(worst, ghz_fidelity(apply_xmask(det.collapsed, m)));
        }
    }
    return make("correction table round trip (32 entries)", worst >= 1 - 1e-9,
                "worst fidelity " + fmt(worst));
}

std::vector<CheckResult> verify_suite() {
    std::vector<CheckResult> results;
    results.push_back(check_state_derivations());
    results.push_back(check_postselection_probabilities());
    results.push_back(check_noisy_family());
    results.push_back(verify_table(CorrectionTable::standard()));
    results.push_back(check_brute_force_masks());
    results.push_back(check_purification_closure());
    results.push_back(check_faultless_position_1());
    results.push_back(check_qnd_amplitudes());
    results.push_back(check_feed_forward());
    results.push_back(check_hom());
    results.push_back(check_three_photon());
    return results;
}

}  // namespace ghz
