#pragma once

#include <string>
#include <vector>

#include "ghzsim/purification.hpp"

namespace ghz {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Derivation checks: prepared-state identities, postselection probabilities,
// the sixteen-state family and its back-end evolution, the correction table
// round trip and its independent re-derivation, purification closure, the
// faultless-position-1 constraint, the QND amplitudes and feed-forward, and
// three-photon extraction.
std::vector<CheckResult> verify_suite();

// Table round-trip check against an arbitrary table (fault injection hook).
CheckResult verify_table(const CorrectionTable& table);

// Reference-state builders used by the checks.
HybridState postselected_same_state();
HybridState postselected_cross_state();
HybridState output_same_state();
HybridState output_cross_state();
HybridState evolved_noisy(int k, int sign);

}  // namespace ghz
