#pragma once

#include <optional>
#include <vector>

#include "ghzsim/hybrid.hpp"
#include "ghzsim/rng.hpp"
#include "ghzsim/source.hpp"

namespace ghz {

struct KerrParams {
    double theta = 0.01;              // cross-Kerr phase per photon
    Complex alpha = {1.0, 0.0};       // device input is |sqrt(2) alpha>
    std::optional<Complex> beta;      // second-stage probe; recorded, unused
    bool arm_swap = true;             // probe arm ordering convention (sign of the phase)
};

// Probe split on p1/p2, per-arm phase (n_j - 1)*theta from the Kerr medium
// plus the R(-theta) gate, recombination on a 50:50 BS. Signal Fock content
// is untouched (QND).
HybridState first_stage(const HybridState& signal, const KerrParams& params);

struct QndOutcome {
    int n = 0;
    double probability = 0.0;
    HybridState post_state;           // measured probe mode removed, renormalized
    PairCase decided = PairCase::Cross;  // Cross iff n == 0
};

// Photon-number projection |n><n| on the given probe mode, enumerated up to
// the truncation where the remaining tail mass is below 1e-12.
std::vector<QndOutcome> measure_probe_number(const HybridState& s, ModeId probe);

QndOutcome sample_probe_number(const HybridState& s, ModeId probe, Rng& rng);

// Phase shifter exp(i (n pi / 2) n_hat) on a1, erasing the heralded phase.
HybridState feed_forward(const HybridState& s, int n);

// Probability that a Same-case input is read as Cross (n = 0).
double misid_probability(double alpha, double theta);

// Drops a probe's coherent label; valid only when every term carries the
// same label (the probe is disentangled from the signal).
HybridState discard_probe(const HybridState& s, ModeId probe);

}  // namespace ghz
