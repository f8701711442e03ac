#pragma once

#include <optional>

#include "ghzsim/elements.hpp"
#include "ghzsim/noise.hpp"
#include "ghzsim/source.hpp"

namespace ghz {

struct PreparationResult {
    double probability = 0.0;   // postselection probability
    HybridState state;          // normalized post-measurement state (empty if probability 0)
    PairCase case_used = PairCase::Cross;

    bool empty() const { return state.terms.empty(); }
};

// Composite front end a/b -> D/d (the per-photon splitting rules).
ModeMap front_end_map();

// Projects onto exactly one photon per position group {D_k, d_k}.
PreparationResult postselect_coincidence(const HybridState& s);

// HWP on the D rail then PBS into E/e, per position. Acts as a pure
// relabeling: (d,H)->(e,H); (d,V)->(E,V); (D,H)->(e,V); (D,V)->(E,H).
ModeMap back_end_map();

// Full pipeline: source -> front end -> postselection -> noise (on the D/d
// rails) -> back end. The returned state lives on the E/e rails.
PreparationResult prepare(PairCase c, const PauliString& error);
PreparationResult prepare(PairCase c);

}  // namespace ghz
