#pragma once

#include "ghzsim/hybrid.hpp"

namespace ghz {

// Emission cases of the double-pair source: Cross is one photon in each of
// a1, b1, a2, b2; Same is both pairs on one arm pair, superposed over the
// two arm pairs; Physical is the full second-order expansion containing
// both components with bosonic weights.
enum class PairCase { Cross, Same, Physical };

const char* pair_case_name(PairCase c);

// (|H>_a |V>_b - |V>_a |H>_b) / sqrt(2)
HybridState emit_singlet(Site a_site, Site b_site);

HybridState emit_two_pairs(PairCase c);

}  // namespace ghz
