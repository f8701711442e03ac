#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ghzsim/network.hpp"
#include "ghzsim/rng.hpp"

namespace ghz {

// Which detector fired per position: true = E_k, false = e_k.
struct FcdPattern {
    std::array<bool, 4> big{false, false, false, false};

    int index() const;  // 0..15
    static FcdPattern from_index(int idx);
    std::string str() const;  // "e1E2e3E4"
    static std::optional<FcdPattern> parse(std::string_view s);

    auto operator<=>(const FcdPattern&) const = default;
};

// Bit-flip corrections: apply sigma_x at position k iff bits[k-1].
struct XMask {
    std::array<bool, 4> bits{false, false, false, false};

    std::string str() const;  // "IXXI"
    auto operator<=>(const XMask&) const = default;
};

// Two-way case label for the correction table (the Physical source decays
// into one of these at QND time).
enum class CaseTag { Same, Cross };

const char* case_tag_name(CaseTag t);

class CorrectionTable {
  public:
    static const CorrectionTable& standard();

    XMask lookup(const FcdPattern& pattern, CaseTag c) const;
    void set(const FcdPattern& pattern, CaseTag c, XMask mask);
    std::string to_csv() const;  // pattern,case,mask

  private:
    std::array<XMask, 32> entries_{};
};

struct DetectionOutcome {
    FcdPattern pattern;
    double probability = 0.0;
    HybridState collapsed;  // 4-qubit polarization state, indexed on the E sites
};

// Groups a state on the E/e rails by fourfold-coincidence pattern; collapsed
// states keep only the polarization content, one qubit per position.
std::vector<DetectionOutcome> measure_fcd(const HybridState& s);

HybridState apply_xmask(const HybridState& polstate, const XMask& mask);

HybridState ghz4();
double ghz_fidelity(const HybridState& polstate);

struct PurifyOutcome {
    FcdPattern pattern;
    double probability = 0.0;
    double fidelity = 0.0;
};

// Full purification round with every detection outcome enumerated.
std::vector<PurifyOutcome> purify_enumerate(PairCase c, const PauliString& error);

// Sampled variant: one detection outcome drawn from the rng.
std::pair<FcdPattern, double> purify(PairCase c, const PauliString& error, Rng& rng);

struct ExtractionOutcome {
    Pol outcome;
    double probability = 0.0;
    HybridState state3;  // 3-qubit state on the remaining E sites
};

std::vector<ExtractionOutcome> extract_three_photon_enumerate(const HybridState& polstate,
                                                              int position);
std::pair<Pol, HybridState> extract_three_photon(const HybridState& polstate, int position,
                                                 Rng& rng);

// GHZ3 target on the E sites other than `removed_position`.
HybridState ghz3(int removed_position);

}  // namespace ghz
