#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ghzsim/modes.hpp"

namespace ghz {

using Complex = std::complex<double>;

inline constexpr double kStateTol = 1e-9;    // state equality / coherent rounding
inline constexpr double kAlgebraTol = 1e-12; // algebraic identities, term dropping

// Photon counts per mode. Sorted by mode code, no zero entries.
class FockOccupation {
  public:
    FockOccupation() = default;

    int count(ModeId m) const;
    void add(ModeId m, int delta);
    void set(ModeId m, int n);
    int total() const;

    const std::vector<std::pair<ModeId, int>>& entries() const { return occ_; }
    bool empty() const { return occ_.empty(); }

    auto operator<=>(const FockOccupation&) const = default;

  private:
    std::vector<std::pair<ModeId, int>> occ_;
};

// Coherent amplitudes on probe modes. Zero amplitudes stay explicit (an
// "active" probe in vacuum is not the same as an absent probe for the
// measurement stage). Sorted by mode code.
class CoherentAssignment {
  public:
    CoherentAssignment() = default;

    bool has(ModeId m) const;
    Complex amp(ModeId m) const;  // 0 if absent
    void set(ModeId m, Complex a);
    void remove(ModeId m);

    const std::vector<std::pair<ModeId, Complex>>& entries() const { return amp_; }
    bool empty() const { return amp_.empty(); }

    // Ordering/equality on amplitudes rounded to kStateTol, so canonical
    // merging is deterministic.
    static int compare(const CoherentAssignment& x, const CoherentAssignment& y);

  private:
    std::vector<std::pair<ModeId, Complex>> amp_;
};

struct HybridTerm {
    Complex amplitude;
    FockOccupation fock;
    CoherentAssignment coherent;
};

// Complex-weighted superposition of Fock occupations, each term optionally
// carrying coherent labels on probe modes. Every ket of the apparatus lives
// here. Values are treated as immutable once canonicalized.
struct HybridState {
    std::vector<HybridTerm> terms;

    static HybridState vacuum();
    static HybridState single_term(Complex amp, FockOccupation f,
                                   CoherentAssignment c = {});

    std::string dump_json() const;
};

HybridState canonicalize(const HybridState& s);
HybridState operator+(const HybridState& a, const HybridState& b);
HybridState scale(const HybridState& s, Complex factor);

Complex inner(const HybridState& a, const HybridState& b);
double norm(const HybridState& s);
HybridState normalized(const HybridState& s);
double fidelity_up_to_global_phase(const HybridState& a, const HybridState& b);

Complex coherent_overlap(Complex gamma, Complex delta);

struct EnsembleState {
    std::vector<std::pair<double, HybridState>> branches;
};

}  // namespace ghz
