#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghzsim/hybrid.hpp"
#include "ghzsim/rng.hpp"

namespace ghz {

// Polarization-qubit errors. XZ is X then Z, with Z|V> = -|V>; this is the
// physicist's Y up to a global phase.
enum class PauliOp : uint8_t { I, X, Z, XZ };

const char* pauli_name(PauliOp op);
std::optional<PauliOp> parse_pauli(std::string_view name);

struct PauliString {
    std::array<PauliOp, 4> ops{PauliOp::I, PauliOp::I, PauliOp::I, PauliOp::I};

    PauliOp at(int position) const { return ops[position - 1]; }
    void set(int position, PauliOp op) { ops[position - 1] = op; }
    bool identity() const;
    std::string str() const;  // "I-X-Z-XZ"
};

// Depolarization on the transmission rails. Default positions {2,3,4}
// keep position 1 faultless.
struct NoiseSpec {
    std::optional<std::map<int, PauliOp>> explicit_ops;
    double p = 0.0;
    std::vector<int> positions = {2, 3, 4};

    bool is_explicit() const { return explicit_ops.has_value(); }
    void validate() const;  // throws std::invalid_argument
};

// Rail pair the position groups live on.
enum class GroupBasis { Dd, Ee };

HybridState apply_pauli(const HybridState& s, int position, PauliOp op,
                        GroupBasis basis = GroupBasis::Dd);
HybridState apply_pauli_string(const HybridState& s, const PauliString& ps,
                               GroupBasis basis = GroupBasis::Dd);

PauliString sample_pauli_string(const NoiseSpec& spec, Rng& rng);

std::pair<PauliString, HybridState> depolarize_sample(const HybridState& s,
                                                      const NoiseSpec& spec, Rng& rng);

// The sixteen canonical noisy states psi_k^{s} over the D/d rails,
// k in 1..8, sign in {+1,-1}. psi_1^+ is the noiseless postselected state.
HybridState canonical_noisy(int k, int sign);

struct NoisyClass {
    int k;     // 1..8
    int sign;  // +1 / -1
};

std::optional<NoisyClass> classify_noisy(const HybridState& s);

}  // namespace ghz
