#include "ghzsim/noise.hpp"

#include <stdexcept>

namespace ghz {

const char* pauli_name(PauliOp op) {
    switch (op) {
        case PauliOp::I: return "I";
        case PauliOp::X: return "X";
        case PauliOp::Z: return "Z";
        case PauliOp::XZ: return "XZ";
    }
    return "?";
}

std::optional<PauliOp> parse_pauli(std::string_view name) {
    if (name == "I") return PauliOp::I;
    if (name == "X") return PauliOp::X;
    if (name == "Z") return PauliOp::Z;
    if (name == "XZ" || name == "Y") return PauliOp::XZ;
    return std::nullopt;
}

bool PauliString::identity() const {
    for (PauliOp op : ops)
        if (op != PauliOp::I) return false;
    return true;
}

std::string PauliString::str() const {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i) s += '-';
        s += pauli_name(ops[i]);
    }
    return s;
}

void NoiseSpec::validate() const {
    if (is_explicit()) {
        for (const auto& [pos, op] : *explicit_ops)
            if (pos < 1 || pos > 4)
                throw std::invalid_argument("noise.explicit: position out of 1..4");
        return;
    }
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("noise.p: must be in [0,1]");
    for (int pos : positions)
        if (pos < 1 || pos > 4)
            throw std::invalid_argument("noise.positions: position out of 1..4");
}

namespace {
PositionGroup group_for(GroupBasis basis, int position) {
    return basis == GroupBasis::Dd ? dd_group(position) : ee_group(position);
}
}  // namespace

HybridState apply_pauli(const HybridState& s, int position, PauliOp op, GroupBasis basis) {
    if (op == PauliOp::I) return s;
    PositionGroup g = group_for(basis, position);
    ModeId uh = mode(g.upper, Pol::H), uv = mode(g.upper, Pol::V);
    ModeId lh = mode(g.lower, Pol::H), lv = mode(g.lower, Pol::V);

    HybridState out;
    for (const auto& term : s.terms) {
        int n_in_group = term.fock.count(uh) + term.fock.count(uv) +
                         term.fock.count(lh) + term.fock.count(lv);
        if (n_in_group != 1)
            throw std::invalid_argument("apply_pauli: position group must hold exactly one photon");
        HybridTerm t = term;
        if (op == PauliOp::X || op == PauliOp::XZ) {
            int h1 = t.fock.count(uh), v1 = t.fock.count(uv);
            int h2 = t.fock.count(lh), v2 = t.fock.count(lv);
            t.fock.set(uh, v1);
            t.fock.set(uv, h1);
            t.fock.set(lh, v2);
            t.fock.set(lv, h2);
        }
        if (op == PauliOp::Z || op == PauliOp::XZ) {
            int v_count = t.fock.count(uv) + t.fock.count(lv);
            if (v_count % 2) t.amplitude = -t.amplitude;
        }
        out.terms.push_back(std::move(t));
    }
    return canonicalize(out);
}

HybridState apply_pauli_string(const HybridState& s, const PauliString& ps, GroupBasis basis) {
    HybridState out = s;
    for (int pos = 1; pos <= 4; ++pos) out = apply_pauli(out, pos, ps.at(pos), basis);
    return out;
}

PauliString sample_pauli_string(const NoiseSpec& spec, Rng& rng) {
    spec.validate();
    PauliString ps;
    if (spec.is_explicit()) {
        for (const auto& [pos, op] : *spec.explicit_ops) ps.set(pos, op);
        return ps;
    }
    for (int pos : spec.positions) {
        double u = rng.next_double();
        if (u < 1.0 - spec.p)
            ps.set(pos, PauliOp::I);
        else if (u < 1.0 - spec.p + spec.p / 3.0)
            ps.set(pos, PauliOp::X);
        else if (u < 1.0 - spec.p + 2.0 * spec.p / 3.0)
            ps.set(pos, PauliOp::Z);
        else
            ps.set(pos, PauliOp::XZ);
    }
    return ps;
}

std::pair<PauliString, HybridState> depolarize_sample(const HybridState& s,
                                                      const NoiseSpec& spec, Rng& rng) {
    PauliString ps = sample_pauli_string(spec, rng);
    return {ps, apply_pauli_string(s, ps)};
}

namespace {
// Polarization words for psi_k: k -> (P_k, Q_k) with P paired to the
// d1 D2 d3 D4 + D1 d2 D3 d4 spatial part and Q to D1 D2 d3 d4 + d1 d2 D3 D4.
constexpr const char* kPWords[8] = {"HVVH", "HVHV", "HHVV", "HVVV",
                                    "HVHH", "HHVH", "HHHV", "HHHH"};
constexpr const char* kQWords[8] = {"VHHV", "VHVH", "VVHH", "VHHH",
                                    "VHVV", "VVHV", "VVVH", "VVVV"};

FockOccupation place(const char* pols, const std::array<bool, 4>& upper_rail) {
    FockOccupation f;
    for (int i = 0; i < 4; ++i) {
        PositionGroup g = dd_group(i + 1);
        Site s = upper_rail[i] ? g.upper : g.lower;
        f.add(mode(s, pols[i] == 'H' ? Pol::H : Pol::V), 1);
    }
    return f;
}
}  // namespace

HybridState canonical_noisy(int k, int sign) {
    if (k < 1 || k > 8 || (sign != 1 && sign != -1))
        throw std::invalid_argument("canonical_noisy: k in 1..8, sign +/-1");
    const char* p = kPWords[k - 1];
    const char* q = kQWords[k - 1];
    HybridState s;
    // P_k (d1 D2 d3 D4 + D1 d2 D3 d4) +/- Q_k (D1 D2 d3 d4 + d1 d2 D3 D4), all over 2.
    s.terms.push_back({0.5, place(p, {false, true, false, true}), {}});
    s.terms.push_back({0.5, place(p, {true, false, true, false}), {}});
    double sgn = 0.5 * sign;
    s.terms.push_back({sgn, place(q, {true, true, false, false}), {}});
    s.terms.push_back({sgn, place(q, {false, false, true, true}), {}});
    return canonicalize(s);
}

std::optional<NoisyClass> classify_noisy(const HybridState& s) {
    for (int k = 1; k <= 8; ++k) {
        for (int sign : {1, -1}) {
            if (fidelity_up_to_global_phase(s, canonical_noisy(k, sign)) > 1.0 - kStateTol)
                return NoisyClass{k, sign};
        }
    }
    return std::nullopt;
}

}  // namespace ghz
