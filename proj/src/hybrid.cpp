#include "ghzsim/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ghz {

int FockOccupation::count(ModeId m) const {
    auto it = std::lower_bound(occ_.begin(), occ_.end(), m,
                               [](const auto& e, ModeId k) { return e.first < k; });
    return (it != occ_.end() && it->first == m) ? it->second : 0;
}

void FockOccupation::add(ModeId m, int delta) { set(m, count(m) + delta); }

void FockOccupation::set(ModeId m, int n) {
    if (n < 0) throw std::invalid_argument("negative photon count");
    auto it = std::lower_bound(occ_.begin(), occ_.end(), m,
                               [](const auto& e, ModeId k) { return e.first < k; });
    if (it != occ_.end() && it->first == m) {
        if (n == 0)
            occ_.erase(it);
        else
            it->second = n;
    } else if (n != 0) {
        occ_.insert(it, {m, n});
    }
}

int FockOccupation::total() const {
    int t = 0;
    for (const auto& [m, n] : occ_) t += n;
    return t;
}

bool CoherentAssignment::has(ModeId m) const {
    for (const auto& [k, a] : amp_)
        if (k == m) return true;
    return false;
}

Complex CoherentAssignment::amp(ModeId m) const {
    for (const auto& [k, a] : amp_)
        if (k == m) return a;
    return {0.0, 0.0};
}

void CoherentAssignment::set(ModeId m, Complex a) {
    auto it = std::lower_bound(amp_.begin(), amp_.end(), m,
                               [](const auto& e, ModeId k) { return e.first < k; });
    if (it != amp_.end() && it->first == m)
        it->second = a;
    else
        amp_.insert(it, {m, a});
}

void CoherentAssignment::remove(ModeId m) {
    std::erase_if(amp_, [&](const auto& e) { return e.first == m; });
}

namespace {
int64_t round_tol(double x) { return llround(x / kStateTol); }
}  // namespace

int CoherentAssignment::compare(const CoherentAssignment& x, const CoherentAssignment& y) {
    size_t n = std::min(x.amp_.size(), y.amp_.size());
    for (size_t i = 0; i < n; ++i) {
        if (x.amp_[i].first != y.amp_[i].first)
            return x.amp_[i].first < y.amp_[i].first ? -1 : 1;
        int64_t xr = round_tol(x.amp_[i].second.real());
        int64_t yr = round_tol(y.amp_[i].second.real());
        if (xr != yr) return xr < yr ? -1 : 1;
        int64_t xi = round_tol(x.amp_[i].second.imag());
        int64_t yi = round_tol(y.amp_[i].second.imag());
        if (xi != yi) return xi < yi ? -1 : 1;
    }
    if (x.amp_.size() != y.amp_.size()) return x.amp_.size() < y.amp_.size() ? -1 : 1;
    return 0;
}

HybridState HybridState::vacuum() {
    return single_term({1.0, 0.0}, {});
}

HybridState HybridState::single_term(Complex amp, FockOccupation f, CoherentAssignment c) {
    HybridState s;
    s.terms.push_back({amp, std::move(f), std::move(c)});
    return s;
}

std::string HybridState::dump_json() const {
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : terms) {
        nlohmann::ordered_json jt;
        jt["re"] = t.amplitude.real();
        jt["im"] = t.amplitude.imag();
        jt["occ"] = nlohmann::ordered_json::object();
        for (const auto& [m, n] : t.fock.entries()) jt["occ"][m.name()] = n;
        if (!t.coherent.empty()) {
            jt["coh"] = nlohmann::ordered_json::object();
            for (const auto& [m, a] : t.coherent.entries())
                jt["coh"][m.name()] = {{"re", a.real()}, {"im", a.imag()}};
        }
        j["terms"].push_back(std::move(jt));
    }
    return j.dump();
}

namespace {
bool term_less(const HybridTerm& a, const HybridTerm& b) {
    if (a.fock != b.fock) return a.fock < b.fock;
    return CoherentAssignment::compare(a.coherent, b.coherent) < 0;
}
bool term_basis_equal(const HybridTerm& a, const HybridTerm& b) {
    return a.fock == b.fock && CoherentAssignment::compare(a.coherent, b.coherent) == 0;
}
}  // namespace

HybridState canonicalize(const HybridState& s) {
    HybridState out;
    out.terms = s.terms;
    std::stable_sort(out.terms.begin(), out.terms.end(), term_less);
    std::vector<HybridTerm> merged;
    for (auto& t : out.terms) {
        if (!merged.empty() && term_basis_equal(merged.back(), t))
            merged.back().amplitude += t.amplitude;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const HybridTerm& t) { return std::abs(t.amplitude) <= kAlgebraTol; });
    out.terms = std::move(merged);
    return out;
}

HybridState operator+(const HybridState& a, const HybridState& b) {
    HybridState s;
    s.terms = a.terms;
    s.terms.insert(s.terms.end(), b.terms.begin(), b.terms.end());
    return canonicalize(s);
}

HybridState scale(const HybridState& s, Complex factor) {
    HybridState out = s;
    for (auto& t : out.terms) t.amplitude *= factor;
    return canonicalize(out);
}

Complex coherent_overlap(Complex gamma, Complex delta) {
    return std::exp(-0.5 * std::norm(gamma) - 0.5 * std::norm(delta) +
                    std::conj(gamma) * delta);
}

namespace {
// <ta | tb> for single terms, amplitudes excluded. Fock parts orthonormal;
// coherent parts via the standard overlap over the union of labeled modes
// (an absent label is vacuum).
Complex basis_overlap(const HybridTerm& ta, const HybridTerm& tb) {
    if (ta.fock != tb.fock) return {0.0, 0.0};
    Complex ov{1.0, 0.0};
    for (const auto& [m, g] : ta.coherent.entries())
        ov *= coherent_overlap(g, tb.coherent.amp(m));
    for (const auto& [m, d] : tb.coherent.entries())
        if (!ta.coherent.has(m)) ov *= coherent_overlap({0.0, 0.0}, d);
    return ov;
}
}  // namespace

Complex inner(const HybridState& a, const HybridState& b) {
    Complex acc{0.0, 0.0};
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            acc += std::conj(ta.amplitude) * tb.amplitude * basis_overlap(ta, tb);
    return acc;
}

double norm(const HybridState& s) {
    double n2 = inner(s, s).real();
    return n2 > 0.0 ? std::sqrt(n2) : 0.0;
}

HybridState normalized(const HybridState& s) {
    double n = norm(s);
    if (n <= kAlgebraTol) throw std::invalid_argument("cannot normalize a null state");
    return scale(s, {1.0 / n, 0.0});
}

double fidelity_up_to_global_phase(const HybridState& a, const HybridState& b) {
    if (std::abs(norm(a) - 1.0) > 1e-6 || std::abs(norm(b) - 1.0) > 1e-6)
        throw std::invalid_argument("fidelity requires normalized states");
    return std::norm(inner(a, b));
}

}  // namespace ghz
