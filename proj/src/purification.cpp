#include "ghzsim/purification.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ghz {

int FcdPattern::index() const {
    int idx = 0;
    for (int i = 0; i < 4; ++i)
        if (big[i]) idx |= 1 << i;
    return idx;
}

FcdPattern FcdPattern::from_index(int idx) {
    FcdPattern p;
    for (int i = 0; i < 4; ++i) p.big[i] = (idx >> i) & 1;
    return p;
}

std::string FcdPattern::str() const {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        s += big[i] ? 'E' : 'e';
        s += static_cast<char>('1' + i);
    }
    return s;
}

std::optional<FcdPattern> FcdPattern::parse(std::string_view s) {
    if (s.size() != 8) return std::nullopt;
    FcdPattern p;
    for (int i = 0; i < 4; ++i) {
        char rail = s[2 * i], pos = s[2 * i + 1];
        if ((rail != 'E' && rail != 'e') || pos != '1' + i) return std::nullopt;
        p.big[i] = rail == 'E';
    }
    return p;
}

std::string XMask::str() const {
    std::string s;
    for (bool b : bits) s += b ? 'X' : 'I';
    return s;
}

const char* case_tag_name(CaseTag t) { return t == CaseTag::Same ? "same" : "cross"; }

namespace {
XMask mask_from(const char* s) {
    XMask m;
    for (int i = 0; i < 4; ++i) m.bits[i] = s[i] == 'X';
    return m;
}

size_t slot(const FcdPattern& p, CaseTag c) {
    return static_cast<size_t>(p.index()) * 2 + (c == CaseTag::Cross ? 1 : 0);
}

CaseTag tag_of(PairCase c) {
    switch (c) {
        case PairCase::Same: return CaseTag::Same;
        case PairCase::Cross: return CaseTag::Cross;
        default:
            throw std::invalid_argument("correction table requires a resolved Same/Cross case");
    }
}
}  // namespace

XMask CorrectionTable::lookup(const FcdPattern& pattern, CaseTag c) const {
    return entries_[slot(pattern, c)];
}

void CorrectionTable::set(const FcdPattern& pattern, CaseTag c, XMask mask) {
    entries_[slot(pattern, c)] = mask;
}

const CorrectionTable& CorrectionTable::standard() {
    static const CorrectionTable table = [] {
        CorrectionTable t;
        struct Row {
            const char* pattern;
            const char* same;
            const char* cross;
        };
        static constexpr Row rows[16] = {
            {"e1e2e3e4", "IIII", "IXIX"},
            {"E1E2E3E4", "IIII", "IIXX"},
            {"e1e2e3E4", "IIIX", "IXII"},
            {"E1E2E3e4", "IIIX", "IIXI"},
            {"e1e2E3e4", "IIXI", "XIII"},
            {"E1E2e3E4", "IIXI", "IIIX"},
            {"e1E2e3e4", "IXII", "IIIX"},
            {"E1e2E3E4", "IXII", "XIII"},
            {"E1e2e3e4", "XIII", "IXII"},
            {"e1E2E3E4", "XIII", "IIXI"},
            {"e1e2E3E4", "IIXX", "IXXI"},
            {"E1E2e3e4", "IIXX", "IIII"},
            {"e1E2e3E4", "IXIX", "IIII"},
            {"E1e2E3e4", "IXIX", "IXXI"},
            {"e1E2E3e4", "IXXI", "IIXX"},
            {"E1e2e3E4", "IXXI", "IXIX"},
        };
        for (const Row& r : rows) {
            FcdPattern p = *FcdPattern::parse(r.pattern);
            t.set(p, CaseTag::Same, mask_from(r.same));
            t.set(p, CaseTag::Cross, mask_from(r.cross));
        }
        return t;
    }();
    return table;
}

std::string CorrectionTable::to_csv() const {
    std::ostringstream out;
    out << "pattern,case,mask\n";
    for (int idx = 0; idx < 16; ++idx) {
        FcdPattern p = FcdPattern::from_index(idx);
        for (CaseTag c : {CaseTag::Same, CaseTag::Cross})
            out << p.str() << ',' << case_tag_name(c) << ',' << lookup(p, c).str() << '\n';
    }
    return out.str();
}

std::vector<DetectionOutcome> measure_fcd(const HybridState& s) {
    std::array<HybridState, 16> groups;
    for (const auto& term : s.terms) {
        if (!term.coherent.empty())
            throw std::invalid_argument("measure_fcd: discard probe labels first");
        FcdPattern pattern;
        std::array<Pol, 4> pols{};
        int seen = 0;
        for (const auto& [m, n] : term.fock.entries()) {
            Site st = m.site();
            int code = static_cast<int>(st);
            int pos;
            bool is_big;
            if (code >= static_cast<int>(Site::E1) && code <= static_cast<int>(Site::E4)) {
                pos = code - static_cast<int>(Site::E1) + 1;
                is_big = true;
            } else if (code >= static_cast<int>(Site::e1) && code <= static_cast<int>(Site::e4)) {
                pos = code - static_cast<int>(Site::e1) + 1;
                is_big = false;
            } else {
                throw std::invalid_argument("measure_fcd: state must live on the E/e rails");
            }
            if (n != 1) throw std::invalid_argument("measure_fcd: multiply occupied mode");
            if (seen & (1 << (pos - 1)))
                throw std::invalid_argument("measure_fcd: position group multiply occupied");
            seen |= 1 << (pos - 1);
            pattern.big[pos - 1] = is_big;
            pols[pos - 1] = m.pol();
        }
        if (seen != 0xF)
            throw std::invalid_argument("measure_fcd: each position group needs one photon");
        FockOccupation collapsed;
        for (int i = 0; i < 4; ++i)
            collapsed.add(mode(ee_group(i + 1).upper, pols[i]), 1);
        groups[pattern.index()].terms.push_back({term.amplitude, std::move(collapsed), {}});
    }

    std::vector<DetectionOutcome> outcomes;
    for (int idx = 0; idx < 16; ++idx) {
        HybridState g = canonicalize(groups[idx]);
        if (g.terms.empty()) continue;
        double p = inner(g, g).real();
        DetectionOutcome o;
        o.pattern = FcdPattern::from_index(idx);
        o.probability = p;
        o.collapsed = scale(g, {1.0 / std::sqrt(p), 0.0});
        outcomes.push_back(std::move(o));
    }
    return outcomes;
}

HybridState apply_xmask(const HybridState& polstate, const XMask& mask) {
    HybridState out;
    for (const auto& term : polstate.terms) {
        HybridTerm t = term;
        for (int i = 0; i < 4; ++i) {
            if (!mask.bits[i]) continue;
            Site s = ee_group(i + 1).upper;
            int h = t.fock.count(mode(s, Pol::H));
            int v = t.fock.count(mode(s, Pol::V));
            if (h + v != 1) throw std::invalid_argument("apply_xmask: not a 4-qubit state");
            t.fock.set(mode(s, Pol::H), v);
            t.fock.set(mode(s, Pol::V), h);
        }
        out.terms.push_back(std::move(t));
    }
    return canonicalize(out);
}

HybridState ghz4() {
    FockOccupation allh, allv;
    for (int i = 1; i <= 4; ++i) {
        allh.add(mode(ee_group(i).upper, Pol::H), 1);
        allv.add(mode(ee_group(i).upper, Pol::V), 1);
    }
    const double r = 1.0 / std::sqrt(2.0);
    HybridState s;
    s.terms.push_back({r, allh, {}});
    s.terms.push_back({r, allv, {}});
    return canonicalize(s);
}

double ghz_fidelity(const HybridState& polstate) {
    return fidelity_up_to_global_phase(polstate, ghz4());
}

std::vector<PurifyOutcome> purify_enumerate(PairCase c, const PauliString& error) {
    CaseTag tag = tag_of(c);
    PreparationResult prep = prepare(c, error);
    if (prep.empty()) return {};
    std::vector<PurifyOutcome> out;
    for (const auto& det : measure_fcd(prep.state)) {
        XMask mask = CorrectionTable::standard().lookup(det.pattern, tag);
        PurifyOutcome o;
        o.pattern = det.pattern;
        o.probability = det.probability;
        o.fidelity = ghz_fidelity(apply_xmask(det.collapsed, mask));
        out.push_back(o);
    }
    return out;
}

std::pair<FcdPattern, double> purify(PairCase c, const PauliString& error, Rng& rng) {
    auto outcomes = purify_enumerate(c, error);
    if (outcomes.empty()) throw std::runtime_error("purify: empty postselection");
    std::vector<double> w;
    for (const auto& o : outcomes) w.push_back(o.probability);
    const auto& pick = outcomes[rng.pick(w)];
    return {pick.pattern, pick.fidelity};
}

std::vector<ExtractionOutcome> extract_three_photon_enumerate(const HybridState& polstate,
                                                              int position) {
    if (position < 1 || position > 4)
        throw std::invalid_argument("extract_three_photon: position in 1..4");
    Site meas = ee_group(position).upper;
    HybridState rotated = apply_map(hadamard_wp(meas), polstate);

    int first_remaining = position == 1 ? 2 : 1;
    Site sign_site = ee_group(first_remaining).upper;

    std::vector<ExtractionOutcome> outcomes;
    for (Pol oc : {Pol::H, Pol::V}) {
        HybridState kept;
        for (const auto& term : rotated.terms) {
            if (term.fock.count(mode(meas, oc)) != 1) continue;
            HybridTerm t = term;
            t.fock.set(mode(meas, oc), 0);
            // Conditional sign correction: Z on the first remaining qubit
            // when the measured photon came out V.
            if (oc == Pol::V && t.fock.count(mode(sign_site, Pol::V)) == 1)
                t.amplitude = -t.amplitude;
            kept.terms.push_back(std::move(t));
        }
        kept = canonicalize(kept);
        if (kept.terms.empty()) continue;
        double p = inner(kept, kept).real();
        outcomes.push_back({oc, p, scale(kept, {1.0 / std::sqrt(p), 0.0})});
    }
    return outcomes;
}

std::pair<Pol, HybridState> extract_three_photon(const HybridState& polstate, int position,
                                                 Rng& rng) {
    auto outcomes = extract_three_photon_enumerate(polstate, position);
    std::vector<double> w;
    for (const auto& o : outcomes) w.push_back(o.probability);
    const auto& pick = outcomes[rng.pick(w)];
    return {pick.outcome, pick.state3};
}

HybridState ghz3(int removed_position) {
    FockOccupation allh, allv;
    for (int i = 1; i <= 4; ++i) {
        if (i == removed_position) continue;
        allh.add(mode(ee_group(i).upper, Pol::H), 1);
        allv.add(mode(ee_group(i).upper, Pol::V), 1);
    }
    const double r = 1.0 / std::sqrt(2.0);
    HybridState s;
    s.terms.push_back({r, allh, {}});
    s.terms.push_back({r, allv, {}});
    return canonicalize(s);
}

}  // namespace ghz
