#include "ghzsim/network.hpp"

#include <cmath>

namespace ghz {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

ModeMap front_end_map() {
    ModeMap m;
    auto split = [&](Site in, Pol p, Site o1, Site o2) {
        m.set_column(mode(in, p),
                     {{mode(o1, p), kInvSqrt2}, {mode(o2, p), kInvSqrt2}});
    };
    split(Site::a1, Pol::H, Site::D1, Site::D3);
    split(Site::a1, Pol::V, Site::D1, Site::D2);
    split(Site::a2, Pol::H, Site::d1, Site::d3);
    split(Site::a2, Pol::V, Site::d1, Site::d2);
    split(Site::b1, Pol::H, Site::D2, Site::D4);
    split(Site::b1, Pol::V, Site::D3, Site::D4);
    split(Site::b2, Pol::H, Site::d2, Site::d4);
    split(Site::b2, Pol::V, Site::d3, Site::d4);
    return m;
}

PreparationResult postselect_coincidence(const HybridState& s) {
    HybridState kept;
    for (const auto& term : s.terms) {
        bool ok = true;
        for (int pos = 1; pos <= 4 && ok; ++pos) {
            PositionGroup g = dd_group(pos);
            int n = term.fock.count(mode(g.upper, Pol::H)) +
                    term.fock.count(mode(g.upper, Pol::V)) +
                    term.fock.count(mode(g.lower, Pol::H)) +
                    term.fock.count(mode(g.lower, Pol::V));
            if (n != 1) ok = false;
        }
        if (ok) kept.terms.push_back(term);
    }
    kept = canonicalize(kept);
    double p2 = inner(kept, kept).real();
    PreparationResult res;
    res.probability = p2;
    if (p2 > kAlgebraTol) res.state = scale(kept, {1.0 / std::sqrt(p2), 0.0});
    return res;
}

ModeMap back_end_map() {
    ModeMap m;
    for (int pos = 1; pos <= 4; ++pos) {
        PositionGroup dd = dd_group(pos);
        PositionGroup ee = ee_group(pos);
        // HWP R90 on the D rail, then PBS with D as port 1 and d as port 2.
        ModeMap stage = compose(pbs(dd.upper, dd.lower, ee.upper, ee.lower),
                                hwp_r90(dd.upper));
        for (const auto& [in, col] : stage.columns()) m.set_column(in, col);
    }
    return m;
}

PreparationResult prepare(PairCase c, const PauliString& error) {
    HybridState src = emit_two_pairs(c);
    HybridState routed = apply_map(front_end_map(), src);
    PreparationResult post = postselect_coincidence(routed);
    post.case_used = c;
    if (post.empty()) return post;
    HybridState noisy = apply_pauli_string(post.state, error, GroupBasis::Dd);
    post.state = apply_map(back_end_map(), noisy);
    return post;
}

PreparationResult prepare(PairCase c) { return prepare(c, PauliString{}); }

}  // namespace ghz
