#include "ghzsim/source.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace ghz {

const char* pair_case_name(PairCase c) {
    switch (c) {
        case PairCase::Cross: return "cross";
        case PairCase::Same: return "same";
        case PairCase::Physical: return "physical";
    }
    return "?";
}

namespace {
// Creation-operator polynomial: monomial exponents -> coefficient.
using Poly = std::map<FockOccupation, Complex>;

Poly poly_mul(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [mx, cx] : x) {
        for (const auto& [my, cy] : y) {
            FockOccupation m = mx;
            for (const auto& [md, n] : my.entries()) m.add(md, n);
            out[m] += cx * cy;
        }
    }
    return out;
}

Poly poly_add(const Poly& x, const Poly& y) {
    Poly out = x;
    for (const auto& [m, c] : y) out[m] += c;
    return out;
}

// Apply the polynomial to vacuum: |occ> picks up sqrt(prod n!) from the
// repeated creation operators.
HybridState on_vacuum(const Poly& p) {
    HybridState s;
    for (const auto& [m, c] : p) {
        double f = 1.0;
        for (const auto& [md, n] : m.entries())
            for (int i = 2; i <= n; ++i) f *= i;
        s.terms.push_back({c * std::sqrt(f), m, {}});
    }
    return canonicalize(s);
}

Poly singlet_poly(Site a, Site b) {
    const double r = 1.0 / std::sqrt(2.0);
    Poly p;
    FockOccupation hv, vh;
    hv.add(mode(a, Pol::H), 1);
    hv.add(mode(b, Pol::V), 1);
    vh.add(mode(a, Pol::V), 1);
    vh.add(mode(b, Pol::H), 1);
    p[hv] = {r, 0.0};
    p[vh] = {-r, 0.0};
    return p;
}
}  // namespace

HybridState emit_singlet(Site a_site, Site b_site) {
    if (a_site == b_site) throw std::invalid_argument("emit_singlet: identical sites");
    if (is_probe_site(a_site) || is_probe_site(b_site))
        throw std::invalid_argument("emit_singlet: probe site");
    return on_vacuum(singlet_poly(a_site, b_site));
}

HybridState emit_two_pairs(PairCase c) {
    Poly p1 = singlet_poly(Site::a1, Site::b1);
    Poly p2 = singlet_poly(Site::a2, Site::b2);
    switch (c) {
        case PairCase::Cross:
            return on_vacuum(poly_mul(p1, p2));
        case PairCase::Same:
            // (P11 + P22)|0>, unnormalized norm sqrt(6).
            return normalized(on_vacuum(poly_add(poly_mul(p1, p1), poly_mul(p2, p2))));
        case PairCase::Physical: {
            Poly sum = poly_add(p1, p2);
            return normalized(on_vacuum(poly_mul(sum, sum)));
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace ghz
