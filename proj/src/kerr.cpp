#include "ghzsim/kerr.hpp"

#include <cmath>
#include <stdexcept>

#include "ghzsim/elements.hpp"

namespace ghz {

namespace {
int site_total(const FockOccupation& f, Site s) {
    int n = 0;
    for (const auto& [m, c] : f.entries())
        if (m.site() == s) n += c;
    return n;
}
}  // namespace

HybridState first_stage(const HybridState& signal, const KerrParams& params) {
    ModeId p1 = probe_mode(Site::p1), p2 = probe_mode(Site::p2);
    for (const auto& term : signal.terms) {
        if (term.fock.count(p1) || term.fock.count(p2))
            throw std::invalid_argument("first_stage: probe sites carry Fock photons");
        if (term.coherent.has(p1) || term.coherent.has(p2))
            throw std::invalid_argument("first_stage: probe sites already labeled");
    }

    // Inject |sqrt(2) alpha> on p1 and split.
    HybridState s = signal;
    Complex in_amp = std::sqrt(2.0) * params.alpha;
    for (auto& term : s.terms) {
        term.coherent.set(p1, in_amp);
        term.coherent.set(p2, {0.0, 0.0});
    }
    s = apply_map(bs50(Site::p1, Site::p2), s);

    // Kerr + R(-theta): arm j picks up (n_j - 1)*theta, n_j the total photon
    // count at the paired signal site.
    for (auto& term : s.terms) {
        int n1 = site_total(term.fock, Site::a1);
        int n2 = site_total(term.fock, Site::a2);
        if (params.arm_swap) std::swap(n1, n2);
        term.coherent.set(p1, term.coherent.amp(p1) *
                                  std::polar(1.0, (n1 - 1) * params.theta));
        term.coherent.set(p2, term.coherent.amp(p2) *
                                  std::polar(1.0, (n2 - 1) * params.theta));
    }

    return canonicalize(apply_map(bs50(Site::p1, Site::p2), s));
}

std::vector<QndOutcome> measure_probe_number(const HybridState& s, ModeId probe) {
    double max_mean = 0.0;
    for (const auto& term : s.terms) {
        if (!term.coherent.has(probe))
            throw std::invalid_argument("measure_probe_number: no coherent label on the site");
        max_mean = std::max(max_mean, std::norm(term.coherent.amp(probe)));
    }

    // <n|gamma> = e^{-|gamma|^2/2} gamma^n / sqrt(n!), kept as a running
    // per-term coefficient so large n never overflows a factorial.
    std::vector<Complex> coeff(s.terms.size());
    for (size_t i = 0; i < s.terms.size(); ++i)
        coeff[i] = s.terms[i].amplitude *
                   std::exp(-0.5 * std::norm(s.terms[i].coherent.amp(probe)));

    std::vector<QndOutcome> outcomes;
    double cumulative = 0.0;
    constexpr int kHardCap = 512;
    for (int n = 0; n < kHardCap && cumulative < 1.0 - kAlgebraTol; ++n) {
        HybridState proj;
        for (size_t i = 0; i < s.terms.size(); ++i) {
            const auto& term = s.terms[i];
            Complex amp = coeff[i];
            coeff[i] *= term.coherent.amp(probe) / std::sqrt(n + 1.0);
            if (std::abs(amp) <= kAlgebraTol) continue;
            HybridTerm t = term;
            t.amplitude = amp;
            t.coherent.remove(probe);
            proj.terms.push_back(std::move(t));
        }
        proj = canonicalize(proj);
        double p = proj.terms.empty() ? 0.0 : inner(proj, proj).real();
        cumulative += p;
        if (p > 1e-15) {
            QndOutcome o;
            o.n = n;
            o.probability = p;
            o.post_state = scale(proj, {1.0 / std::sqrt(p), 0.0});
            o.decided = n == 0 ? PairCase::Cross : PairCase::Same;
            outcomes.push_back(std::move(o));
        }
    }
    return outcomes;
}

QndOutcome sample_probe_number(const HybridState& s, ModeId probe, Rng& rng) {
    auto outcomes = measure_probe_number(s, probe);
    std::vector<double> w;
    for (const auto& o : outcomes) w.push_back(o.probability);
    return outcomes[rng.pick(w)];
}

HybridState feed_forward(const HybridState& s, int n) {
    if (n == 0) return s;
    HybridState out = s;
    double phi = n * M_PI / 2.0;
    for (auto& term : out.terms) {
        int n_a1 = site_total(term.fock, Site::a1);
        term.amplitude *= std::polar(1.0, phi * n_a1);
    }
    return canonicalize(out);
}

double misid_probability(double alpha, double theta) {
    double r = std::sqrt(2.0) * alpha * std::sin(theta);
    return std::exp(-r * r);
}

HybridState discard_probe(const HybridState& s, ModeId probe) {
    HybridState out = s;
    bool first = true;
    Complex ref;
    for (auto& term : out.terms) {
        Complex g = term.coherent.amp(probe);
        if (first) {
            ref = g;
            first = false;
        } else if (std::abs(g - ref) > kStateTol) {
            throw std::invalid_argument("discard_probe: probe still entangled with the signal");
        }
        term.coherent.remove(probe);
    }
    return canonicalize(out);
}

}  // namespace ghz
