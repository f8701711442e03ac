#include <doctest.h>

#include <cmath>

#include "ghzsim/hybrid.hpp"
#include "ghzsim/rng.hpp"
#include "ghzsim/source.hpp"

using namespace ghz;

namespace {
HybridState rand_state(Rng& rng, int n_terms) {
    HybridState s;
    for (int i = 0; i < n_terms; ++i) {
        FockOccupation f;
        f.add(mode(Site::D1, rng.next_double() < 0.5 ? Pol::H : Pol::V),
              1 + static_cast<int>(rng.next_double() * 2));
        if (rng.next_double() < 0.5) f.add(mode(Site::d2, Pol::H), 1);
        CoherentAssignment c;
        if (rng.next_double() < 0.5)
            c.set(probe_mode(Site::p1), {rng.next_double() - 0.5, rng.next_double() - 0.5});
        s.terms.push_back({{rng.next_double() - 0.5, rng.next_double() - 0.5}, f, c});
    }
    return canonicalize(s);
}
}  // namespace

TEST_CASE("canonicalize cancels opposite terms") {
    FockOccupation f;
    f.add(mode(Site::D1, Pol::H), 1);
    HybridState s;
    s.terms.push_back({{0.3, 0.0}, f, {}});
    s.terms.push_back({{-0.3, 0.0}, f, {}});
    CHECK(canonicalize(s).terms.empty());
}

TEST_CASE("canonicalize is idempotent and order independent") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        HybridState s = rand_state(rng, 5);
        HybridState once = canonicalize(s);
        CHECK(canonicalize(once).terms.size() == once.terms.size());
        HybridState rev = s;
        std::reverse(rev.terms.begin(), rev.terms.end());
        HybridState from_rev = canonicalize(rev);
        REQUIRE(from_rev.terms.size() == once.terms.size());
        for (size_t t = 0; t < once.terms.size(); ++t) {
            CHECK(once.terms[t].fock == from_rev.terms[t].fock);
            CHECK(std::abs(once.terms[t].amplitude - from_rev.terms[t].amplitude) < 1e-12);
        }
        CHECK(std::abs(norm(once) - norm(s)) < 1e-12);
    }
}

TEST_CASE("inner: orthogonal occupations and normalized singlet") {
    HybridState singlet = emit_singlet(Site::a1, Site::b1);
    CHECK(inner(singlet, singlet).real() == doctest::Approx(1.0).epsilon(1e-12));

    FockOccupation f10, f01;
    f10.add(mode(Site::D1, Pol::H), 1);
    f01.add(mode(Site::D2, Pol::H), 1);
    HybridState a = HybridState::single_term({1.0, 0.0}, f10);
    HybridState b = HybridState::single_term({1.0, 0.0}, f01);
    CHECK(std::abs(inner(a, b)) < 1e-12);
}

TEST_CASE("inner: coherent overlap against the closed form") {
    FockOccupation f;
    f.add(mode(Site::a1, Pol::H), 1);
    CoherentAssignment c0, cd;
    c0.set(probe_mode(Site::p1), {0.0, 0.0});
    Complex delta{0.7, -0.3};
    cd.set(probe_mode(Site::p1), delta);
    HybridState a = HybridState::single_term({1.0, 0.0}, f, c0);
    HybridState b = HybridState::single_term({1.0, 0.0}, f, cd);
    CHECK(std::abs(inner(a, b) - std::exp(-0.5 * std::norm(delta))) < 1e-12);
    // conjugate symmetry
    CHECK(std::abs(inner(a, b) - std::conj(inner(b, a))) < 1e-12);
}

TEST_CASE("norm: empty state and unnormalized source polynomial") {
    CHECK(norm(HybridState{}) == 0.0);
    CHECK(norm(emit_two_pairs(PairCase::Cross)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fidelity_up_to_global_phase") {
    HybridState s = emit_singlet(Site::a1, Site::b1);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        double phi = rng.next_double() * 6.2831853;
        CHECK(fidelity_up_to_global_phase(s, scale(s, std::polar(1.0, phi))) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }

    // (|HV> + |VH>)/sqrt(2) vs (|HV> - |VH>)/sqrt(2)
    FockOccupation hv, vh;
    hv.add(mode(Site::a1, Pol::H), 1);
    hv.add(mode(Site::b1, Pol::V), 1);
    vh.add(mode(Site::a1, Pol::V), 1);
    vh.add(mode(Site::b1, Pol::H), 1);
    const double r = 1.0 / std::sqrt(2.0);
    HybridState plus, minus;
    plus.terms = {{{r, 0.0}, hv, {}}, {{r, 0.0}, vh, {}}};
    minus.terms = {{{r, 0.0}, hv, {}}, {{-r, 0.0}, vh, {}}};
    CHECK(fidelity_up_to_global_phase(plus, minus) < 1e-12);

    CHECK_THROWS_AS(fidelity_up_to_global_phase(scale(s, 2.0), s), std::invalid_argument);
}

TEST_CASE("Cauchy-Schwarz on random states") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        HybridState a = rand_state(rng, 4);
        HybridState b = rand_state(rng, 4);
        CHECK(std::abs(inner(a, b)) <= norm(a) * norm(b) + 1e-10);
    }
}

TEST_CASE("json dump format") {
    FockOccupation f;
    f.add(mode(Site::D1, Pol::H), 1);
    CoherentAssignment c;
    c.set(probe_mode(Site::p2), {0.5, -0.25});
    HybridState s = HybridState::single_term({1.0, 0.0}, f, c);
    std::string j = s.dump_json();
    CHECK(j.find("\"D1H\":1") != std::string::npos);
    CHECK(j.find("\"p2\"") != std::string::npos);
}
