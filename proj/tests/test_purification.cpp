#include <doctest.h>

#include <cmath>

#include "ghzsim/purification.hpp"
#include "ghzsim/verify.hpp"

using namespace ghz;

namespace {
HybridState pol_state(std::initializer_list<std::pair<const char*, double>> words) {
    HybridState s;
    for (const auto& [word, amp] : words) {
        FockOccupation f;
        for (int i = 0; i < 4; ++i)
            f.add(mode(ee_group(i + 1).upper, word[i] == 'H' ? Pol::H : Pol::V), 1);
        s.terms.push_back({{amp, 0.0}, f, {}});
    }
    return canonicalize(s);
}
}  // namespace

TEST_CASE("correction table: spot checks and CSV export") {
    const CorrectionTable& t = CorrectionTable::standard();
    CHECK(t.lookup(*FcdPattern::parse("e1e2e3e4"), CaseTag::Cross).str() == "IXIX");
    CHECK(t.lookup(*FcdPattern::parse("E1E2e3e4"), CaseTag::Same).str() == "IIXX");
    CHECK(t.lookup(*FcdPattern::parse("e1E2e3E4"), CaseTag::Cross).str() == "IIII");
    CHECK(t.lookup(*FcdPattern::parse("e1e2e3e4"), CaseTag::Same).str() == "IIII");

    std::string csv = t.to_csv();
    CHECK(csv.find("pattern,case,mask") == 0);
    CHECK(csv.find("e1E2e3E4,cross,IIII") != std::string::npos);
    // 32 entries plus header.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 33);
}

TEST_CASE("measure_fcd on the noiseless states") {
    SUBCASE("same-case output: two patterns, one collapsed polarization state") {
        auto outcomes = measure_fcd(output_same_state());
        REQUIRE(outcomes.size() == 2);
        HybridState want = pol_state({{"HVVH", 1 / std::sqrt(2.0)}, {"VHHV", 1 / std::sqrt(2.0)}});
        for (const auto& o : outcomes) {
            CHECK(o.probability == doctest::Approx(0.5).epsilon(1e-12));
            CHECK((o.pattern.str() == "e1E2E3e4" || o.pattern.str() == "E1e2e3E4"));
            CHECK(fidelity_up_to_global_phase(o.collapsed, want) > 1.0 - 1e-9);
        }
    }
    SUBCASE("back-end image of psi_6^-") {
        auto outcomes = measure_fcd(evolved_noisy(6, -1));
        REQUIRE(outcomes.size() == 2);
        for (const auto& o : outcomes) {
            CHECK(o.probability == doctest::Approx(0.5).epsilon(1e-12));
            if (o.pattern.str() == "e1e2E3e4") {
                HybridState want =
                    pol_state({{"HVVV", 1 / std::sqrt(2.0)}, {"VHHH", 1 / std::sqrt(2.0)}});
                CHECK(fidelity_up_to_global_phase(o.collapsed, want) > 1.0 - 1e-9);
            } else {
                CHECK(o.pattern.str() == "E1E2e3E4");
                HybridState want =
                    pol_state({{"HHHV", 1 / std::sqrt(2.0)}, {"VVVH", 1 / std::sqrt(2.0)}});
                CHECK(fidelity_up_to_global_phase(o.collapsed, want) > 1.0 - 1e-9);
            }
        }
    }
    SUBCASE("phase-flip sign is erased at detection") {
        for (int k = 1; k <= 8; ++k) {
            auto plus = measure_fcd(evolved_noisy(k, 1));
            auto minus = measure_fcd(evolved_noisy(k, -1));
            REQUIRE(plus.size() == minus.size());
            for (size_t i = 0; i < plus.size(); ++i)
                CHECK(fidelity_up_to_global_phase(plus[i].collapsed, minus[i].collapsed) >
                      1.0 - 1e-9);
        }
    }
    SUBCASE("three-photon input is rejected") {
        FockOccupation f;
        f.add(mode(Site::e1, Pol::H), 1);
        f.add(mode(Site::e2, Pol::H), 1);
        f.add(mode(Site::e3, Pol::H), 1);
        CHECK_THROWS_AS(measure_fcd(HybridState::single_term({1.0, 0.0}, f)),
                        std::invalid_argument);
    }
}

TEST_CASE("apply_xmask") {
    HybridState s = pol_state({{"HVHV", 1 / std::sqrt(2.0)}, {"VHVH", 1 / std::sqrt(2.0)}});
    XMask m;
    m.bits = {false, true, false, true};
    CHECK(fidelity_up_to_global_phase(apply_xmask(s, m), ghz4()) > 1.0 - 1e-9);
    CHECK(fidelity_up_to_global_phase(apply_xmask(s, XMask{}), s) > 1.0 - 1e-12);
    CHECK(fidelity_up_to_global_phase(apply_xmask(apply_xmask(s, m), m), s) > 1.0 - 1e-12);
}

TEST_CASE("ghz_fidelity") {
    CHECK(ghz_fidelity(ghz4()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ghz_fidelity(pol_state({{"HHVV", 1 / std::sqrt(2.0)}, {"VVHH", 1 / std::sqrt(2.0)}})) <
          1e-12);
    CHECK(ghz_fidelity(pol_state({{"HHHH", 1.0}})) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("purify on representative syndromes") {
    SUBCASE("cross, Z at position 3: both patterns purify to fidelity 1") {
        PauliString ps;
        ps.set(3, PauliOp::Z);
        auto outcomes = purify_enumerate(PairCase::Cross, ps);
        REQUIRE(outcomes.size() == 2);
        for (const auto& o : outcomes) CHECK(o.fidelity > 1.0 - 1e-9);
    }
    SUBCASE("same, X at 2 and 3: all-lower/all-upper patterns with identity masks") {
        PauliString ps;
        ps.set(2, PauliOp::X);
        ps.set(3, PauliOp::X);
        auto outcomes = purify_enumerate(PairCase::Same, ps);
        REQUIRE(outcomes.size() == 2);
        for (const auto& o : outcomes) {
            CHECK((o.pattern.str() == "e1e2e3e4" || o.pattern.str() == "E1E2E3E4"));
            CHECK(CorrectionTable::standard().lookup(o.pattern, CaseTag::Same).str() == "IIII");
            CHECK(o.fidelity > 1.0 - 1e-9);
        }
    }
    SUBCASE("cross, no error: the alternating patterns") {
        auto outcomes = purify_enumerate(PairCase::Cross, PauliString{});
        REQUIRE(outcomes.size() == 2);
        for (const auto& o : outcomes) {
            CHECK((o.pattern.str() == "e1E2E3e4" || o.pattern.str() == "E1e2e3E4"));
            CHECK(o.probability == doctest::Approx(0.5).epsilon(1e-9));
            CHECK(o.fidelity > 1.0 - 1e-9);
        }
    }
    SUBCASE("sampled variant agrees with the enumeration") {
        Rng rng(17);
        auto [pattern, fidelity] = purify(PairCase::Cross, PauliString{}, rng);
        CHECK(fidelity > 1.0 - 1e-9);
    }
}

TEST_CASE("fault injection: a corrupted table entry fails verification") {
    CorrectionTable broken = CorrectionTable::standard();
    XMask wrong;
    wrong.bits = {true, false, false, false};
    broken.set(*FcdPattern::parse("e1E2e3E4"), CaseTag::Cross, wrong);
    CHECK(verify_table(CorrectionTable::standard()).pass);
    CHECK(!verify_table(broken).pass);
}

TEST_CASE("three-photon extraction") {
    SUBCASE("GHZ4 gives GHZ3 for both outcomes after correction") {
        auto outcomes = extract_three_photon_enumerate(ghz4(), 4);
        REQUIRE(outcomes.size() == 2);
        for (const auto& o : outcomes) {
            CHECK(o.probability == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(fidelity_up_to_global_phase(o.state3, ghz3(4)) > 1.0 - 1e-9);
        }
    }
    SUBCASE("|HHHH> input: both outcomes equally likely, GHZ3 fidelity 0.5") {
        auto outcomes = extract_three_photon_enumerate(pol_state({{"HHHH", 1.0}}), 4);
        REQUIRE(outcomes.size() == 2);
        for (const auto& o : outcomes) {
            CHECK(o.probability == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(fidelity_up_to_global_phase(o.state3, ghz3(4)) ==
                  doctest::Approx(0.5).epsilon(1e-9));
        }
    }
    SUBCASE("sampled variant") {
        Rng rng(23);
        auto [outcome, state3] = extract_three_photon(ghz4(), 1, rng);
        CHECK(fidelity_up_to_global_phase(state3, ghz3(1)) > 1.0 - 1e-9);
    }
}

TEST_CASE("detection probabilities sum to 1 for prepared states") {
    for (PairCase c : {PairCase::Cross, PairCase::Same}) {
        double total = 0.0;
        for (const auto& o : measure_fcd(prepare(c).state)) total += o.probability;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
}
