#include <doctest.h>

#include "oracle.hpp"

using namespace oracle;

TEST_CASE("oracle: singlet is normalized") {
    CHECK(norm2_on_vacuum(singlet("a1", "b1")) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("oracle: squared singlet polynomial has norm^2 3") {
    Poly p = singlet("a1", "b1");
    CHECK(norm2_on_vacuum(mul(p, p)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("oracle: P11 + P22 on vacuum has norm sqrt(6)") {
    Poly p1 = singlet("a1", "b1");
    Poly p2 = singlet("a2", "b2");
    Poly same = add(mul(p1, p1), mul(p2, p2));
    CHECK(std::sqrt(norm2_on_vacuum(same)) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
}

TEST_CASE("oracle: BS expansion of |1,1> kills the coincidence (HOM)") {
    const double r = 1.0 / std::sqrt(2.0);
    Poly in = mul(term({{"x", 1}}, 1.0), term({{"y", 1}}, 1.0));
    std::map<std::string, Poly> bs = {
        {"x", add(term({{"x", 1}}, r), term({{"y", 1}}, r))},
        {"y", add(term({{"x", 1}}, r), term({{"y", 1}}, -r))},
    };
    Poly out = substitute(in, bs);
    CHECK(std::abs(fock_amplitude(out, {{"x", 1}, {"y", 1}})) < 1e-12);
    CHECK(fock_amplitude(out, {{"x", 2}}).real() == doctest::Approx(r).epsilon(1e-12));
    CHECK(fock_amplitude(out, {{"y", 2}}).real() == doctest::Approx(-r).epsilon(1e-12));
    CHECK(norm2_on_vacuum(out) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("oracle: |2> through a BS picks up the bosonic sqrt(2) on |1,1>") {
    const double r = 1.0 / std::sqrt(2.0);
    Poly in = scale(term({{"x", 2}}, 1.0), 1.0 / std::sqrt(2.0));  // normalized |2>
    std::map<std::string, Poly> bs = {
        {"x", add(term({{"x", 1}}, r), term({{"y", 1}}, r))},
        {"y", add(term({{"x", 1}}, r), term({{"y", 1}}, -r))},
    };
    Poly out = substitute(in, bs);
    CHECK(std::abs(fock_amplitude(out, {{"x", 2}})) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(fock_amplitude(out, {{"x", 1}, {"y", 1}})) ==
          doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(std::abs(fock_amplitude(out, {{"y", 2}})) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("oracle: postselection probabilities from raw expansion") {
    Poly p1 = singlet("a1", "b1");
    Poly p2 = singlet("a2", "b2");
    auto rules = front_end_rules();

    SUBCASE("cross case: 1/16") {
        Poly routed = substitute(mul(p1, p2), rules);
        double kept = norm2_on_vacuum(postselect_one_per_group(routed));
        CHECK(kept / norm2_on_vacuum(routed) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    }

    SUBCASE("same case: 1/24") {
        Poly same = add(mul(p1, p1), mul(p2, p2));
        Poly routed = substitute(same, rules);
        double kept = norm2_on_vacuum(postselect_one_per_group(routed));
        CHECK(kept / norm2_on_vacuum(routed) == doctest::Approx(1.0 / 24.0).epsilon(1e-12));
    }

    SUBCASE("physical case: cross-to-same weight ratio 2/3") {
        Poly sum = add(p1, p2);
        Poly full = mul(sum, sum);
        double cross_w = 4.0 * norm2_on_vacuum(mul(p1, p2));
        double same_w = norm2_on_vacuum(add(mul(p1, p1), mul(p2, p2)));
        CHECK(cross_w / same_w == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(norm2_on_vacuum(full) == doctest::Approx(cross_w + same_w).epsilon(1e-12));
    }
}
