#include <doctest.h>

#include "clab/phi.hpp"

using clab::PhiSpec;
using clab::PhiVerdict;
using clab::Rational;

TEST_CASE("phi evaluation") {
    const auto linear = PhiSpec::linear(Rational(1, 2));
    CHECK(linear.eval(Rational(3)) == Rational(3, 2));
    CHECK(linear.eval(Rational(0)) == Rational(0));

    const auto parity = PhiSpec::parity_linear(Rational(5, 6));
    CHECK(parity.eval(Rational(6)) == Rational(0));
    CHECK(parity.eval(Rational(5)) == Rational(25, 6)); // 5 * 5/6
    CHECK(parity.eval(Rational(7, 2)) == Rational(35, 12));
    CHECK(parity.eval(Rational(0)) == Rational(0));

    CHECK(PhiSpec::zero().eval(Rational(99)) == Rational(0));
    CHECK_THROWS_AS(linear.eval(Rational(-1)), clab::DomainError);
}

TEST_CASE("phi evaluation is pure") {
    const auto parity = PhiSpec::parity_linear(Rational(5, 6));
    const Rational t(41, 7);
    const Rational first = parity.eval(t);
    for (int i = 0; i < 100; ++i) CHECK(parity.eval(t) == first);
}

TEST_CASE("k >= 1 is rejected at construction") {
    CHECK_THROWS_AS(PhiSpec::linear(Rational(1)), clab::InvariantError);
    CHECK_THROWS_AS(PhiSpec::linear(Rational(3, 2)), clab::InvariantError);
    CHECK_THROWS_AS(PhiSpec::parity_linear(Rational(1)), clab::InvariantError);
    CHECK_THROWS_AS(PhiSpec::linear(Rational(-1, 2)), clab::InvariantError);
}

TEST_CASE("property (1): analytic pass for closed forms") {
    CHECK(clab::check_phi_property1(PhiSpec::linear(Rational(1, 2)), {}).verdict ==
          PhiVerdict::AnalyticPass);
    CHECK(clab::check_phi_property1(PhiSpec::parity_linear(Rational(5, 6)), {}).verdict ==
          PhiVerdict::AnalyticPass);
    CHECK(clab::check_phi_property1(PhiSpec::zero(), {}).verdict == PhiVerdict::AnalyticPass);
}

TEST_CASE("property (1): slope-2 segment through the origin fails with a witness") {
    // Oracle: on the segment from (0,0) with slope 2, phi(t) = 2t >= t for
    // every t in it, so any witness must satisfy phi(w) >= w.
    const auto phi = PhiSpec::piecewise({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}});
    const auto report = clab::check_phi_property1(phi, {});
    REQUIRE(report.verdict == PhiVerdict::Fail);
    REQUIRE(report.witness.has_value());
    CHECK(phi.eval(*report.witness) >= *report.witness);
    CHECK(report.witness->is_positive());
}

TEST_CASE("property (1): a contractive piecewise table passes in sampled mode") {
    const auto phi = PhiSpec::piecewise({{Rational(0), Rational(0)},
                                         {Rational(1), Rational(1, 3)},
                                         {Rational(4), Rational(2)}});
    const auto report =
        clab::check_phi_property1(phi, {Rational(1, 7), Rational(3), Rational(100)});
    CHECK(report.verdict == PhiVerdict::SampledPass);
}

TEST_CASE("property (1): slope-1 tail that meets the diagonal fails") {
    // After (2,1) the extension has slope 1, so phi(t) = t - 1 < t: fine.
    const auto ok = PhiSpec::piecewise({{Rational(0), Rational(0)},
                                        {Rational(2), Rational(1)}});
    CHECK(clab::check_phi_property1(ok, {}).verdict == PhiVerdict::SampledPass);

    // Slope 3/2 tail crosses the diagonal at t = 4: witness found there.
    const auto crossing = PhiSpec::piecewise({{Rational(0), Rational(0)},
                                              {Rational(2), Rational(1)},
                                              {Rational(4), Rational(4)}});
    CHECK(clab::check_phi_property1(crossing, {}).verdict == PhiVerdict::Fail);
}

TEST_CASE("property (2): analytic deltas match the worked instances") {
    SUBCASE("linear k=1/2: delta = epsilon") {
        const auto report =
            clab::check_phi_property2(PhiSpec::linear(Rational(1, 2)), {Rational(1)});
        REQUIRE(report.pass);
        REQUIRE(report.evidence.size() == 1);
        CHECK(report.evidence[0].delta == Rational(1));
        CHECK(report.evidence[0].mode == clab::Phi2Evidence::Mode::Analytic);
    }
    SUBCASE("parity-linear k=5/6: delta = epsilon/5") {
        const auto report =
            clab::check_phi_property2(PhiSpec::parity_linear(Rational(5, 6)), {Rational(1)});
        REQUIRE(report.pass);
        CHECK(report.evidence[0].delta == Rational(1, 5));
    }
    SUBCASE("zero phi: delta = epsilon works for any epsilon") {
        const auto report = clab::check_phi_property2(PhiSpec::zero(), {Rational(7, 3)});
        REQUIRE(report.pass);
        CHECK(report.evidence[0].delta == Rational(7, 3));
    }
    CHECK_THROWS_AS(clab::check_phi_property2(PhiSpec::zero(), {Rational(0)}),
                    clab::DomainError);
}

TEST_CASE("every built-in family stays strictly below the diagonal on a grid") {
    const std::vector<PhiSpec> phis = {
        PhiSpec::linear(Rational(1, 2)),  PhiSpec::linear(Rational(9, 10)),
        PhiSpec::parity_linear(Rational(5, 6)), PhiSpec::parity_linear(Rational(1, 3)),
        PhiSpec::zero(),
        PhiSpec::piecewise({{Rational(0), Rational(0)}, {Rational(2), Rational(1)}}),
    };
    for (const auto& phi : phis) {
        for (long num = 1; num <= 120; ++num) {
            const Rational t(num, 7);
            CHECK(phi.eval(t) < t);
        }
    }
}

TEST_CASE("property (2) evidence survives a dense rational scan") {
    // For every evidence (eps, delta): >= 10^3 interior points of
    // (eps, eps+delta) satisfy phi(t) <= eps.
    const std::vector<PhiSpec> phis = {
        PhiSpec::linear(Rational(1, 2)),
        PhiSpec::parity_linear(Rational(5, 6)),
        PhiSpec::zero(),
        PhiSpec::piecewise({{Rational(0), Rational(0)},
                            {Rational(1), Rational(2, 3)},
                            {Rational(8), Rational(3)}}),
    };
    const std::vector<Rational> epsilons = {Rational(1, 10), Rational(1), Rational(10)};
    for (const auto& phi : phis) {
        const auto report = clab::check_phi_property2(phi, epsilons);
        REQUIRE(report.pass);
        REQUIRE(report.evidence.size() == epsilons.size());
        for (const auto& evidence : report.evidence) {
            CHECK(evidence.delta.is_positive());
            const int samples = 1000;
            for (int i = 1; i <= samples; ++i) {
                const Rational t =
                    evidence.epsilon + evidence.delta * Rational(i, samples + 1);
                CHECK(phi.eval(t) <= evidence.epsilon);
            }
        }
    }
}

TEST_CASE("property (2) fails for a function that exceeds every band") {
    // phi(eps) > eps already at the left end: no delta can work.
    const auto phi = PhiSpec::piecewise({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}});
    const auto report = clab::check_phi_property2(phi, {Rational(1, 2)});
    CHECK(!report.pass);
    REQUIRE(report.failed_epsilon.has_value());
    CHECK(*report.failed_epsilon == Rational(1, 2));
}

TEST_CASE("piecewise construction invariants") {
    CHECK_THROWS_AS(PhiSpec::piecewise({{Rational(0), Rational(0)}}), clab::InvariantError);
    CHECK_THROWS_AS(PhiSpec::piecewise({{Rational(1), Rational(0)}, {Rational(2), Rational(1)}}),
                    clab::InvariantError);
    CHECK_THROWS_AS(PhiSpec::piecewise({{Rational(0), Rational(0)},
                                        {Rational(2), Rational(1)},
                                        {Rational(1), Rational(1)}}),
                    clab::InvariantError);
    CHECK_THROWS_AS(PhiSpec::piecewise({{Rational(0), Rational(0)},
                                        {Rational(1), Rational(1, 2)},
                                        {Rational(2), Rational(1, 4)}}),
                    clab::InvariantError); // negative tail slope
}
