#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "gaborlat/admissibility.hpp"
#include "gaborlat/oracle.hpp"
#include "gaborlat/synthesis.hpp"
#include "support/fixtures.hpp"

using namespace gaborlat;

TEST_CASE("plan on the example support") {
    const auto fx = testing::example();
    const SynthesisPlan p = plan(fx.S, fx.geo);

    SUBCASE("offset 0 is empty") {
        for (const auto& window : p.assignments[0]) CHECK(window.empty());
    }

    SUBCASE("offset 1 splits the two columns over the two windows") {
        REQUIRE(p.assignments[1][0].size() == 2);
        REQUIRE(p.assignments[1][1].size() == 2);
        CHECK(p.assignments[1][0][0].k == 1);
        CHECK(p.assignments[1][0][0].r == 0);
        CHECK(p.assignments[1][0][0].s == 0);
        CHECK(p.assignments[1][0][1].k == 1);
        CHECK(p.assignments[1][0][1].r == 1);
        CHECK(p.assignments[1][0][1].s == 1);
        CHECK(p.assignments[1][1][0].k == 2);
        CHECK(p.assignments[1][1][0].s == 0);
        CHECK(p.assignments[1][1][1].k == 2);
        CHECK(p.assignments[1][1][1].s == 1);
    }

    SUBCASE("spike sets follow j + kM + sN") {
        CHECK(p.spikes[0][0] == std::vector<std::int64_t>{5});    // 1+4+0
        CHECK(p.spikes[0][1] == std::vector<std::int64_t>{11});   // 1+4+6
        CHECK(p.spikes[1][0] == std::vector<std::int64_t>{9});    // 1+8+0
        CHECK(p.spikes[1][1] == std::vector<std::int64_t>{15});   // 1+8+6
    }
}

TEST_CASE("plan degenerate and error cases") {
    SUBCASE("single slot on the full line") {
        const SynthesisPlan p =
            plan(PeriodicSet::integers(), reduce_geometry(1, 1, 1, 1));
        REQUIRE(p.assignments[0][0].size() == 1);
        CHECK(p.assignments[0][0][0].k == 0);
        CHECK(p.assignments[0][0][0].s == 0);
        CHECK(p.spikes[0][0] == std::vector<std::int64_t>{0});
    }

    SUBCASE("inadmissible parameters are refused") {
        CHECK_THROWS_AS(
            plan(PeriodicSet(6, {3, 5}), reduce_geometry(1, 4, 6, 2)),
            NotAdmissibleError);
    }

    SUBCASE("more channels than modulation residues per block are refused") {
        CHECK_THROWS_AS(
            plan(PeriodicSet::integers(), reduce_geometry(2, 2, 2, 2)),
            UnsupportedChannelCountError);
    }
}

TEST_CASE("plan invariants") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 120; ++i) {
        const auto inst = testing::random_admissible_instance(rng);
        const SynthesisPlan p = plan(inst.S, inst.geo);
        for (int j = 0; j < inst.geo.d; ++j) {
            std::set<std::pair<int, int>> pairs;
            for (int l = 0; l < inst.geo.L; ++l) {
                CHECK(p.assignments[j][l].size() <=
                      static_cast<std::size_t>(inst.geo.q));
                std::set<int> shifts;
                for (const PlanEntry& entry : p.assignments[j][l]) {
                    CHECK(entry.s >= 0);
                    CHECK(entry.s < inst.geo.q);
                    CHECK(shifts.insert(entry.s).second);
                    pairs.insert({entry.k, entry.r});
                }
            }
            // Every (column, channel) pair is placed exactly once.
            CHECK(pairs.size() ==
                  k_set(inst.S, inst.geo, j).size() *
                      static_cast<std::size_t>(inst.geo.R));
        }
    }
}

TEST_CASE("synthesized example family is 4-tight") {
    const auto fx = testing::example();

    const WindowFamily plain = synthesize(fx.S, fx.geo, false);
    const SynthesisVerification v = verify_synthesis(plain, fx.S, fx.geo);
    CHECK(v.ok);
    CHECK(v.m_congruent);
    CHECK(v.n_congruent);
    CHECK(v.disjoint);
    CHECK(v.tight);
    CHECK(v.A == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(v.B == doctest::Approx(4.0).epsilon(1e-12));

    const WindowFamily normalized = synthesize(fx.S, fx.geo, true);
    const GramField gram(normalized, fx.S, fx.geo, ThetaGrid{16});
    CHECK(parseval_check(gram));
    CHECK(norm_identity_check(normalized, fx.S, fx.geo));
}

TEST_CASE("unit spike synthesis is an orthonormal basis") {
    const PeriodicSet all = PeriodicSet::integers();
    const GaborGeometry geo = reduce_geometry(1, 1, 1, 1);
    const WindowFamily g = synthesize(all, geo);
    const FrameReport report = analyze(g, all, geo, ThetaGrid{4});
    CHECK(report.onb);

    const TightnessCertificate cert = tightness_certificate(g, all, geo);
    CHECK(cert.is_tight);
    CHECK(cert.bound == doctest::Approx(1.0));
}

TEST_CASE("packing covers supports the rigid block partition misses") {
    // q = 3, R = 2: blocks of floor(q/R) = 1 column could cover at most
    // L = 3 columns, but K_0 = {0, 1, 2, 3} needs all eight (column,
    // channel) pairs spread over the q*L = 9 slots.
    const PeriodicSet all = PeriodicSet::integers();
    const GaborGeometry geo = reduce_geometry(3, 3, 4, 2);
    REQUIRE(geo.p == 4);
    REQUIRE(geo.q == 3);
    REQUIRE(frame_admissible(all, geo));

    const WindowFamily g = synthesize(all, geo, false);
    const SynthesisVerification v = verify_synthesis(g, all, geo);
    CHECK(v.ok);
    CHECK(v.A == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(v.B == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("the hand-picked example family verifies") {
    const auto fx = testing::example();
    const SynthesisVerification v =
        verify_synthesis(fx.windows, fx.S, fx.geo);
    CHECK(v.ok);
    CHECK(v.A == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(v.B == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("verification catches planted violations") {
    const auto fx = testing::example();

    SUBCASE("two spikes congruent mod M in one channel") {
        WindowFamily bad = fx.windows;
        SparseSequence g0(2, fx.S);
        g0.set(9, 0, 1.0);
        g0.set(21, 0, 1.0);  // 21 - 9 = 12, divisible by M = 4
        g0.set(3, 1, 1.0);
        bad[0] = g0;
        const SynthesisVerification v = verify_synthesis(bad, fx.S, fx.geo);
        CHECK_FALSE(v.ok);
        CHECK_FALSE(v.m_congruent);
    }

    SUBCASE("a missing residue breaks the NZ congruence") {
        WindowFamily bad = fx.windows;
        SparseSequence g1(2, fx.S);
        g1.set(5, 0, 1.0);
        g1.set(5, 1, 1.0);  // channel 1 now misses residue class 5... 11
        bad[1] = g1;
        const SynthesisVerification v = verify_synthesis(bad, fx.S, fx.geo);
        CHECK_FALSE(v.ok);
    }

    SUBCASE("mixed amplitudes are refused") {
        WindowFamily bad = fx.windows;
        bad[1] = bad[1].scaled(0.5);
        const SynthesisVerification v = verify_synthesis(bad, fx.S, fx.geo);
        CHECK_FALSE(v.ok);
        CHECK_FALSE(v.failures.empty());
    }
}

TEST_CASE("synthesized Zak entries are unimodular monomials") {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int i = 0; i < 30; ++i) {
        const auto inst = testing::random_admissible_instance(rng, 8, 3);
        const auto& geo = inst.geo;
        const SynthesisPlan p = plan(inst.S, geo);
        const WindowFamily g = materialize(p, inst.S, false);
        for (int j = 0; j < geo.d; ++j) {
            const double theta = uniform(rng);
            for (int l = 0; l < geo.L; ++l) {
                // The assignment with in-window shift s lands its monomial
                // in row (q - s) % q of the channel block at column k.
                std::set<std::pair<int, std::pair<int, int>>> expected;
                for (const PlanEntry& entry : p.assignments[j][l]) {
                    expected.insert(
                        {entry.r,
                         {(geo.q - entry.s) % geo.q, entry.k}});
                }
                for (int r = 0; r < geo.R; ++r) {
                    const Eigen::MatrixXcd Z =
                        z_matrix_scalar(g[l], r, geo, j, theta);
                    for (int s = 0; s < geo.q; ++s) {
                        for (int k = 0; k < geo.p; ++k) {
                            const double mag = std::abs(Z(s, k));
                            const bool assigned =
                                expected.count({r, {s, k}}) > 0;
                            if (assigned) {
                                CHECK(mag == doctest::Approx(1.0).epsilon(
                                                 1e-12));
                            } else {
                                CHECK(mag <= 1e-12);
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("randomized synthesis soundness") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 60; ++i) {
        const auto inst = testing::random_admissible_instance(rng, 10, 4);

        const WindowFamily plain = synthesize(inst.S, inst.geo, false);
        const SynthesisVerification v =
            verify_synthesis(plain, inst.S, inst.geo);
        CHECK(v.ok);
        CHECK(v.A ==
              doctest::Approx(static_cast<double>(inst.geo.M)).epsilon(1e-9));
        CHECK(v.B ==
              doctest::Approx(static_cast<double>(inst.geo.M)).epsilon(1e-9));

        const WindowFamily normalized = synthesize(inst.S, inst.geo, true);
        const ThetaGrid grid{std::max(
            5, required_grid_for_family(normalized, inst.geo))};
        CHECK(parseval_check(
            GramField(normalized, inst.S, inst.geo, grid)));
        CHECK(norm_identity_check(normalized, inst.S, inst.geo, 1e-10));

        if (basis_admissible(inst.S, inst.geo)) {
            const FrameReport report =
                analyze(normalized, inst.S, inst.geo, grid);
            CHECK(report.onb);
        }
    }
}
