#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gaborlat/admissibility.hpp"
#include "gaborlat/json_io.hpp"
#include "support/fixtures.hpp"

using namespace gaborlat;

TEST_CASE("frame admissibility on the example support") {
    const PeriodicSet S(6, {3, 5});

    // A single window cannot cover R*|K_1| = 4 > q = 2 slots.
    CHECK_FALSE(frame_admissible(S, reduce_geometry(1, 4, 6, 2)));
    CHECK(frame_admissible(S, reduce_geometry(2, 4, 6, 2)));
    CHECK(min_windows(S, reduce_geometry(2, 4, 6, 2)) == 2);

    // On the full line the condition collapses to R*N <= L*M.
    const PeriodicSet all = PeriodicSet::integers();
    CHECK(frame_admissible(all, reduce_geometry(3, 4, 6, 2)));  // 12 <= 12
    CHECK_FALSE(frame_admissible(all, reduce_geometry(2, 4, 6, 2)));
}

TEST_CASE("basis admissibility needs equal slot counts at every offset") {
    const PeriodicSet S(6, {3, 5});
    for (int L = 1; L <= 6; ++L) {
        for (int R = 1; R <= 6; ++R) {
            CHECK_FALSE(basis_admissible(S, reduce_geometry(L, 4, 6, R)));
        }
    }

    const PeriodicSet all = PeriodicSet::integers();
    CHECK(basis_admissible(all, reduce_geometry(3, 4, 6, 2)));  // RN = LM
    CHECK_FALSE(basis_admissible(all, reduce_geometry(4, 4, 6, 2)));
    CHECK(basis_admissible(all, reduce_geometry(1, 5, 5, 1)));
}

TEST_CASE("cardinality bound") {
    const PeriodicSet S(6, {3, 5});
    CHECK(cardinality_necessary(S, reduce_geometry(2, 4, 6, 2)));  // 4 <= 8

    const PeriodicSet all = PeriodicSet::integers();
    CHECK_FALSE(cardinality_necessary(all, reduce_geometry(1, 1, 2, 1)));
}

TEST_CASE("minimum window count") {
    CHECK(min_windows(PeriodicSet::integers(), reduce_geometry(1, 1, 1, 1)) ==
          1);
    // p = 3 columns active everywhere: ceil(2*3/2) = 3.
    CHECK(min_windows(PeriodicSet::integers(), reduce_geometry(1, 4, 6, 2)) ==
          3);

    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const auto inst = testing::random_instance(rng);
        const int lo = min_windows(inst.S, inst.geo);
        const GaborGeometry at =
            reduce_geometry(lo, inst.geo.M, inst.geo.N, inst.geo.R);
        CHECK(frame_admissible(inst.S, at));
        if (lo > 1) {
            const GaborGeometry below =
                reduce_geometry(lo - 1, inst.geo.M, inst.geo.N, inst.geo.R);
            CHECK_FALSE(frame_admissible(inst.S, below));
        }
    }
}

TEST_CASE("counting identity and implication chain") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 300; ++i) {
        const auto inst = testing::random_instance(rng);
        const AdmissibilityReport report =
            admissibility_report(inst.S, inst.geo);

        std::int64_t total = 0;
        for (int card : report.kj_cards) total += card;
        CHECK(total == report.card_SN);

        if (report.basis_admissible) CHECK(report.frame_admissible);
        if (report.frame_admissible) CHECK(report.cardinality_necessary);

        // Under admissibility, the cardinality bound is met with equality
        // exactly when every offset meets its slot count exactly.
        if (report.frame_admissible) {
            const bool card_equality =
                static_cast<std::int64_t>(inst.geo.R) * report.card_SN ==
                static_cast<std::int64_t>(inst.geo.L) * inst.geo.M;
            CHECK(card_equality == report.basis_admissible);
        }
    }
}

TEST_CASE("admissibility report JSON round-trip") {
    const auto fx = testing::example();
    const AdmissibilityReport report = admissibility_report(fx.S, fx.geo);
    CHECK(report.kj_cards == std::vector<int>{0, 2});
    CHECK(report.card_SN == 2);
    CHECK(report.min_windows == 2);
    CHECK(report.frame_admissible);
    CHECK_FALSE(report.basis_admissible);

    const AdmissibilityReport parsed =
        admissibility_report_from_json(to_json(report));
    CHECK(parsed.kj_cards == report.kj_cards);
    CHECK(parsed.card_SN == report.card_SN);
    CHECK(parsed.frame_admissible == report.frame_admissible);
    CHECK(parsed.basis_admissible == report.basis_admissible);
    CHECK(parsed.cardinality_necessary == report.cardinality_necessary);
    CHECK(parsed.min_windows == report.min_windows);
}
