#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gaborlat/oracle.hpp"
#include "support/fixtures.hpp"

using namespace gaborlat;

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

WindowFamily scaled_family(const WindowFamily& g, Complex factor) {
    WindowFamily out;
    for (const auto& window : g) out.push_back(window.scaled(factor));
    return out;
}

}  // namespace

TEST_CASE("direct inner products") {
    const auto fx = testing::example();
    const auto& geo = fx.geo;

    SUBCASE("self inner product recovers the energy") {
        std::mt19937_64 rng(41);
        for (int i = 0; i < 40; ++i) {
            const SparseSequence g = testing::random_sparse(rng, 2, -15, 15);
            const int m = static_cast<int>(rng() % geo.M);
            const std::int64_t n =
                std::uniform_int_distribution<std::int64_t>(-3, 3)(rng);
            // f = E_{m/M} T_{nN} g pairs with g to ||g||^2.
            SparseSequence f(2);
            for (const auto& [key, value] : g.entries()) {
                const std::int64_t y = key.first + n * geo.N;
                f.set(y, key.second,
                      std::polar(1.0, tau * m * static_cast<double>(y) /
                                          geo.M) *
                          value);
            }
            CHECK(std::abs(direct_inner_product(f, g, geo, m, n) -
                           g.squared_norm()) <= 1e-12);
        }
    }

    SUBCASE("disjoint translated supports pair to zero") {
        const SparseSequence a = SparseSequence::delta(1, 0, 0);
        const SparseSequence b = SparseSequence::delta(1, 1, 0);
        CHECK(direct_inner_product(a, b, geo, 1, 0) == Complex(0.0, 0.0));
    }

    SUBCASE("single overlapping spike carries the conjugate phase") {
        const SparseSequence f = SparseSequence::delta(2, 3, 1);
        const Complex value =
            direct_inner_product(f, fx.windows[0], geo, 1, 0);
        CHECK(std::abs(value - std::polar(1.0, -tau * 3.0 / 4.0)) <= 1e-15);
    }
}

TEST_CASE("frame sums") {
    const auto fx = testing::example();
    std::mt19937_64 rng(42);

    SUBCASE("Parseval family returns the energy") {
        const WindowFamily parseval = scaled_family(fx.windows, 0.5);
        for (int i = 0; i < 30; ++i) {
            const SparseSequence f =
                testing::random_supported(rng, fx.S, 2, 24);
            CHECK(frame_sum(f, parseval, fx.geo) ==
                  doctest::Approx(f.squared_norm()).epsilon(1e-10));
        }
    }

    SUBCASE("the unscaled family is 4-tight") {
        for (int i = 0; i < 30; ++i) {
            const SparseSequence f =
                testing::random_supported(rng, fx.S, 2, 24);
            CHECK(frame_sum(f, fx.windows, fx.geo) ==
                  doctest::Approx(4.0 * f.squared_norm()).epsilon(1e-10));
        }
    }
}

TEST_CASE("direct frame operator") {
    const auto fx = testing::example();
    std::mt19937_64 rng(43);

    SUBCASE("Parseval family acts as the identity") {
        const WindowFamily parseval = scaled_family(fx.windows, 0.5);
        for (int i = 0; i < 20; ++i) {
            const SparseSequence f =
                testing::random_supported(rng, fx.S, 2, 24);
            const SparseSequence out =
                apply_frame_operator_direct(parseval, parseval, f, fx.geo);
            CHECK(SparseSequence::max_abs_difference(out, f) <= 1e-10);
        }
    }

    SUBCASE("strongly disjoint channel systems annihilate") {
        const GaborGeometry scalar = reduce_geometry(2, 4, 6, 1);
        WindowFamily channel0;
        WindowFamily channel1;
        for (const auto& window : fx.windows) {
            channel0.push_back(window.channel(0));
            channel1.push_back(window.channel(1));
        }
        for (int i = 0; i < 10; ++i) {
            const SparseSequence f =
                testing::random_supported(rng, fx.S, 1, 24);
            CHECK(apply_frame_operator_direct(channel1, channel0, f, scalar)
                      .squared_norm() <= 1e-20);
        }
    }

    SUBCASE("zero synthesis windows give zero") {
        const SparseSequence f = testing::random_supported(rng, fx.S, 2, 24);
        const WindowFamily zeros(2, SparseSequence(2, fx.S));
        CHECK(apply_frame_operator_direct(fx.windows, zeros, f, fx.geo)
                  .empty());
    }

    SUBCASE("output stays inside the support set") {
        for (int i = 0; i < 10; ++i) {
            const SparseSequence f =
                testing::random_supported(rng, fx.S, 2, 24);
            const SparseSequence out = apply_frame_operator_direct(
                fx.windows, fx.windows, f, fx.geo);
            for (const auto& [key, value] : out.entries()) {
                CHECK(fx.S.contains(key.first));
            }
        }
    }
}

TEST_CASE("tightness certificates") {
    const auto fx = testing::example();

    const TightnessCertificate plain =
        tightness_certificate(fx.windows, fx.S, fx.geo);
    CHECK(plain.is_tight);
    CHECK(plain.bound == doctest::Approx(4.0).epsilon(1e-12));

    const TightnessCertificate parseval = tightness_certificate(
        scaled_family(fx.windows, 0.5), fx.S, fx.geo);
    CHECK(parseval.is_tight);
    CHECK(parseval.bound == doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("a moved spike breaks tightness") {
        WindowFamily perturbed = fx.windows;
        SparseSequence g0(2, fx.S);
        g0.set(3, 0, 1.0);  // was at 9; now collides with channel 1 pattern
        g0.set(3, 1, 1.0);
        perturbed[0] = g0;
        CHECK_FALSE(
            tightness_certificate(perturbed, fx.S, fx.geo).is_tight);
    }

    SUBCASE("zero windows are not tight") {
        const WindowFamily zeros(2, SparseSequence(2, fx.S));
        const TightnessCertificate cert =
            tightness_certificate(zeros, fx.S, fx.geo);
        CHECK_FALSE(cert.is_tight);
        CHECK(cert.bound == 0.0);
    }
}

TEST_CASE("inner products through the Zak domain match the direct sums") {
    std::mt19937_64 rng(44);

    SUBCASE("unit spike base case") {
        const GaborGeometry geo = reduce_geometry(1, 1, 1, 1);
        const SparseSequence delta = SparseSequence::delta(1, 0, 0);
        const ThetaGrid grid{
            required_grid_for_inner_product(delta, delta, geo, 2)};
        CHECK(std::abs(inner_product_via_zak(delta, delta, geo, grid, 0, 0,
                                             0) -
                       Complex(1.0, 0.0)) <= 1e-12);
        CHECK(std::abs(inner_product_via_zak(delta, delta, geo, grid, 0, 1,
                                             0)) <= 1e-12);
    }

    SUBCASE("zero window pairs to zero") {
        const auto fx = testing::example();
        const SparseSequence f = testing::random_supported(rng, fx.S, 2, 24);
        const SparseSequence zero(2);
        CHECK(std::abs(inner_product_via_zak(f, zero, fx.geo, ThetaGrid{8},
                                             1, 0, 1)) == 0.0);
    }

    SUBCASE("exhaustive small ranges on random instances") {
        for (int i = 0; i < 25; ++i) {
            const auto inst = testing::random_instance(rng, 6, 1);
            const auto& geo = inst.geo;
            const SparseSequence f =
                testing::random_sparse(rng, geo.R, -12, 12, 4);
            const SparseSequence h =
                testing::random_sparse(rng, geo.R, -12, 12, 4);
            const std::int64_t n_bound = 3;
            const ThetaGrid grid{
                required_grid_for_inner_product(f, h, geo, n_bound)};
            for (int m = 0; m < geo.M; ++m) {
                for (std::int64_t n = -n_bound; n <= n_bound; ++n) {
                    for (int r = 0; r < geo.q; ++r) {
                        const Complex via_zak = inner_product_via_zak(
                            f, h, geo, grid, m, n, r);
                        const Complex direct = direct_inner_product(
                            f, h, geo, m, n * geo.q + r);
                        CHECK(std::abs(via_zak - direct) <= 1e-10);
                    }
                }
            }
        }
    }

    SUBCASE("aliasing grids are refused") {
        const auto fx = testing::example();
        const SparseSequence f = testing::random_supported(rng, fx.S, 2, 40);
        CHECK_THROWS_AS(inner_product_via_zak(f, fx.windows[0], fx.geo,
                                              ThetaGrid{1}, 0, 5, 0),
                        GridTooCoarseError);
    }

    SUBCASE("batched sweep equals the single-product route") {
        for (int i = 0; i < 15; ++i) {
            const auto inst = testing::random_instance(rng, 6, 1);
            const auto& geo = inst.geo;
            const SparseSequence f =
                testing::random_sparse(rng, geo.R, -10, 10, 4);
            const SparseSequence h =
                testing::random_sparse(rng, geo.R, -10, 10, 4);
            const std::int64_t n_bound = 2;
            const ThetaGrid grid{
                required_grid_for_inner_product(f, h, geo, n_bound)};
            const std::vector<Complex> batch =
                inner_products_via_zak(f, h, geo, grid, n_bound);
            for (std::int64_t n = -n_bound; n <= n_bound; ++n) {
                for (int r = 0; r < geo.q; ++r) {
                    for (int m = 0; m < geo.M; ++m) {
                        const Complex single = inner_product_via_zak(
                            f, h, geo, grid, m, n, r);
                        const Complex from_batch =
                            batch[static_cast<std::size_t>(
                                      (n + n_bound) * geo.q + r) *
                                      geo.M +
                                  m];
                        CHECK(std::abs(single - from_batch) <= 1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("the unit spike system is the standard basis") {
    const PeriodicSet all = PeriodicSet::integers();
    const GaborGeometry geo = reduce_geometry(1, 1, 1, 1);
    const WindowFamily g = {SparseSequence::delta(1, 0, 0, all)};

    // <delta_s, E_0 T_n delta_0> = [s == n].
    for (std::int64_t s = -3; s <= 3; ++s) {
        const SparseSequence probe = SparseSequence::delta(1, s, 0);
        for (std::int64_t n = -3; n <= 3; ++n) {
            const Complex ip = direct_inner_product(probe, g[0], geo, 0, n);
            CHECK(std::abs(ip - (s == n ? 1.0 : 0.0)) == 0.0);
        }
    }

    const TightnessCertificate cert = tightness_certificate(g, all, geo);
    CHECK(cert.is_tight);
    CHECK(cert.bound == doctest::Approx(1.0));

    std::mt19937_64 rng(45);
    for (int i = 0; i < 20; ++i) {
        const SparseSequence f = testing::random_supported(rng, all, 1, 6);
        CHECK(frame_sum(f, g, geo) ==
              doctest::Approx(f.squared_norm()).epsilon(1e-12));
    }
}

TEST_CASE("random signals respect the declared support") {
    std::mt19937_64 rng(46);
    for (int i = 0; i < 50; ++i) {
        const auto inst = testing::random_instance(rng, 8, 2);
        const SparseSequence f = random_signal(inst.S, inst.geo, rng);
        CHECK_FALSE(f.empty());
        for (const auto& [key, value] : f.entries()) {
            CHECK(inst.S.contains(key.first));
            CHECK(std::abs(key.first) <= 2LL * inst.geo.p * inst.geo.M);
        }
    }
}
