#include "gaborlat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace gaborlat {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

/// Fourier index range [lo, hi] of z_{pM} seq over arguments in
/// [arg_lo, arg_hi]; {0, -1} when the sequence is empty.
std::pair<std::int64_t, std::int64_t> coefficient_range(
    const SparseSequence& seq, std::int64_t K, std::int64_t arg_lo,
    std::int64_t arg_hi) {
    if (seq.empty()) return {0, -1};
    return {ceil_div(seq.min_index() - arg_hi, K),
            floor_div(seq.max_index() - arg_lo, K)};
}

}  // namespace

Complex direct_inner_product(const SparseSequence& f, const SparseSequence& g,
                             const GaborGeometry& geo, int m, std::int64_t n) {
    if (f.channels() != g.channels()) {
        throw InputError("direct_inner_product: channel count mismatch");
    }
    Complex sum(0.0, 0.0);
    for (const auto& [key, value] : f.entries()) {
        const std::int64_t x = key.first;
        const Complex translated = g.at(x - n * geo.N, key.second);
        if (translated == Complex(0.0, 0.0)) continue;
        const Complex modulated =
            std::polar(1.0, tau * m * static_cast<double>(x) / geo.M) *
            translated;
        sum += value * std::conj(modulated);
    }
    return sum;
}

std::pair<std::int64_t, std::int64_t> translation_range(
    const SparseSequence& f, const SparseSequence& g,
    const GaborGeometry& geo) {
    if (f.empty() || g.empty()) return {1, 0};
    return {ceil_div(f.min_index() - g.max_index(), geo.N),
            floor_div(f.max_index() - g.min_index(), geo.N)};
}

double frame_sum(const SparseSequence& f, const WindowFamily& g,
                 const GaborGeometry& geo) {
    double sum = 0.0;
    for (const auto& window : g) {
        const auto [n_lo, n_hi] = translation_range(f, window, geo);
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            for (int m = 0; m < geo.M; ++m) {
                sum += std::norm(direct_inner_product(f, window, geo, m, n));
            }
        }
    }
    return sum;
}

SparseSequence apply_frame_operator_direct(const WindowFamily& h,
                                           const WindowFamily& g,
                                           const SparseSequence& f,
                                           const GaborGeometry& geo) {
    if (h.size() != g.size()) {
        throw InputError("apply_frame_operator_direct: family size mismatch");
    }
    SparseSequence out(f.channels());
    for (std::size_t l = 0; l < h.size(); ++l) {
        const auto [n_lo, n_hi] = translation_range(f, h[l], geo);
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            for (int m = 0; m < geo.M; ++m) {
                const Complex coeff =
                    direct_inner_product(f, h[l], geo, m, n);
                if (coeff == Complex(0.0, 0.0)) continue;
                for (const auto& [key, value] : g[l].entries()) {
                    const std::int64_t y = key.first + n * geo.N;
                    const Complex phase = std::polar(
                        1.0, tau * m * static_cast<double>(y) / geo.M);
                    out.add(y, key.second, coeff * phase * value);
                }
            }
        }
    }
    return out;
}

TightnessCertificate tightness_certificate(const WindowFamily& g,
                                           const PeriodicSet& S,
                                           const GaborGeometry& geo,
                                           double tol) {
    TightnessCertificate cert;
    const std::int64_t pM = static_cast<std::int64_t>(geo.p) * geo.M;
    bool have_bound = false;
    for (std::int64_t s = 0; s < pM; ++s) {
        if (!S.contains(s)) continue;
        for (int r = 0; r < geo.R; ++r) {
            const SparseSequence delta = SparseSequence::delta(geo.R, s, r);
            const SparseSequence image =
                apply_frame_operator_direct(g, g, delta, geo);
            const Complex diag = image.at(s, r);
            if (std::abs(diag.imag()) > tol) return cert;
            if (!have_bound) {
                cert.bound = diag.real();
                have_bound = true;
            } else if (std::abs(diag.real() - cert.bound) > tol) {
                return cert;
            }
            if (SparseSequence::max_abs_difference(
                    image, delta.scaled(diag.real())) > tol) {
                return cert;
            }
        }
    }
    cert.is_tight = have_bound && cert.bound > 1e-9 * std::max(1.0, cert.bound);
    return cert;
}

int required_grid_for_inner_product(const SparseSequence& f,
                                    const SparseSequence& h,
                                    const GaborGeometry& geo,
                                    std::int64_t n_abs_bound) {
    const std::int64_t K = static_cast<std::int64_t>(geo.p) * geo.M;
    const auto [z_lo, z_hi] = coefficient_range(
        h, K, -static_cast<std::int64_t>(geo.q - 1) * geo.N, K - 1);
    const auto [F_lo, F_hi] = coefficient_range(f, K, 0, K - 1);
    if (z_hi < z_lo || F_hi < F_lo) return 1;
    const std::int64_t a = F_lo - z_hi;
    const std::int64_t b = F_hi - z_lo;
    std::int64_t needed = b - a + 1;
    if (n_abs_bound >= 0) {
        needed = std::max(needed, b + n_abs_bound + 1);
        needed = std::max(needed, n_abs_bound - a + 1);
    }
    return static_cast<int>(std::max<std::int64_t>(1, needed));
}

Complex inner_product_via_zak(const SparseSequence& f, const SparseSequence& h,
                              const GaborGeometry& geo, ThetaGrid grid, int m,
                              std::int64_t n, int r) {
    if (r < 0 || r >= geo.q) {
        throw InputError("inner_product_via_zak: row index outside {0..q-1}");
    }
    if (f.channels() != h.channels()) {
        throw InputError("inner_product_via_zak: channel count mismatch");
    }
    // The integrand (conj(Z_h) F)_r is a trigonometric polynomial with
    // indices in [a, b]; picking coefficient n off the grid is exact only
    // if no other index of that range is congruent to n mod T.
    const std::int64_t K = static_cast<std::int64_t>(geo.p) * geo.M;
    const auto [z_lo, z_hi] = coefficient_range(
        h, K, -static_cast<std::int64_t>(geo.q - 1) * geo.N, K - 1);
    const auto [F_lo, F_hi] = coefficient_range(f, K, 0, K - 1);
    if (z_hi >= z_lo && F_hi >= F_lo) {
        const std::int64_t a = F_lo - z_hi;
        const std::int64_t b = F_hi - z_lo;
        for (std::int64_t nu = a; nu <= b; ++nu) {
            if (nu != n && (nu - n) % grid.T == 0) {
                throw GridTooCoarseError(
                    "inner_product_via_zak: grid of " +
                    std::to_string(grid.T) +
                    " nodes aliases coefficient " + std::to_string(nu) +
                    " onto " + std::to_string(n));
            }
        }
    }
    Complex sum(0.0, 0.0);
    for (int j = 0; j < geo.M; ++j) {
        Complex integral(0.0, 0.0);
        for (int t = 0; t < grid.T; ++t) {
            const double theta = grid.node(t);
            const Eigen::VectorXcd pair =
                z_matrix_vector(h, geo, j, theta).conjugate() *
                f_vector(f, geo, j, theta);
            integral += pair(r) * std::polar(1.0, -tau * static_cast<double>(n) *
                                                      t / grid.T);
        }
        integral /= static_cast<double>(grid.T);
        sum += integral *
               std::polar(1.0, -tau * m * static_cast<double>(j) / geo.M);
    }
    return sum;
}

std::vector<Complex> inner_products_via_zak(const SparseSequence& f,
                                            const SparseSequence& h,
                                            const GaborGeometry& geo,
                                            ThetaGrid grid,
                                            std::int64_t n_bound) {
    if (f.channels() != h.channels()) {
        throw InputError("inner_products_via_zak: channel count mismatch");
    }
    if (grid.T < required_grid_for_inner_product(f, h, geo, n_bound)) {
        throw GridTooCoarseError(
            "inner_products_via_zak: need a grid of at least " +
            std::to_string(required_grid_for_inner_product(f, h, geo,
                                                           n_bound)) +
            " nodes");
    }
    // One pairing sample (conj(Z_h) F, a q-vector) per offset and node.
    std::vector<Eigen::VectorXcd> pairing(
        static_cast<std::size_t>(geo.M) * grid.T);
    for (int j = 0; j < geo.M; ++j) {
        for (int t = 0; t < grid.T; ++t) {
            const double theta = grid.node(t);
            pairing[static_cast<std::size_t>(j) * grid.T + t] =
                z_matrix_vector(h, geo, j, theta).conjugate() *
                f_vector(f, geo, j, theta);
        }
    }
    std::vector<Complex> products(
        static_cast<std::size_t>(2 * n_bound + 1) * geo.q * geo.M);
    for (std::int64_t n = -n_bound; n <= n_bound; ++n) {
        for (int r = 0; r < geo.q; ++r) {
            std::vector<Complex> integrals(geo.M, Complex(0.0, 0.0));
            for (int j = 0; j < geo.M; ++j) {
                Complex sum(0.0, 0.0);
                for (int t = 0; t < grid.T; ++t) {
                    sum += pairing[static_cast<std::size_t>(j) * grid.T + t](
                               r) *
                           std::polar(1.0, -tau * static_cast<double>(n) * t /
                                               grid.T);
                }
                integrals[j] = sum / static_cast<double>(grid.T);
            }
            for (int m = 0; m < geo.M; ++m) {
                Complex total(0.0, 0.0);
                for (int j = 0; j < geo.M; ++j) {
                    total += integrals[j] *
                             std::polar(1.0, -tau * m *
                                                 static_cast<double>(j) /
                                                 geo.M);
                }
                products[static_cast<std::size_t>(
                             (n + n_bound) * geo.q + r) *
                             geo.M +
                         m] = total;
            }
        }
    }
    return products;
}

SparseSequence random_signal(const PeriodicSet& S, const GaborGeometry& geo,
                             std::mt19937_64& rng, int max_spikes) {
    const std::int64_t pM = static_cast<std::int64_t>(geo.p) * geo.M;
    std::vector<std::int64_t> candidates;
    for (std::int64_t j = -2 * pM; j < 2 * pM; ++j) {
        if (S.contains(j)) candidates.push_back(j);
    }
    SparseSequence f(geo.R, S);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    std::uniform_int_distribution<int> channel(0, geo.R - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int spikes =
        std::uniform_int_distribution<int>(1, max_spikes)(rng);
    for (int i = 0; i < spikes; ++i) {
        f.add(candidates[pick(rng)], channel(rng),
              Complex(gauss(rng), gauss(rng)));
    }
    return f;
}

}  // namespace gaborlat
