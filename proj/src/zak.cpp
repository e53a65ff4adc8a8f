#include "gaborlat/zak.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gaborlat {

namespace {
constexpr double tau = 2.0 * std::numbers::pi;
}

Complex zak(const SparseSequence& f, int channel, std::int64_t K,
            std::int64_t j, double theta) {
    Complex sum(0.0, 0.0);
    for (const auto& [key, value] : f.entries()) {
        if (key.second != channel) continue;
        const std::int64_t offset = key.first - j;
        if (offset % K != 0) continue;
        const std::int64_t k = offset / K;
        sum += value * std::polar(1.0, tau * static_cast<double>(k) * theta);
    }
    return sum;
}

Eigen::VectorXcd zak_vector(const SparseSequence& f, std::int64_t K,
                            std::int64_t j, double theta) {
    Eigen::VectorXcd v(f.channels());
    for (int r = 0; r < f.channels(); ++r) v(r) = zak(f, r, K, j, theta);
    return v;
}

Eigen::MatrixXcd z_matrix_scalar(const SparseSequence& h, int channel,
                                 const GaborGeometry& geo, std::int64_t j,
                                 double theta) {
    const std::int64_t K = static_cast<std::int64_t>(geo.p) * geo.M;
    Eigen::MatrixXcd Z(geo.q, geo.p);
    for (int s = 0; s < geo.q; ++s) {
        for (int k = 0; k < geo.p; ++k) {
            const std::int64_t arg = j + static_cast<std::int64_t>(k) * geo.M -
                                     static_cast<std::int64_t>(s) * geo.N;
            Z(s, k) = zak(h, channel, K, arg, theta);
        }
    }
    return Z;
}

Eigen::MatrixXcd z_matrix_vector(const SparseSequence& f,
                                 const GaborGeometry& geo, std::int64_t j,
                                 double theta) {
    Eigen::MatrixXcd Z(geo.q, geo.p * f.channels());
    for (int r = 0; r < f.channels(); ++r) {
        Z.block(0, r * geo.p, geo.q, geo.p) =
            z_matrix_scalar(f, r, geo, j, theta);
    }
    return Z;
}

Eigen::MatrixXcd z_matrix_family(const std::vector<SparseSequence>& g,
                                 const GaborGeometry& geo, std::int64_t j,
                                 double theta) {
    if (g.size() != static_cast<std::size_t>(geo.L)) {
        throw InputError("z_matrix_family: expected " + std::to_string(geo.L) +
                         " windows, got " + std::to_string(g.size()));
    }
    Eigen::MatrixXcd Z(geo.q * geo.L, geo.p * geo.R);
    for (int l = 0; l < geo.L; ++l) {
        if (g[l].channels() != geo.R) {
            throw InputError("z_matrix_family: window " + std::to_string(l) +
                             " has channel count " +
                             std::to_string(g[l].channels()) + ", expected " +
                             std::to_string(geo.R));
        }
        Z.block(l * geo.q, 0, geo.q, geo.p * geo.R) =
            z_matrix_vector(g[l], geo, j, theta);
    }
    return Z;
}

Eigen::VectorXcd f_vector(const SparseSequence& f, const GaborGeometry& geo,
                          std::int64_t j, double theta) {
    const std::int64_t K = static_cast<std::int64_t>(geo.p) * geo.M;
    Eigen::VectorXcd F(geo.p * f.channels());
    for (int r = 0; r < f.channels(); ++r) {
        for (int k = 0; k < geo.p; ++k) {
            F(r * geo.p + k) =
                zak(f, r, K, j + static_cast<std::int64_t>(k) * geo.M, theta);
        }
    }
    return F;
}

bool shift_relation_check(const std::vector<SparseSequence>& g,
                          const GaborGeometry& geo, std::int64_t j,
                          std::int64_t ell, double theta, double tol) {
    const EllDecomposition dec = decompose_ell(geo, ell);
    const ShiftUnitaries u = shift_unitaries(geo, ell, theta);
    const Eigen::MatrixXcd lhs =
        z_matrix_family(g, geo, j + ell * geo.d, theta);
    const Complex prefactor =
        std::polar(1.0, -tau * static_cast<double>(dec.m) * theta);
    const Eigen::MatrixXcd rhs = prefactor * kron_identity(geo.L, u.c) *
                                 z_matrix_family(g, geo, j, theta) *
                                 kron_identity(geo.R, u.a);
    return (lhs - rhs).cwiseAbs().maxCoeff() <= tol;
}

int fourier_span(const SparseSequence& f, int channel, std::int64_t K,
                 std::int64_t arg_lo, std::int64_t arg_hi) {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    bool any = false;
    for (const auto& [key, value] : f.entries()) {
        if (key.second != channel) continue;
        if (!any) {
            lo = hi = key.first;
            any = true;
        } else {
            lo = std::min(lo, key.first);
            hi = std::max(hi, key.first);
        }
    }
    if (!any) return 0;
    // k contributes when arg + kK hits the support for some arg in range.
    const auto floor_div = [](std::int64_t a, std::int64_t b) {
        std::int64_t qt = a / b;
        if (a % b != 0 && (a < 0) != (b < 0)) --qt;
        return qt;
    };
    const std::int64_t k_hi = floor_div(hi - arg_lo, K);
    const std::int64_t k_lo = -floor_div(arg_hi - lo, K);
    return k_hi >= k_lo ? static_cast<int>(k_hi - k_lo + 1) : 0;
}

int family_fourier_span(const std::vector<SparseSequence>& g,
                        const GaborGeometry& geo) {
    const std::int64_t K = static_cast<std::int64_t>(geo.p) * geo.M;
    // Z-matrix arguments over j in [0, M) span
    // [-(q-1)N, M-1 + (p-1)M] = [-(q-1)N, pM-1].
    const std::int64_t arg_lo = -static_cast<std::int64_t>(geo.q - 1) * geo.N;
    const std::int64_t arg_hi = K - 1;
    int span = 0;
    for (const auto& window : g) {
        for (int r = 0; r < window.channels(); ++r) {
            span = std::max(span, fourier_span(window, r, K, arg_lo, arg_hi));
        }
    }
    return span;
}

int required_grid_for_family(const std::vector<SparseSequence>& g,
                             const GaborGeometry& geo) {
    return 2 * family_fourier_span(g, geo) + 1;
}

std::vector<Complex> fourier_coefficients(const std::vector<Complex>& samples,
                                          std::int64_t n_lo,
                                          std::int64_t n_hi) {
    const int T = static_cast<int>(samples.size());
    if (n_hi - n_lo + 1 > T) {
        throw GridTooCoarseError(
            "fourier_coefficients: need at least " +
            std::to_string(n_hi - n_lo + 1) + " grid nodes, have " +
            std::to_string(T));
    }
    std::vector<Complex> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        Complex c(0.0, 0.0);
        for (int t = 0; t < T; ++t) {
            c += samples[t] *
                 std::polar(1.0, -tau * static_cast<double>(n) * t / T);
        }
        coeffs.push_back(c / static_cast<double>(T));
    }
    return coeffs;
}

}  // namespace gaborlat
