#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference computations straight from the definitions.
 *
 * The Gabor system applies modulations E_{m/M} f = e^{2 pi i (m/M) .} f and
 * translations T_{nN} f = f(. - nN) to each window. Everything here is the
 * obvious finite sum over those operators: inner products, the frame sum
 * sum |<f, E T g_l>|^2, and the mixed frame operator
 * S_{h,g} f = sum <f, E T h_l> E T g_l. Translation ranges are computed
 * from support extrema, so no truncation error exists. These routines stay
 * deliberately slow and independent of the Zak-domain code paths they
 * certify.
 */

#include <complex>
#include <cstdint>
#include <random>
#include <utility>

#include "gaborlat/frame_analysis.hpp"
#include "gaborlat/geometry.hpp"
#include "gaborlat/sequence.hpp"
#include "gaborlat/zak.hpp"

namespace gaborlat {

struct OracleConfig {
    double tolerance = 1e-10;
    int trials = 100;
    std::uint64_t seed = 0xC0FFEE;
};

/// <f, E_{m/M} T_{nN} g> as an exact finite sum over both supports.
Complex direct_inner_product(const SparseSequence& f, const SparseSequence& g,
                             const GaborGeometry& geo, int m, std::int64_t n);

/// Inclusive translation range [n_lo, n_hi] outside which supp(f) and
/// supp(g) + nN cannot meet. Empty ranges come back with n_lo > n_hi.
std::pair<std::int64_t, std::int64_t> translation_range(
    const SparseSequence& f, const SparseSequence& g, const GaborGeometry& geo);

/// sum over l, m in {0..M-1} and all overlapping n of |<f, E T g_l>|^2.
double frame_sum(const SparseSequence& f, const WindowFamily& g,
                 const GaborGeometry& geo);

/// S_{h,g} f by the direct triple sum.
SparseSequence apply_frame_operator_direct(const WindowFamily& h,
                                           const WindowFamily& g,
                                           const SparseSequence& f,
                                           const GaborGeometry& geo);

struct TightnessCertificate {
    bool is_tight = false;
    double bound = 0.0;  ///< the common frame bound A when is_tight
};

/// Applies S_{g,g} to every delta supported on S within one pM-period and
/// every channel; tight iff each comes back as bound * delta. The frame
/// operator commutes with translations by pM, so one period of deltas spans
/// everything by linearity.
TightnessCertificate tightness_certificate(const WindowFamily& g,
                                           const PeriodicSet& S,
                                           const GaborGeometry& geo,
                                           double tol = 1e-10);

/// <f, E_{m/M} T_{(nq+r)N} h> recovered from the Zak-domain pairing: the
/// r-th component of conj(Z_h) F integrated against e^{-2 pi i n theta} and
/// summed over offsets with modulation phases. Exact when the grid exceeds
/// the combined Fourier span; throws GridTooCoarseError otherwise.
Complex inner_product_via_zak(const SparseSequence& f, const SparseSequence& h,
                              const GaborGeometry& geo, ThetaGrid grid, int m,
                              std::int64_t n, int r);

/// Grid size needed by inner_product_via_zak for these supports; with
/// n_abs_bound >= 0 the returned size stays exact for every |n| up to the
/// bound, not just for n inside the natural coefficient range.
int required_grid_for_inner_product(const SparseSequence& f,
                                    const SparseSequence& h,
                                    const GaborGeometry& geo,
                                    std::int64_t n_abs_bound = -1);

/// Every <f, E_{m/M} T_{(nq+r)N} h> for m in {0..M-1}, r in {0..q-1} and
/// |n| <= n_bound through the same Zak-domain pairing, sharing one sweep
/// of the grid samples. Entry layout: ((n + n_bound) * q + r) * M + m.
std::vector<Complex> inner_products_via_zak(const SparseSequence& f,
                                            const SparseSequence& h,
                                            const GaborGeometry& geo,
                                            ThetaGrid grid,
                                            std::int64_t n_bound);

/// A reproducible random signal: complex gaussian values on up to
/// max_spikes positions drawn from S intersected with [-2pM, 2pM).
SparseSequence random_signal(const PeriodicSet& S, const GaborGeometry& geo,
                             std::mt19937_64& rng, int max_spikes = 8);

}  // namespace gaborlat
