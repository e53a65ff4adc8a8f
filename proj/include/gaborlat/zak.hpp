#pragma once

/**
 * @file zak.hpp
 * @brief Discrete Zak transforms of finitely supported sequences and the
 *        matrix fields built from them.
 *
 * For a period K the discrete Zak transform of a scalar sequence h is
 *
 *     z_K h(j, theta) = sum_k h(j + kK) e^{2 pi i k theta},
 *
 * a finite sum for finitely supported h, quasi-periodic in j and 1-periodic
 * in theta. With N/M = p/q in lowest terms, every window h gives a q x p
 * matrix field
 *
 *     Z_h(j, theta)[s, k] = z_{pM} h(j + kM - sN, theta),
 *
 * rows indexed by the translation residue s in {0..q-1} and columns by
 * k in {0..p-1}. Vector-valued sequences concatenate channel blocks
 * horizontally (q x pR) and window families stack vertically (qL x pR).
 * A signal f enters through the column vector
 *
 *     F(j, theta) = ( z_{pM} f_r(j + kM, theta) )  for r in {0..R-1},
 *                                                      k in {0..p-1},
 *
 * of length pR (channel-major blocks of length p).
 *
 * All Zak values of finitely supported sequences are trigonometric
 * polynomials in theta, so evaluating on a uniform grid of T nodes is exact
 * once T exceeds the Fourier-index span; the helpers at the bottom compute
 * those spans from the supports.
 */

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gaborlat/geometry.hpp"
#include "gaborlat/sequence.hpp"

namespace gaborlat {

/// Uniform grid theta_t = t / T on [0, 1). Integrates e^{2 pi i n theta}
/// exactly for all |n| < T.
struct ThetaGrid {
    int T = 64;
    double node(int t) const { return static_cast<double>(t) / T; }
};

/// z_K of one channel of f at (j, theta). Exact finite sum.
Complex zak(const SparseSequence& f, int channel, std::int64_t K,
            std::int64_t j, double theta);

/// Componentwise Zak transform, length R.
Eigen::VectorXcd zak_vector(const SparseSequence& f, std::int64_t K,
                            std::int64_t j, double theta);

/// The q x p matrix Z of one channel of h.
Eigen::MatrixXcd z_matrix_scalar(const SparseSequence& h, int channel,
                                 const GaborGeometry& geo, std::int64_t j,
                                 double theta);

/// The q x pR matrix of a vector-valued sequence: channel blocks side by
/// side.
Eigen::MatrixXcd z_matrix_vector(const SparseSequence& f,
                                 const GaborGeometry& geo, std::int64_t j,
                                 double theta);

/// The qL x pR matrix of a window family: one q-row band per window.
/// Throws InputError if any window has the wrong channel count.
Eigen::MatrixXcd z_matrix_family(const std::vector<SparseSequence>& g,
                                 const GaborGeometry& geo, std::int64_t j,
                                 double theta);

/// The pR column vector F(j, theta) of a signal.
Eigen::VectorXcd f_vector(const SparseSequence& f, const GaborGeometry& geo,
                          std::int64_t j, double theta);

/// Checks the shift relation
///   Z_g(j + d*ell, theta)
///     = e^{-2 pi i m_ell theta} (I_L (x) C_ell(theta))
///       Z_g(j, theta) (I_R (x) A_ell(theta))
/// entrywise within tol.
bool shift_relation_check(const std::vector<SparseSequence>& g,
                          const GaborGeometry& geo, std::int64_t j,
                          std::int64_t ell, double theta, double tol = 1e-12);

/// Width (number of indices) of the Fourier range of z_K on one channel
/// when evaluated at arguments in [arg_lo, arg_hi]. Zero for an empty
/// channel.
int fourier_span(const SparseSequence& f, int channel, std::int64_t K,
                 std::int64_t arg_lo, std::int64_t arg_hi);

/// Largest Fourier span of any Z-matrix entry of the family over
/// j in [0, M). Grid checks on T nodes represent "almost every theta"
/// once T >= 2*span + 1 (products of two entries stay below degree T).
int family_fourier_span(const std::vector<SparseSequence>& g,
                        const GaborGeometry& geo);

/// Smallest grid size that makes pointwise checks on the family exact.
int required_grid_for_family(const std::vector<SparseSequence>& g,
                             const GaborGeometry& geo);

/// Fourier coefficients c_n, n in [n_lo, n_hi], of a trigonometric
/// polynomial from its samples on the T-node grid. Exact provided
/// n_hi - n_lo < T and the polynomial has no energy outside [n_lo, n_hi].
std::vector<Complex> fourier_coefficients(const std::vector<Complex>& samples,
                                          std::int64_t n_lo,
                                          std::int64_t n_hi);

}  // namespace gaborlat
