#pragma once

/**
 * @file geometry.hpp
 * @brief Integer and combinatorial machinery for Gabor lattices on periodic
 *        subsets of the integers.
 *
 * A Gabor system on Z is parameterized by a window count L, a modulation
 * modulus M (modulations step by 1/M), a translation step N (translations
 * step by N) and a channel count R (sequences take values in C^R). Writing
 * N/M = p/q in lowest terms, the derived block size d = M/q = N/p controls
 * everything combinatorial:
 *
 *   - an N-periodic support set S is sliced into the index sets
 *     K_j = { k in {0..p-1} : j + kM in S },
 *   - the active coordinates of C^{pR} at offset j are
 *     Lambda_j = { k + rp : k in K_j, r in {0..R-1} },
 *   - shifting j by a multiple of d acts on K_j through the unitary
 *     permutation-with-phase matrices A_l(theta) (p x p) and C_l(theta)
 *     (q x q) built from the unique decomposition
 *     l = k_l q + (m_l q - r_l) p with k_l in {0..p-1}, r_l in {0..q-1}.
 *
 * Everything in this header is a pure function of immutable values.
 */

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "gaborlat/errors.hpp"

namespace gaborlat {

using Complex = std::complex<double>;

/// The parameter tuple (L, M, N, R) together with the reduced fraction
/// N/M = p/q and the block size d = M/q = N/p.
struct GaborGeometry {
    int L = 1;  ///< window count
    int M = 1;  ///< modulation modulus
    int N = 1;  ///< translation step
    int R = 1;  ///< channel count
    int p = 1;  ///< numerator of N/M in lowest terms
    int q = 1;  ///< denominator of N/M in lowest terms
    int d = 1;  ///< block size M/q = N/p
};

/// Validates L, M, N, R >= 1 and derives (p, q, d).
/// Postconditions: gcd(p, q) = 1, N*q = M*p, d*q = M, d*p = N.
GaborGeometry reduce_geometry(int L, int M, int N, int R);

/// An N-periodic subset of Z stored as sorted unique residues modulo a
/// declared period. Membership of any integer is decided by reduction mod
/// the period, so re-expressing at a multiple of the period never changes
/// the set.
class PeriodicSet {
  public:
    /// Residues are normalized into [0, period), sorted and deduplicated.
    /// Throws InputError on period < 1 or an empty residue list.
    PeriodicSet(std::int64_t period, std::vector<std::int64_t> residues);

    /// The full line Z (period 1, residue 0).
    static PeriodicSet integers() { return PeriodicSet(1, {0}); }

    std::int64_t period() const { return period_; }
    const std::vector<std::int64_t>& residues() const { return residues_; }

    bool contains(std::int64_t j) const;

    /// Re-expresses the same set at c times the period (c >= 1).
    PeriodicSet at_period(std::int64_t new_period) const;

    /// True iff the set is invariant under translation by step.
    bool invariant_under_shift(std::int64_t step) const;

    /// Number of elements in S intersected with [0, K).
    std::int64_t card_within(std::int64_t K) const;

    bool operator==(const PeriodicSet& other) const;

  private:
    std::int64_t period_;
    std::vector<std::int64_t> residues_;
};

/// K_j = { k in {0..p-1} : j + kM in S }, returned sorted.
std::vector<int> k_set(const PeriodicSet& S, const GaborGeometry& geo,
                       std::int64_t j);

/// Lambda_j = { k + rp : k in kset, r in {0..R-1} }, returned sorted.
std::vector<int> lambda_set(const std::vector<int>& kset, int p, int R);

/// The index sets attached to one offset j.
struct IndexProjection {
    std::int64_t j = 0;
    std::vector<int> kset;    ///< subset of {0..p-1}
    std::vector<int> lambda;  ///< subset of {0..pR-1}, |lambda| = R*|kset|
};

IndexProjection index_projection(const PeriodicSet& S,
                                 const GaborGeometry& geo, std::int64_t j);

/// The p x p diagonal 0/1 matrix with ones exactly at kset.
/// Idempotent and Hermitian by construction.
Eigen::MatrixXd projection_matrix(const std::vector<int>& kset, int p);

/// Block-diagonal matrix with K copies of A on the diagonal.
Eigen::MatrixXcd kron_identity(int K, const Eigen::MatrixXcd& A);

/// The unique triple with ell = k*q + (m*q - r)*p, k in {0..p-1},
/// r in {0..q-1}, m in Z. Existence and uniqueness follow from
/// gcd(p, q) = 1; the sizes are tiny so exhaustive search is used.
struct EllDecomposition {
    int k = 0;
    int r = 0;
    std::int64_t m = 0;
};

EllDecomposition decompose_ell(const GaborGeometry& geo, std::int64_t ell);

/// The pair of unitaries implementing the offset shift j -> j + d*ell on
/// the Zak-domain matrices. a is p x p, c is q x q; both degenerate to the
/// identity when the corresponding residue of the decomposition vanishes.
struct ShiftUnitaries {
    Eigen::MatrixXcd a;
    Eigen::MatrixXcd c;
};

ShiftUnitaries shift_unitaries(const GaborGeometry& geo, std::int64_t ell,
                               double theta);

/// True iff no two elements of E are congruent modulo M, i.e. E meets each
/// residue class mod M at most once.
bool congruent_to_subset_mod(const std::vector<std::int64_t>& E,
                             std::int64_t M);

/// True iff e -> e mod N is a bijection from E onto S intersected with
/// [0, N).
bool nz_congruent_to(const std::vector<std::int64_t>& E, const PeriodicSet& S,
                     std::int64_t N);

}  // namespace gaborlat
