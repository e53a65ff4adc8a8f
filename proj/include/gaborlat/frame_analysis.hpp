#pragma once

/**
 * @file frame_analysis.hpp
 * @brief Zak-domain decision procedures for multi-window vector-valued
 *        Gabor systems on a periodic support set.
 *
 * Everything reduces to the matrix fields of zak.hpp evaluated on a theta
 * grid, for offsets j in {0..d-1} (d = M/q suffices; the {0..M-1} variant
 * is kept as a cross-check):
 *
 *   - completeness  <=>  rank Z_g(j, theta) = R*|K_j| everywhere,
 *   - frame with bounds A <= B  <=>  the Gram field
 *         G(j, theta) = sum_l Z_{g_l}(j, theta)^* Z_{g_l}(j, theta)
 *     satisfies (A/M) P <= G <= (B/M) P with P the orthogonal projection
 *     onto the Lambda_j coordinates; the reported A and B are the extreme
 *     eigenvalues of the Lambda_j-restricted Gram, scaled by M,
 *   - Parseval  <=>  the restricted Gram equals I/M,
 *   - strong disjointness of two families  <=>  the mixed sum
 *     sum_l Z_{g_l}^* Z_{h_l} vanishes,
 *   - Riesz  <=>  frame and R*card(S_N) = L*M; orthonormal basis  <=>
 *     Parseval and every window has unit norm.
 *
 * Entries are trigonometric polynomials, so grid checks are exact once the
 * grid exceeds the degree bound; reports record both numbers.
 */

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "gaborlat/geometry.hpp"
#include "gaborlat/sequence.hpp"
#include "gaborlat/zak.hpp"

namespace gaborlat {

using WindowFamily = std::vector<SparseSequence>;

/// Offsets swept by the decision procedures.
enum class OffsetRange {
    FirstD,  ///< j in {0..d-1}; sufficient by the shift relation
    FirstM,  ///< j in {0..M-1}; redundant cross-check mode
};

struct Tolerances {
    double rank_rel = 1e-9;   ///< singular values below rank_rel*sigma_max...
    double rank_abs = 1e-12;  ///< ...floored at rank_abs count as zero
    double frame = 1e-9;      ///< frame verdict: A > frame * max(1, B)
    double tight = 1e-9;      ///< tightness: B - A <= tight * max(1, B)
    double parseval = 1e-9;   ///< entrywise deviation from I/M
    double unit_norm = 1e-9;  ///< | ||g_l|| - 1 | bound for the ONB check
};

/// Worst-case data for one offset j: the grid node with the smallest
/// restricted eigenvalue, the largest eigenvalue seen at any node, and the
/// smallest numerical rank seen at any node.
struct GramCertificate {
    int j = 0;
    int theta_index = 0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    int rank = 0;
};

struct FrameReport {
    bool bessel = false;
    bool complete = false;
    bool frame = false;
    double A = 0.0;
    double B = 0.0;
    bool tight = false;
    bool parseval = false;
    bool riesz = false;
    bool onb = false;
    std::vector<GramCertificate> certificates;
    int grid_T = 0;
    int grid_degree_bound = 0;   ///< Fourier span bound of the Z entries
    double bessel_max_entry = 0.0;
    Tolerances tolerances;
};

/// Throws InputError unless the family has exactly geo.L windows with
/// geo.R channels each, all supported inside S.
void validate_family(const WindowFamily& g, const PeriodicSet& S,
                     const GaborGeometry& geo);

/// The Hermitian pR x pR matrices G(j, theta_t) for the swept offsets.
class GramField {
  public:
    GramField(const WindowFamily& g, const PeriodicSet& S,
              const GaborGeometry& geo, ThetaGrid grid,
              OffsetRange range = OffsetRange::FirstD);

    const GaborGeometry& geometry() const { return geo_; }
    const ThetaGrid& grid() const { return grid_; }
    int offset_count() const { return static_cast<int>(lambdas_.size()); }
    const Eigen::MatrixXcd& at(int j, int t) const;
    const std::vector<int>& kset(int j) const { return ksets_[j]; }
    const std::vector<int>& lambda(int j) const { return lambdas_[j]; }
    /// Grid size needed for the node checks to be exact.
    int degree_bound() const { return degree_bound_; }

  private:
    GaborGeometry geo_;
    ThetaGrid grid_;
    int degree_bound_ = 0;
    std::vector<std::vector<int>> ksets_;
    std::vector<std::vector<int>> lambdas_;
    std::vector<Eigen::MatrixXcd> values_;  // [j * T + t]
};

GramField gram_field(const WindowFamily& g, const PeriodicSet& S,
                     const GaborGeometry& geo, ThetaGrid grid,
                     OffsetRange range = OffsetRange::FirstD);

struct CompletenessResult {
    bool complete = false;
    /// Smallest numerical rank over grid nodes, per swept offset j.
    std::vector<int> min_ranks;
    /// The target R*|K_j|, per swept offset j.
    std::vector<int> required_ranks;
};

/// Rank criterion: complete iff the numerical rank of Z_g(j, theta_t)
/// equals R*|K_j| at every offset and node.
CompletenessResult completeness_check(const WindowFamily& g,
                                      const PeriodicSet& S,
                                      const GaborGeometry& geo, ThetaGrid grid,
                                      const Tolerances& tol = {},
                                      OffsetRange range = OffsetRange::FirstD);

struct FrameBounds {
    double A = 0.0;
    double B = 0.0;
    bool is_frame = false;
};

/// Optimal bounds on the grid: A and B are M times the extreme eigenvalues
/// of the Lambda_j-restricted Gram matrices over offsets with nonempty K_j.
/// With strict_grid, a grid below the family degree bound throws
/// GridTooCoarseError instead of proceeding.
FrameBounds frame_bounds(const GramField& gram, const Tolerances& tol = {},
                         bool strict_grid = false);

/// True iff every Lambda_j-restricted Gram equals I/M within tol.parseval.
bool parseval_check(const GramField& gram, const Tolerances& tol = {});

/// True iff sum_l Z_{g_l}^*(j, theta) Z_{h_l}(j, theta) vanishes for every
/// swept offset and node. Throws InputError on family shape mismatch.
bool strong_disjointness(const WindowFamily& g, const WindowFamily& h,
                         const GaborGeometry& geo, ThetaGrid grid,
                         double tol = 1e-9);

/// Smallest grid size on which mixed_frame_operator_zak can reconstruct
/// the output of S_{h,g} applied to f without aliasing.
int required_grid_for_mixed_operator(const WindowFamily& h,
                                     const WindowFamily& g,
                                     const SparseSequence& f,
                                     const GaborGeometry& geo);

/// Applies the mixed frame operator S_{h,g} (analysis with h, synthesis
/// with g) to f entirely in the Zak domain and reconstructs the resulting
/// sequence from its Zak samples. Throws GridTooCoarseError when the grid
/// cannot separate the output's Fourier coefficients.
SparseSequence mixed_frame_operator_zak(const WindowFamily& h,
                                        const WindowFamily& g,
                                        const SparseSequence& f,
                                        const GaborGeometry& geo,
                                        ThetaGrid grid);

/// Riesz and orthonormal-basis verdicts on top of established frame /
/// Parseval flags: Riesz iff R*card(S_N) = L*M, ONB iff Parseval with unit
/// window norms.
std::pair<bool, bool> riesz_onb_check(bool is_frame, bool is_parseval,
                                      const WindowFamily& g,
                                      const PeriodicSet& S,
                                      const GaborGeometry& geo,
                                      const Tolerances& tol = {});

/// For a Parseval family, sum_l ||g_l||^2 must equal R*card(S_N)/M.
bool norm_identity_check(const WindowFamily& g, const PeriodicSet& S,
                         const GaborGeometry& geo, double tol = 1e-10);

struct BesselCertificate {
    bool bessel = true;
    double max_entry = 0.0;  ///< sup of |Z_g entries| over offsets and nodes
};

/// Finitely supported windows always form a Bessel system; the certificate
/// records the largest Zak-matrix entry seen.
BesselCertificate bessel_check(const WindowFamily& g, const GaborGeometry& geo,
                               ThetaGrid grid);

/// Full report: all verdicts, bounds and per-offset certificates.
FrameReport analyze(const WindowFamily& g, const PeriodicSet& S,
                    const GaborGeometry& geo, ThetaGrid grid,
                    const Tolerances& tol = {}, bool strict_grid = false);

}  // namespace gaborlat
