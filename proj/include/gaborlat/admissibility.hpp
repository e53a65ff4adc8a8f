#pragma once

/**
 * @file admissibility.hpp
 * @brief Parameter-level existence predicates for Gabor structures on a
 *        periodic support set.
 *
 * Whether (S, L, M, N, R) supports a complete system, a frame, a Parseval
 * frame, a Riesz basis or an orthonormal basis is pure counting: with
 * d = M/q, a frame exists iff R*|K_j| <= q*L for every j in {0..d-1}, and a
 * basis iff equality holds for every j. No windows are involved.
 */

#include <cstdint>
#include <vector>

#include "gaborlat/geometry.hpp"

namespace gaborlat {

struct AdmissibilityReport {
    std::vector<int> kj_cards;  ///< |K_j| for j in {0..d-1}
    std::int64_t card_SN = 0;   ///< |S intersect [0, N)|
    bool frame_admissible = false;
    bool basis_admissible = false;
    bool cardinality_necessary = false;
    int min_windows = 1;  ///< smallest L making frame_admissible true
};

/// True iff R*|K_j| <= q*L for all j in {0..d-1}; equivalently some family
/// of L windows generates a frame (indeed a Parseval frame).
bool frame_admissible(const PeriodicSet& S, const GaborGeometry& geo);

/// True iff R*|K_j| = q*L for all j in {0..d-1}; equivalently some family
/// generates a Riesz (indeed orthonormal) basis.
bool basis_admissible(const PeriodicSet& S, const GaborGeometry& geo);

/// The necessary counting bound R*card(S_N) <= L*M for any frame.
bool cardinality_necessary(const PeriodicSet& S, const GaborGeometry& geo);

/// ceil(R * max_j |K_j| / q): the smallest admissible window count.
int min_windows(const PeriodicSet& S, const GaborGeometry& geo);

AdmissibilityReport admissibility_report(const PeriodicSet& S,
                                         const GaborGeometry& geo);

}  // namespace gaborlat
