#pragma once

/**
 * @file synthesis.hpp
 * @brief Construction of tight multi-window Gabor frames from characteristic
 *        functions.
 *
 * When R*|K_j| <= q*L holds for every offset j in {0..d-1}, a tight frame
 * always exists and can be built explicitly: at each offset j, walk the
 * pairs (k, channel) with k in K_j in increasing order and channels
 * innermost, and pack them into windows of capacity q, giving the pair at
 * in-window position s the single spike at
 *
 *     j + k*M + s*N.
 *
 * Distinct in-window shifts s make each window's channel supports meet
 * every residue class mod M at most once and make the channels strongly
 * disjoint; using each (j, k, channel) exactly once makes every channel's
 * combined support NZ-congruent to S intersect [0, N). Together these
 * yield an M-tight frame (Parseval after scaling by 1/sqrt(M)). When q is
 * a multiple of R the packing lands exactly on blocks of floor(q/R)
 * consecutive k's per window with s = i*R + r.
 *
 * verify_synthesis re-derives all four obligations independently, so every
 * synthesized family carries its own certificate.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "gaborlat/frame_analysis.hpp"
#include "gaborlat/geometry.hpp"
#include "gaborlat/sequence.hpp"

namespace gaborlat {

/// One spike assignment inside a window block: column k of K_j, channel r,
/// in-window shift s in {0..q-1}.
struct PlanEntry {
    int k = 0;
    int r = 0;
    int s = 0;
};

struct SynthesisPlan {
    GaborGeometry geo;
    /// assignments[j][l]: the entries placed in window l at offset j.
    std::vector<std::vector<std::vector<PlanEntry>>> assignments;
    /// spikes[l][r]: the sorted support E of the characteristic function on
    /// channel r of window l.
    std::vector<std::vector<std::vector<std::int64_t>>> spikes;
};

/// Builds the deterministic assignment. Throws UnsupportedChannelCountError
/// when R > q and NotAdmissibleError when R*|K_j| > q*L for some offset.
SynthesisPlan plan(const PeriodicSet& S, const GaborGeometry& geo);

/// Windows from a plan: characteristic functions of the spike sets, scaled
/// by 1/sqrt(M) when normalize, declared support S.
WindowFamily materialize(const SynthesisPlan& plan, const PeriodicSet& S,
                         bool normalize);

/// plan + materialize.
WindowFamily synthesize(const PeriodicSet& S, const GaborGeometry& geo,
                        bool normalize = true);

struct SynthesisVerification {
    bool ok = false;
    bool m_congruent = false;   ///< every E^{l,r} hits residues mod M once
    bool n_congruent = false;   ///< every E^r is NZ-congruent to S_N
    bool disjoint = false;      ///< channel systems mutually strongly disjoint
    bool tight = false;         ///< frame bounds A = B = M * amplitude^2
    double A = 0.0;
    double B = 0.0;
    std::vector<std::string> failures;
};

/// Checks the four obligations on any family of constant-modulus spike
/// windows (synthesized or user-supplied).
SynthesisVerification verify_synthesis(const WindowFamily& g,
                                       const PeriodicSet& S,
                                       const GaborGeometry& geo);

}  // namespace gaborlat
