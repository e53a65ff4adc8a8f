#include "gaborlat/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace gaborlat {

SynthesisPlan plan(const PeriodicSet& S, const GaborGeometry& geo) {
    if (geo.R > geo.q) {
        throw UnsupportedChannelCountError(
            "plan: R = " + std::to_string(geo.R) + " exceeds q = " +
            std::to_string(geo.q) +
            "; the constructive algorithm does not cover this regime");
    }
    SynthesisPlan result;
    result.geo = geo;
    result.assignments.assign(
        geo.d, std::vector<std::vector<PlanEntry>>(geo.L));
    result.spikes.assign(
        geo.L, std::vector<std::vector<std::int64_t>>(geo.R));

    for (int j = 0; j < geo.d; ++j) {
        const std::vector<int> kset = k_set(S, geo, j);
        const std::int64_t needed =
            static_cast<std::int64_t>(geo.R) * kset.size();
        if (needed > static_cast<std::int64_t>(geo.q) * geo.L) {
            throw NotAdmissibleError(
                "plan: offset " + std::to_string(j) + " needs " +
                std::to_string(needed) + " spike slots but q*L = " +
                std::to_string(static_cast<std::int64_t>(geo.q) * geo.L));
        }
        // Pack the (k, channel) pairs into windows of capacity q; the
        // position inside a window doubles as the translation shift s, so
        // all shifts within one window are distinct.
        int t = 0;
        for (int k : kset) {
            for (int r = 0; r < geo.R; ++r, ++t) {
                const int l = t / geo.q;
                const int s = t % geo.q;
                result.assignments[j][l].push_back(PlanEntry{k, r, s});
                result.spikes[l][r].push_back(
                    j + static_cast<std::int64_t>(k) * geo.M +
                    static_cast<std::int64_t>(s) * geo.N);
            }
        }
    }
    for (auto& window : result.spikes) {
        for (auto& channel : window) {
            std::sort(channel.begin(), channel.end());
        }
    }
    return result;
}

WindowFamily materialize(const SynthesisPlan& plan, const PeriodicSet& S,
                         bool normalize) {
    const GaborGeometry& geo = plan.geo;
    const Complex amplitude =
        normalize ? Complex(1.0 / std::sqrt(static_cast<double>(geo.M)), 0.0)
                  : Complex(1.0, 0.0);
    WindowFamily family;
    family.reserve(geo.L);
    for (int l = 0; l < geo.L; ++l) {
        SparseSequence window(geo.R, S);
        for (int r = 0; r < geo.R; ++r) {
            for (std::int64_t x : plan.spikes[l][r]) {
                window.set(x, r, amplitude);
            }
        }
        family.push_back(std::move(window));
    }
    return family;
}

WindowFamily synthesize(const PeriodicSet& S, const GaborGeometry& geo,
                        bool normalize) {
    return materialize(plan(S, geo), S, normalize);
}

SynthesisVerification verify_synthesis(const WindowFamily& g,
                                       const PeriodicSet& S,
                                       const GaborGeometry& geo) {
    SynthesisVerification v;
    validate_family(g, S, geo);

    // All nonzero samples must share one modulus for the tight bound to be
    // meaningful (characteristic-function structure up to scaling).
    double amplitude_sq = 0.0;
    bool constant_modulus = true;
    bool first = true;
    for (const auto& window : g) {
        for (const auto& [key, value] : window.entries()) {
            const double mag = std::norm(value);
            if (first) {
                amplitude_sq = mag;
                first = false;
            } else if (std::abs(mag - amplitude_sq) > 1e-12) {
                constant_modulus = false;
            }
        }
    }
    if (first) {
        v.failures.push_back("family has no nonzero samples");
        return v;
    }
    if (!constant_modulus) {
        v.failures.push_back("window samples do not share one modulus");
        return v;
    }

    v.m_congruent = true;
    for (int l = 0; l < geo.L; ++l) {
        for (int r = 0; r < geo.R; ++r) {
            if (!congruent_to_subset_mod(g[l].channel_support(r), geo.M)) {
                v.m_congruent = false;
                v.failures.push_back(
                    "window " + std::to_string(l) + " channel " +
                    std::to_string(r) +
                    " meets a residue class mod M twice");
            }
        }
    }

    v.n_congruent = true;
    for (int r = 0; r < geo.R; ++r) {
        std::vector<std::int64_t> combined;
        for (const auto& window : g) {
            const auto part = window.channel_support(r);
            combined.insert(combined.end(), part.begin(), part.end());
        }
        if (!nz_congruent_to(combined, S, geo.N)) {
            v.n_congruent = false;
            v.failures.push_back("channel " + std::to_string(r) +
                                 " support is not NZ-congruent to S_N");
        }
    }

    const ThetaGrid grid{std::max(3, required_grid_for_family(g, geo))};
    const GaborGeometry scalar_geo =
        reduce_geometry(geo.L, geo.M, geo.N, 1);
    v.disjoint = true;
    for (int r = 0; r < geo.R && v.disjoint; ++r) {
        WindowFamily channel_r;
        for (const auto& window : g) channel_r.push_back(window.channel(r));
        for (int r2 = r + 1; r2 < geo.R; ++r2) {
            WindowFamily channel_r2;
            for (const auto& window : g) {
                channel_r2.push_back(window.channel(r2));
            }
            if (!strong_disjointness(channel_r, channel_r2, scalar_geo, grid,
                                     1e-9)) {
                v.disjoint = false;
                v.failures.push_back("channels " + std::to_string(r) +
                                     " and " + std::to_string(r2) +
                                     " are not strongly disjoint");
            }
        }
    }

    const double expected = geo.M * amplitude_sq;
    const GramField gram(g, S, geo, grid);
    const FrameBounds bounds = frame_bounds(gram);
    v.A = bounds.A;
    v.B = bounds.B;
    v.tight = std::abs(bounds.A - expected) <=
                  1e-9 * std::max(1.0, expected) &&
              std::abs(bounds.B - expected) <= 1e-9 * std::max(1.0, expected);
    if (!v.tight) {
        v.failures.push_back("frame bounds are not the tight value " +
                             std::to_string(expected));
    }

    v.ok = v.m_congruent && v.n_congruent && v.disjoint && v.tight;
    return v;
}

}  // namespace gaborlat
