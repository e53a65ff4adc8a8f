#pragma once

// Shared fixtures and generators for the test suites: the canonical
// two-window example on S = {3,5} + 6Z, plus randomized instances and
// signals for property checks.

#include <cstdint>
#include <random>

#include "gaborlat/admissibility.hpp"
#include "gaborlat/frame_analysis.hpp"
#include "gaborlat/geometry.hpp"
#include "gaborlat/sequence.hpp"

namespace gaborlat::testing {

struct ExampleFixture {
    PeriodicSet S;
    GaborGeometry geo;
    WindowFamily windows;  // g_0 = (chi_{9}, chi_{3}), g_1 = (chi_{5}, chi_{11})
};

inline ExampleFixture example() {
    ExampleFixture fx{PeriodicSet(6, {3, 5}), reduce_geometry(2, 4, 6, 2), {}};
    SparseSequence g0(2, fx.S);
    g0.set(9, 0, 1.0);
    g0.set(3, 1, 1.0);
    SparseSequence g1(2, fx.S);
    g1.set(5, 0, 1.0);
    g1.set(11, 1, 1.0);
    fx.windows = {g0, g1};
    return fx;
}

struct RandomInstance {
    PeriodicSet S;
    GaborGeometry geo;
};

/// A random N-periodic support set with each residue kept with probability
/// one half (resampled when empty).
inline PeriodicSet random_support(std::mt19937_64& rng, int N) {
    std::bernoulli_distribution keep(0.5);
    while (true) {
        std::vector<std::int64_t> residues;
        for (int r = 0; r < N; ++r) {
            if (keep(rng)) residues.push_back(r);
        }
        if (!residues.empty()) return PeriodicSet(N, residues);
    }
}

/// Random geometry and support with R <= q, not necessarily admissible.
inline RandomInstance random_instance(std::mt19937_64& rng, int max_MN = 12,
                                      int max_L = 4) {
    std::uniform_int_distribution<int> mn(1, max_MN);
    std::uniform_int_distribution<int> lw(1, max_L);
    const int M = mn(rng);
    const int N = mn(rng);
    const int q = reduce_geometry(1, M, N, 1).q;
    const int R = std::uniform_int_distribution<int>(1, q)(rng);
    const int L = lw(rng);
    return RandomInstance{random_support(rng, N),
                          reduce_geometry(L, M, N, R)};
}

/// Random instance satisfying the frame admissibility condition.
inline RandomInstance random_admissible_instance(std::mt19937_64& rng,
                                                 int max_MN = 12,
                                                 int max_L = 4) {
    while (true) {
        RandomInstance instance = random_instance(rng, max_MN, max_L);
        if (frame_admissible(instance.S, instance.geo)) return instance;
    }
}

/// Random finitely supported sequence with spikes anywhere in [lo, hi).
inline SparseSequence random_sparse(std::mt19937_64& rng, int channels,
                                    std::int64_t lo, std::int64_t hi,
                                    int max_spikes = 6) {
    SparseSequence f(channels);
    std::uniform_int_distribution<std::int64_t> position(lo, hi - 1);
    std::uniform_int_distribution<int> channel(0, channels - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int spikes = std::uniform_int_distribution<int>(1, max_spikes)(rng);
    for (int i = 0; i < spikes; ++i) {
        f.add(position(rng), channel(rng), Complex(gauss(rng), gauss(rng)));
    }
    return f;
}

/// Random family of L such sequences.
inline WindowFamily random_family(std::mt19937_64& rng,
                                  const GaborGeometry& geo, std::int64_t lo,
                                  std::int64_t hi, int max_spikes = 6) {
    WindowFamily g;
    for (int l = 0; l < geo.L; ++l) {
        g.push_back(random_sparse(rng, geo.R, lo, hi, max_spikes));
    }
    return g;
}

/// Random sequence supported inside S, spikes in [-span, span).
inline SparseSequence random_supported(std::mt19937_64& rng,
                                       const PeriodicSet& S, int channels,
                                       std::int64_t span, int max_spikes = 6) {
    std::vector<std::int64_t> candidates;
    for (std::int64_t j = -span; j < span; ++j) {
        if (S.contains(j)) candidates.push_back(j);
    }
    SparseSequence f(channels, S);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    std::uniform_int_distribution<int> channel(0, channels - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int spikes = std::uniform_int_distribution<int>(1, max_spikes)(rng);
    for (int i = 0; i < spikes; ++i) {
        f.add(candidates[pick(rng)], channel(rng),
              Complex(gauss(rng), gauss(rng)));
    }
    return f;
}

}  // namespace gaborlat::testing
