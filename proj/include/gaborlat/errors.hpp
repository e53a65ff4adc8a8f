#pragma once

#include <stdexcept>
#include <string>

namespace gaborlat {

/// Malformed or inconsistent user input (bad JSON, invalid parameters,
/// windows outside the declared support set, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The parameter tuple (S, L, M, N, R) admits no complete Gabor system,
/// so synthesis is impossible.
struct NotAdmissibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Synthesis was asked for more channels than modulation residues per
/// translation block (R > q); the constructive algorithm does not cover
/// this regime and we refuse rather than improvise.
struct UnsupportedChannelCountError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A theta grid too small to evaluate the requested quantity exactly.
/// The message names the required grid size.
struct GridTooCoarseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gaborlat
