#pragma once

/**
 * @file problem.hpp
 * @brief A fully validated problem statement: geometry, support set and
 *        numeric knobs, as loaded from a problem JSON file.
 */

#include <cstdint>
#include <optional>

#include "json.hpp"

#include "gaborlat/frame_analysis.hpp"
#include "gaborlat/geometry.hpp"
#include "gaborlat/zak.hpp"

namespace gaborlat {

struct ProblemSpec {
    GaborGeometry geo;
    PeriodicSet support = PeriodicSet::integers();
    std::optional<int> grid_T;
    std::optional<double> tol;
    std::uint64_t seed = 0xC0FFEE;

    ThetaGrid grid() const { return ThetaGrid{grid_T.value_or(64)}; }

    /// Default tolerances, with the verdict thresholds replaced by the
    /// problem-level override when one is given.
    Tolerances tolerances() const;
};

/// Parses and validates {"L","M","N","R","support",...}. Rejects
/// non-positive parameters, empty supports, supports that are not
/// N-periodic, and grid sizes below 1.
ProblemSpec problem_from_json(const nlohmann::json& j);

}  // namespace gaborlat
