#include "gaborlat/problem.hpp"

#include "gaborlat/json_io.hpp"

namespace gaborlat {

using nlohmann::json;

Tolerances ProblemSpec::tolerances() const {
    Tolerances t;
    if (tol) {
        t.frame = *tol;
        t.tight = *tol;
        t.parseval = *tol;
        t.unit_norm = *tol;
    }
    return t;
}

ProblemSpec problem_from_json(const json& j) {
    ProblemSpec spec;
    try {
        spec.geo = reduce_geometry(
            j.at("L").get<int>(), j.at("M").get<int>(), j.at("N").get<int>(),
            j.at("R").get<int>());
        spec.support = periodic_set_from_json(j.at("support"));
        if (j.contains("grid_T") && !j.at("grid_T").is_null()) {
            spec.grid_T = j.at("grid_T").get<int>();
            if (*spec.grid_T < 1) {
                throw InputError("problem: grid_T must be >= 1");
            }
        }
        if (j.contains("tol") && !j.at("tol").is_null()) {
            spec.tol = j.at("tol").get<double>();
            if (*spec.tol <= 0.0) {
                throw InputError("problem: tol must be positive");
            }
        }
        if (j.contains("seed") && !j.at("seed").is_null()) {
            spec.seed = j.at("seed").get<std::uint64_t>();
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("problem: ") + e.what());
    }
    if (!spec.support.invariant_under_shift(spec.geo.N)) {
        throw InputError(
            "problem: support set is not invariant under translation by N");
    }
    return spec;
}

}  // namespace gaborlat
