#include "gaborlat/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gaborlat {

using nlohmann::json;

namespace {

/// Runs a parse body and rewraps library exceptions as InputError with the
/// offending context named.
template <typename Fn>
auto parse_guard(const char* what, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

json to_json(const PeriodicSet& S) {
    return json{{"period", S.period()}, {"residues", S.residues()}};
}

PeriodicSet periodic_set_from_json(const json& j) {
    return parse_guard("periodic set", [&] {
        return PeriodicSet(j.at("period").get<std::int64_t>(),
                           j.at("residues").get<std::vector<std::int64_t>>());
    });
}

json to_json(const SparseSequence& f) {
    json entries = json::array();
    for (const auto& [key, value] : f.entries()) {
        entries.push_back(json{{"index", key.first},
                               {"channel", key.second},
                               {"re", value.real()},
                               {"im", value.imag()}});
    }
    json out{{"channels", f.channels()}, {"entries", std::move(entries)}};
    if (f.support()) out["support"] = to_json(*f.support());
    return out;
}

SparseSequence sequence_from_json(const json& j) {
    return parse_guard("sequence", [&] {
        std::optional<PeriodicSet> support;
        if (j.contains("support") && !j.at("support").is_null()) {
            support = periodic_set_from_json(j.at("support"));
        }
        SparseSequence f(j.at("channels").get<int>(), std::move(support));
        for (const auto& entry : j.at("entries")) {
            f.add(entry.at("index").get<std::int64_t>(),
                  entry.at("channel").get<int>(),
                  Complex(entry.at("re").get<double>(),
                          entry.at("im").get<double>()));
        }
        return f;
    });
}

json windows_to_json(const WindowFamily& g) {
    json windows = json::array();
    for (const auto& window : g) windows.push_back(to_json(window));
    return json{{"windows", std::move(windows)}};
}

WindowFamily windows_from_json(const json& j) {
    return parse_guard("windows", [&] {
        WindowFamily g;
        for (const auto& window : j.at("windows")) {
            g.push_back(sequence_from_json(window));
        }
        return g;
    });
}

json to_json(const AdmissibilityReport& report) {
    return json{{"kj_cards", report.kj_cards},
                {"card_SN", report.card_SN},
                {"frame_admissible", report.frame_admissible},
                {"basis_admissible", report.basis_admissible},
                {"cardinality_necessary", report.cardinality_necessary},
                {"min_windows", report.min_windows}};
}

AdmissibilityReport admissibility_report_from_json(const json& j) {
    return parse_guard("admissibility report", [&] {
        AdmissibilityReport report;
        report.kj_cards = j.at("kj_cards").get<std::vector<int>>();
        report.card_SN = j.at("card_SN").get<std::int64_t>();
        report.frame_admissible = j.at("frame_admissible").get<bool>();
        report.basis_admissible = j.at("basis_admissible").get<bool>();
        report.cardinality_necessary =
            j.at("cardinality_necessary").get<bool>();
        report.min_windows = j.at("min_windows").get<int>();
        return report;
    });
}

json to_json(const FrameReport& report) {
    json certificates = json::array();
    for (const auto& cert : report.certificates) {
        certificates.push_back(json{{"j", cert.j},
                                    {"theta_index", cert.theta_index},
                                    {"lambda_min", cert.lambda_min},
                                    {"lambda_max", cert.lambda_max},
                                    {"rank", cert.rank}});
    }
    return json{
        {"bessel", report.bessel},
        {"complete", report.complete},
        {"frame", report.frame},
        {"A", report.A},
        {"B", report.B},
        {"tight", report.tight},
        {"parseval", report.parseval},
        {"riesz", report.riesz},
        {"onb", report.onb},
        {"certificates", std::move(certificates)},
        {"grid_T", report.grid_T},
        {"tolerances",
         json{{"rank_rel", report.tolerances.rank_rel},
              {"rank_abs", report.tolerances.rank_abs},
              {"frame", report.tolerances.frame},
              {"tight", report.tolerances.tight},
              {"parseval", report.tolerances.parseval},
              {"unit_norm", report.tolerances.unit_norm},
              {"grid_degree_bound", report.grid_degree_bound},
              {"bessel_max_entry", report.bessel_max_entry}}}};
}

FrameReport frame_report_from_json(const json& j) {
    return parse_guard("frame report", [&] {
        FrameReport report;
        report.bessel = j.at("bessel").get<bool>();
        report.complete = j.at("complete").get<bool>();
        report.frame = j.at("frame").get<bool>();
        report.A = j.at("A").get<double>();
        report.B = j.at("B").get<double>();
        report.tight = j.at("tight").get<bool>();
        report.parseval = j.at("parseval").get<bool>();
        report.riesz = j.at("riesz").get<bool>();
        report.onb = j.at("onb").get<bool>();
        for (const auto& cert : j.at("certificates")) {
            report.certificates.push_back(
                GramCertificate{cert.at("j").get<int>(),
                                cert.at("theta_index").get<int>(),
                                cert.at("lambda_min").get<double>(),
                                cert.at("lambda_max").get<double>(),
                                cert.at("rank").get<int>()});
        }
        report.grid_T = j.at("grid_T").get<int>();
        const json& tol = j.at("tolerances");
        report.tolerances.rank_rel = tol.at("rank_rel").get<double>();
        report.tolerances.rank_abs = tol.at("rank_abs").get<double>();
        report.tolerances.frame = tol.at("frame").get<double>();
        report.tolerances.tight = tol.at("tight").get<double>();
        report.tolerances.parseval = tol.at("parseval").get<double>();
        report.tolerances.unit_norm = tol.at("unit_norm").get<double>();
        report.grid_degree_bound = tol.at("grid_degree_bound").get<int>();
        report.bessel_max_entry = tol.at("bessel_max_entry").get<double>();
        return report;
    });
}

json to_json(const SynthesisPlan& plan) {
    json geometry{{"L", plan.geo.L}, {"M", plan.geo.M}, {"N", plan.geo.N},
                  {"R", plan.geo.R}, {"p", plan.geo.p}, {"q", plan.geo.q},
                  {"d", plan.geo.d}};
    json assignments = json::array();
    for (std::size_t j = 0; j < plan.assignments.size(); ++j) {
        for (std::size_t l = 0; l < plan.assignments[j].size(); ++l) {
            if (plan.assignments[j][l].empty()) continue;
            json entries = json::array();
            for (const PlanEntry& entry : plan.assignments[j][l]) {
                entries.push_back(json{
                    {"k", entry.k}, {"r", entry.r}, {"s", entry.s}});
            }
            assignments.push_back(json{{"j", j},
                                       {"window", l},
                                       {"entries", std::move(entries)}});
        }
    }
    json spikes = json::array();
    for (std::size_t l = 0; l < plan.spikes.size(); ++l) {
        for (std::size_t r = 0; r < plan.spikes[l].size(); ++r) {
            spikes.push_back(json{{"window", l},
                                  {"channel", r},
                                  {"positions", plan.spikes[l][r]}});
        }
    }
    return json{{"geometry", std::move(geometry)},
                {"assignments", std::move(assignments)},
                {"spikes", std::move(spikes)}};
}

namespace {

void dump_value(const json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * indent, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * indent,
                             ' ');
    switch (j.type()) {
        case json::value_t::number_float: {
            char buffer[64];
            std::snprintf(buffer, sizeof(buffer), "%.17g",
                          j.get<double>());
            out += buffer;
            break;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                dump_value(j[i], out, indent, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            break;
        }
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += pad_in + json(it.key()).dump() + ": ";
                dump_value(it.value(), out, indent, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            break;
        }
        default:
            out += j.dump();
            break;
    }
}

}  // namespace

std::string dump_json_17(const json& j, int indent) {
    std::string out;
    dump_value(j, out, indent, 0);
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out.good()) {
        throw InputError("cannot open " + path + " for writing");
    }
    out << text;
    if (!out.good()) {
        throw InputError("failed writing " + path);
    }
}

}  // namespace gaborlat
