// Command-line front door: admissibility checks, window analysis, tight
// frame synthesis, Zak-matrix dumps and oracle cross-validation, all with
// machine-readable output.
//
// Exit codes: 0 success / affirmative verdict, 2 input error, 3 negative
// verdict, 4 unsupported regime.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "gaborlat/admissibility.hpp"
#include "gaborlat/frame_analysis.hpp"
#include "gaborlat/json_io.hpp"
#include "gaborlat/oracle.hpp"
#include "gaborlat/problem.hpp"
#include "gaborlat/synthesis.hpp"

namespace {

using nlohmann::json;
using namespace gaborlat;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNegative = 3;
constexpr int kExitUnsupported = 4;

struct CommonOptions {
    std::string problem_path;
    std::string windows_path;
    std::optional<int> grid_T;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
};

ProblemSpec load_problem(const CommonOptions& opt) {
    ProblemSpec spec = problem_from_json(load_json_file(opt.problem_path));
    if (opt.grid_T) spec.grid_T = *opt.grid_T;
    if (opt.tol) spec.tol = *opt.tol;
    if (opt.seed) spec.seed = *opt.seed;
    return spec;
}

WindowFamily load_windows(const CommonOptions& opt, const ProblemSpec& spec) {
    WindowFamily g = windows_from_json(load_json_file(opt.windows_path));
    validate_family(g, spec.support, spec.geo);
    return g;
}

void warn_if_coarse(const ProblemSpec& spec, const WindowFamily& g) {
    const int needed = required_grid_for_family(g, spec.geo);
    if (spec.grid().T < needed) {
        std::cerr << "warning: grid of " << spec.grid().T
                  << " nodes is below the family degree bound " << needed
                  << "; node checks may alias\n";
    }
}

int cmd_check(const CommonOptions& opt) {
    const ProblemSpec spec = load_problem(opt);
    const AdmissibilityReport report =
        admissibility_report(spec.support, spec.geo);
    std::cout << dump_json_17(to_json(report)) << "\n";
    return report.frame_admissible ? kExitOk : kExitNegative;
}

int cmd_analyze(const CommonOptions& opt) {
    const ProblemSpec spec = load_problem(opt);
    const WindowFamily g = load_windows(opt, spec);
    warn_if_coarse(spec, g);
    const FrameReport report =
        analyze(g, spec.support, spec.geo, spec.grid(), spec.tolerances());
    std::cout << dump_json_17(to_json(report)) << "\n";
    return report.frame ? kExitOk : kExitNegative;
}

int cmd_synthesize(const CommonOptions& opt, bool normalize,
                   const std::string& out_path) {
    const ProblemSpec spec = load_problem(opt);
    const SynthesisPlan synthesis_plan = plan(spec.support, spec.geo);
    const WindowFamily g = materialize(synthesis_plan, spec.support, normalize);
    const SynthesisVerification verification =
        verify_synthesis(g, spec.support, spec.geo);

    std::string plan_path = out_path;
    const std::string suffix = ".json";
    if (plan_path.size() >= suffix.size() &&
        plan_path.compare(plan_path.size() - suffix.size(), suffix.size(),
                          suffix) == 0) {
        plan_path.resize(plan_path.size() - suffix.size());
    }
    plan_path += ".plan.json";

    write_text_file(out_path, dump_json_17(windows_to_json(g)) + "\n");
    write_text_file(plan_path, dump_json_17(to_json(synthesis_plan)) + "\n");

    json summary{{"verified", verification.ok},
                 {"m_congruent", verification.m_congruent},
                 {"n_congruent", verification.n_congruent},
                 {"disjoint", verification.disjoint},
                 {"tight", verification.tight},
                 {"A", verification.A},
                 {"B", verification.B},
                 {"normalized", normalize},
                 {"windows_file", out_path},
                 {"plan_file", plan_path},
                 {"failures", verification.failures}};
    std::cout << dump_json_17(summary) << "\n";
    return verification.ok ? kExitOk : kExitNegative;
}

int cmd_zak(const CommonOptions& opt, std::int64_t j) {
    const ProblemSpec spec = load_problem(opt);
    const WindowFamily g = load_windows(opt, spec);
    const ThetaGrid grid = spec.grid();
    const GaborGeometry& geo = spec.geo;

    if (opt.format == "csv") {
        std::printf("theta_index,l,r,row,col,re,im\n");
        for (int t = 0; t < grid.T; ++t) {
            for (int l = 0; l < geo.L; ++l) {
                const Eigen::MatrixXcd Z =
                    z_matrix_vector(g[l], geo, j, grid.node(t));
                for (int r = 0; r < geo.R; ++r) {
                    for (int s = 0; s < geo.q; ++s) {
                        for (int k = 0; k < geo.p; ++k) {
                            const Complex value = Z(s, r * geo.p + k);
                            std::printf("%d,%d,%d,%d,%d,%.17g,%.17g\n", t, l,
                                        r, s, k, value.real(), value.imag());
                        }
                    }
                }
            }
        }
        return kExitOk;
    }

    json values = json::array();
    for (int t = 0; t < grid.T; ++t) {
        for (int l = 0; l < geo.L; ++l) {
            const Eigen::MatrixXcd Z =
                z_matrix_vector(g[l], geo, j, grid.node(t));
            for (int r = 0; r < geo.R; ++r) {
                for (int s = 0; s < geo.q; ++s) {
                    for (int k = 0; k < geo.p; ++k) {
                        const Complex value = Z(s, r * geo.p + k);
                        values.push_back(json{{"theta_index", t},
                                              {"l", l},
                                              {"r", r},
                                              {"row", s},
                                              {"col", k},
                                              {"re", value.real()},
                                              {"im", value.imag()}});
                    }
                }
            }
        }
    }
    std::cout << dump_json_17(json{{"j", j},
                                   {"grid_T", grid.T},
                                   {"values", std::move(values)}})
              << "\n";
    return kExitOk;
}

int cmd_oracle(const CommonOptions& opt, int trials) {
    const ProblemSpec spec = load_problem(opt);
    const WindowFamily g = load_windows(opt, spec);
    warn_if_coarse(spec, g);
    const GaborGeometry& geo = spec.geo;
    const double tolerance = spec.tol.value_or(1e-10);

    const FrameReport report =
        analyze(g, spec.support, spec.geo, spec.grid(), spec.tolerances());

    std::mt19937_64 rng(spec.seed);
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    bool any_ratio = false;
    for (int trial = 0; trial < trials; ++trial) {
        const SparseSequence f = random_signal(spec.support, geo, rng);
        const double ratio = frame_sum(f, g, geo) / f.squared_norm();
        if (!any_ratio) {
            min_ratio = max_ratio = ratio;
            any_ratio = true;
        } else {
            min_ratio = std::min(min_ratio, ratio);
            max_ratio = std::max(max_ratio, ratio);
        }
    }
    const bool ratios_ok =
        !any_ratio || (min_ratio >= report.A - 1e-9 &&
                       max_ratio <= report.B + 1e-9);

    const TightnessCertificate tightness =
        tightness_certificate(g, spec.support, geo, tolerance);
    const bool tight_agrees =
        tightness.is_tight == report.tight &&
        (!tightness.is_tight ||
         std::abs(tightness.bound - report.A) <= 1e-9 * std::max(1.0, report.A));

    // Zak-domain inner products against the direct sums for a couple of
    // random signals over all modulations and translation rows.
    double zak_error = 0.0;
    int comparisons = 0;
    for (int probe = 0; probe < 2; ++probe) {
        const SparseSequence f = random_signal(spec.support, geo, rng);
        for (const auto& window : g) {
            if (window.empty()) continue;
            const auto [t_lo, t_hi] = translation_range(f, window, geo);
            if (t_lo > t_hi) continue;
            const std::int64_t n_bound =
                std::max(std::abs(t_lo), std::abs(t_hi)) / geo.q + 1;
            const ThetaGrid grid{required_grid_for_inner_product(
                f, window, geo, n_bound)};
            for (int m = 0; m < geo.M; ++m) {
                for (std::int64_t n = -n_bound; n <= n_bound; ++n) {
                    for (int r = 0; r < geo.q; ++r) {
                        const Complex via_zak = inner_product_via_zak(
                            f, window, geo, grid, m, n, r);
                        const Complex direct = direct_inner_product(
                            f, window, geo, m, n * geo.q + r);
                        zak_error =
                            std::max(zak_error, std::abs(via_zak - direct));
                        ++comparisons;
                    }
                }
            }
        }
    }
    const bool zak_ok = zak_error <= tolerance;

    const bool all_ok =
        report.frame && ratios_ok && tight_agrees && zak_ok;
    json summary{
        {"trials", trials},
        {"frame_sum",
         json{{"min_ratio", min_ratio},
              {"max_ratio", max_ratio},
              {"A", report.A},
              {"B", report.B},
              {"within_bounds", ratios_ok}}},
        {"tightness",
         json{{"is_tight", tightness.is_tight},
              {"bound", tightness.bound},
              {"agrees_with_analysis", tight_agrees}}},
        {"zak_vs_direct",
         json{{"comparisons", comparisons},
              {"max_error", zak_error},
              {"ok", zak_ok}}},
        {"frame", report.frame},
        {"ok", all_ok}};
    std::cout << dump_json_17(summary) << "\n";
    return all_ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-window vector-valued Gabor frames on periodic "
                 "subsets of the integers"};
    app.require_subcommand(1);

    CommonOptions opt;
    bool normalize = false;
    std::string out_path = "windows.json";
    std::int64_t zak_j = 0;
    int trials = 100;

    auto add_common = [&](CLI::App* cmd, bool needs_windows) {
        cmd->add_option("--problem", opt.problem_path, "problem JSON file")
            ->required();
        if (needs_windows) {
            cmd->add_option("--windows", opt.windows_path,
                            "windows JSON file")
                ->required();
        }
        cmd->add_option("--grid-T", opt.grid_T, "theta grid size override");
        cmd->add_option("--tol", opt.tol, "verdict tolerance override");
        cmd->add_option("--seed", opt.seed, "random seed override");
    };

    CLI::App* check = app.add_subcommand(
        "check", "admissibility of (S, L, M, N, R)");
    add_common(check, false);
    check->add_option("--format", opt.format)->check(CLI::IsMember({"json"}));

    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "full frame report for a window family");
    add_common(analyze_cmd, true);
    analyze_cmd->add_option("--format", opt.format)
        ->check(CLI::IsMember({"json"}));

    CLI::App* synthesize_cmd = app.add_subcommand(
        "synthesize", "construct a tight frame of spike windows");
    add_common(synthesize_cmd, false);
    synthesize_cmd->add_flag("--normalize", normalize,
                             "scale windows by 1/sqrt(M) (Parseval)");
    synthesize_cmd->add_option("--out", out_path, "windows output file");

    CLI::App* zak_cmd = app.add_subcommand(
        "zak", "dump the Zak matrices of a family at one offset");
    add_common(zak_cmd, true);
    zak_cmd->add_option("--j", zak_j, "offset j")->required();
    zak_cmd->add_option("--format", opt.format)
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "cross-validate Zak verdicts against direct sums");
    add_common(oracle_cmd, true);
    oracle_cmd->add_option("--trials", trials, "random signal count")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (check->parsed()) return cmd_check(opt);
        if (analyze_cmd->parsed()) return cmd_analyze(opt);
        if (synthesize_cmd->parsed()) {
            return cmd_synthesize(opt, normalize, out_path);
        }
        if (zak_cmd->parsed()) return cmd_zak(opt, zak_j);
        if (oracle_cmd->parsed()) return cmd_oracle(opt, trials);
    } catch (const NotAdmissibleError& e) {
        std::cerr << "NotAdmissible: " << e.what() << "\n";
        return kExitNegative;
    } catch (const UnsupportedChannelCountError& e) {
        std::cerr << "UnsupportedChannelCount: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const GridTooCoarseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
