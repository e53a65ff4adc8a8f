#include "gaborlat/frame_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include "gaborlat/detail/parallel.hpp"

namespace gaborlat {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

int offset_span(const GaborGeometry& geo, OffsetRange range) {
    return range == OffsetRange::FirstD ? geo.d : geo.M;
}

int numerical_rank(const Eigen::MatrixXcd& Z, const Tolerances& tol) {
    if (Z.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Z);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0) return 0;
    const double cutoff =
        std::max(tol.rank_rel * sigma(0), tol.rank_abs);
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff) ++rank;
    }
    return rank;
}

Eigen::MatrixXcd restrict_to(const Eigen::MatrixXcd& G,
                             const std::vector<int>& lambda) {
    const Eigen::Index n = static_cast<Eigen::Index>(lambda.size());
    Eigen::MatrixXcd sub(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            sub(a, b) = G(lambda[a], lambda[b]);
        }
    }
    return sub;
}

}  // namespace

void validate_family(const WindowFamily& g, const PeriodicSet& S,
                     const GaborGeometry& geo) {
    if (g.size() != static_cast<std::size_t>(geo.L)) {
        throw InputError("family has " + std::to_string(g.size()) +
                         " windows, geometry expects " + std::to_string(geo.L));
    }
    for (std::size_t l = 0; l < g.size(); ++l) {
        if (g[l].channels() != geo.R) {
            throw InputError("window " + std::to_string(l) +
                             " has wrong channel count");
        }
        for (const auto& [key, value] : g[l].entries()) {
            if (!S.contains(key.first)) {
                throw InputError("window " + std::to_string(l) +
                                 " has a sample at index " +
                                 std::to_string(key.first) +
                                 " outside the support set");
            }
        }
    }
}

GramField::GramField(const WindowFamily& g, const PeriodicSet& S,
                     const GaborGeometry& geo, ThetaGrid grid,
                     OffsetRange range)
    : geo_(geo), grid_(grid) {
    validate_family(g, S, geo);
    degree_bound_ = required_grid_for_family(g, geo);
    const int J = offset_span(geo, range);
    ksets_.resize(J);
    lambdas_.resize(J);
    for (int j = 0; j < J; ++j) {
        ksets_[j] = k_set(S, geo, j);
        lambdas_[j] = lambda_set(ksets_[j], geo.p, geo.R);
    }
    values_.resize(static_cast<std::size_t>(J) * grid.T);
    detail::parallel_for(values_.size(), [&](std::size_t slot) {
        const int j = static_cast<int>(slot) / grid_.T;
        const int t = static_cast<int>(slot) % grid_.T;
        const Eigen::MatrixXcd Z =
            z_matrix_family(g, geo_, j, grid_.node(t));
        values_[slot] = Z.adjoint() * Z;
    });
}

const Eigen::MatrixXcd& GramField::at(int j, int t) const {
    return values_[static_cast<std::size_t>(j) * grid_.T + t];
}

GramField gram_field(const WindowFamily& g, const PeriodicSet& S,
                     const GaborGeometry& geo, ThetaGrid grid,
                     OffsetRange range) {
    return GramField(g, S, geo, grid, range);
}

CompletenessResult completeness_check(const WindowFamily& g,
                                      const PeriodicSet& S,
                                      const GaborGeometry& geo, ThetaGrid grid,
                                      const Tolerances& tol,
                                      OffsetRange range) {
    validate_family(g, S, geo);
    const int J = offset_span(geo, range);
    std::vector<int> ranks(static_cast<std::size_t>(J) * grid.T, 0);
    detail::parallel_for(ranks.size(), [&](std::size_t slot) {
        const int j = static_cast<int>(slot) / grid.T;
        const int t = static_cast<int>(slot) % grid.T;
        ranks[slot] =
            numerical_rank(z_matrix_family(g, geo, j, grid.node(t)), tol);
    });

    CompletenessResult result;
    result.complete = true;
    result.min_ranks.resize(J);
    result.required_ranks.resize(J);
    for (int j = 0; j < J; ++j) {
        const int required =
            geo.R * static_cast<int>(k_set(S, geo, j).size());
        int min_rank = ranks[static_cast<std::size_t>(j) * grid.T];
        for (int t = 0; t < grid.T; ++t) {
            const int r = ranks[static_cast<std::size_t>(j) * grid.T + t];
            min_rank = std::min(min_rank, r);
            if (r != required) result.complete = false;
        }
        result.min_ranks[j] = min_rank;
        result.required_ranks[j] = required;
    }
    return result;
}

FrameBounds frame_bounds(const GramField& gram, const Tolerances& tol,
                         bool strict_grid) {
    const GaborGeometry& geo = gram.geometry();
    if (strict_grid && gram.grid().T < gram.degree_bound()) {
        throw GridTooCoarseError(
            "frame_bounds: grid of " + std::to_string(gram.grid().T) +
            " nodes is below the family degree bound " +
            std::to_string(gram.degree_bound()));
    }
    FrameBounds bounds;
    bool any = false;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    for (int j = 0; j < gram.offset_count(); ++j) {
        const auto& lambda = gram.lambda(j);
        if (lambda.empty()) continue;
        for (int t = 0; t < gram.grid().T; ++t) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
                restrict_to(gram.at(j, t), lambda),
                Eigen::EigenvaluesOnly);
            const double lo = eig.eigenvalues().minCoeff();
            const double hi = eig.eigenvalues().maxCoeff();
            if (!any) {
                lambda_min = lo;
                lambda_max = hi;
                any = true;
            } else {
                lambda_min = std::min(lambda_min, lo);
                lambda_max = std::max(lambda_max, hi);
            }
        }
    }
    if (!any) {
        // Every K_j empty cannot happen for a nonempty support set.
        throw std::logic_error("frame_bounds: no active offsets");
    }
    bounds.A = geo.M * lambda_min;
    bounds.B = geo.M * lambda_max;
    bounds.is_frame = bounds.A > tol.frame * std::max(1.0, bounds.B);
    return bounds;
}

bool parseval_check(const GramField& gram, const Tolerances& tol) {
    const double target = 1.0 / gram.geometry().M;
    for (int j = 0; j < gram.offset_count(); ++j) {
        const auto& lambda = gram.lambda(j);
        if (lambda.empty()) continue;
        const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(
            static_cast<Eigen::Index>(lambda.size()),
            static_cast<Eigen::Index>(lambda.size()));
        for (int t = 0; t < gram.grid().T; ++t) {
            const Eigen::MatrixXcd sub = restrict_to(gram.at(j, t), lambda);
            if ((sub - target * eye).cwiseAbs().maxCoeff() > tol.parseval) {
                return false;
            }
        }
    }
    return true;
}

bool strong_disjointness(const WindowFamily& g, const WindowFamily& h,
                         const GaborGeometry& geo, ThetaGrid grid,
                         double tol) {
    if (g.size() != h.size()) {
        throw InputError("strong_disjointness: families differ in size");
    }
    for (std::size_t l = 0; l < g.size(); ++l) {
        if (g[l].channels() != h[l].channels()) {
            throw InputError("strong_disjointness: channel count mismatch");
        }
    }
    for (int j = 0; j < geo.d; ++j) {
        for (int t = 0; t < grid.T; ++t) {
            const double theta = grid.node(t);
            Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(
                geo.p * geo.R, geo.p * geo.R);
            for (std::size_t l = 0; l < g.size(); ++l) {
                mixed += z_matrix_vector(g[l], geo, j, theta).adjoint() *
                         z_matrix_vector(h[l], geo, j, theta);
            }
            if (mixed.cwiseAbs().maxCoeff() > tol) return false;
        }
    }
    return true;
}

namespace {

/// Positions the mixed frame operator output can populate, per channel,
/// grouped by residue class mod pM: key (x0, channel) with x0 in [0, pM),
/// value = sorted Fourier indices n such that x0 + n*pM is reachable.
using CoefficientGroups =
    std::map<std::pair<std::int64_t, int>, std::vector<std::int64_t>>;

CoefficientGroups coefficient_groups(const WindowFamily& h,
                                     const WindowFamily& g,
                                     const SparseSequence& f,
                                     const GaborGeometry& geo) {
    CoefficientGroups groups;
    if (f.empty()) return groups;
    const std::int64_t pM = static_cast<std::int64_t>(geo.p) * geo.M;
    const std::int64_t f_lo = f.min_index();
    const std::int64_t f_hi = f.max_index();
    const auto floor_div = [](std::int64_t a, std::int64_t b) {
        std::int64_t qt = a / b;
        if (a % b != 0 && (a < 0) != (b < 0)) --qt;
        return qt;
    };
    std::set<std::pair<std::int64_t, int>> positions;
    for (std::size_t l = 0; l < h.size(); ++l) {
        if (h[l].empty() || g[l].empty()) continue;
        // Translations with <f, E T h_l> possibly nonzero.
        const std::int64_t n_lo =
            -floor_div(h[l].max_index() - f_lo, geo.N);
        const std::int64_t n_hi = floor_div(f_hi - h[l].min_index(), geo.N);
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            for (const auto& [key, value] : g[l].entries()) {
                positions.insert({key.first + n * geo.N, key.second});
            }
        }
    }
    for (const auto& [x, channel] : positions) {
        const std::int64_t n = floor_div(x, pM);
        const std::int64_t x0 = x - n * pM;
        groups[{x0, channel}].push_back(n);
    }
    return groups;
}

}  // namespace

int required_grid_for_mixed_operator(const WindowFamily& h,
                                     const WindowFamily& g,
                                     const SparseSequence& f,
                                     const GaborGeometry& geo) {
    int needed = 1;
    for (const auto& [key, ns] : coefficient_groups(h, g, f, geo)) {
        needed = std::max(
            needed, static_cast<int>(ns.back() - ns.front() + 1));
    }
    return needed;
}

SparseSequence mixed_frame_operator_zak(const WindowFamily& h,
                                        const WindowFamily& g,
                                        const SparseSequence& f,
                                        const GaborGeometry& geo,
                                        ThetaGrid grid) {
    if (h.size() != g.size() ||
        h.size() != static_cast<std::size_t>(geo.L)) {
        throw InputError("mixed_frame_operator_zak: family shape mismatch");
    }
    if (f.channels() != geo.R) {
        throw InputError("mixed_frame_operator_zak: signal channel mismatch");
    }
    SparseSequence out(geo.R);
    const CoefficientGroups groups = coefficient_groups(h, g, f, geo);
    if (groups.empty()) return out;

    const int needed = required_grid_for_mixed_operator(h, g, f, geo);
    if (grid.T < needed) {
        throw GridTooCoarseError(
            "mixed_frame_operator_zak: grid of " + std::to_string(grid.T) +
            " nodes cannot separate " + std::to_string(needed) +
            " Fourier coefficients");
    }

    // Zak samples of the output: for each offset j and node t the vector of
    // z_{pM}(S_{h,g} f)_r(j + kM, theta_t) indexed by r*p + k.
    const std::int64_t pM = static_cast<std::int64_t>(geo.p) * geo.M;
    std::vector<Eigen::VectorXcd> samples(
        static_cast<std::size_t>(geo.M) * grid.T);
    detail::parallel_for(samples.size(), [&](std::size_t slot) {
        const int j = static_cast<int>(slot) / grid.T;
        const int t = static_cast<int>(slot) % grid.T;
        const double theta = grid.node(t);
        const Eigen::VectorXcd F = f_vector(f, geo, j, theta);
        Eigen::VectorXcd W = Eigen::VectorXcd::Zero(geo.p * geo.R);
        for (std::size_t l = 0; l < g.size(); ++l) {
            const Eigen::VectorXcd v =
                z_matrix_vector(h[l], geo, j, theta).conjugate() * F;
            W += z_matrix_vector(g[l], geo, j, theta).transpose() * v;
        }
        samples[slot] = static_cast<double>(geo.M) * W;
    });

    for (const auto& [key, ns] : groups) {
        const std::int64_t x0 = key.first;
        const int channel = key.second;
        const int j = static_cast<int>(x0 % geo.M);
        const int k = static_cast<int>(x0 / geo.M);
        std::vector<Complex> node_values(grid.T);
        for (int t = 0; t < grid.T; ++t) {
            node_values[t] =
                samples[static_cast<std::size_t>(j) * grid.T + t](
                    channel * geo.p + k);
        }
        const std::int64_t n_lo = ns.front();
        const std::int64_t n_hi = ns.back();
        const std::vector<Complex> coeffs =
            fourier_coefficients(node_values, n_lo, n_hi);
        for (std::int64_t n : ns) {
            out.set(x0 + n * pM, channel,
                    coeffs[static_cast<std::size_t>(n - n_lo)]);
        }
    }
    return out;
}

std::pair<bool, bool> riesz_onb_check(bool is_frame, bool is_parseval,
                                      const WindowFamily& g,
                                      const PeriodicSet& S,
                                      const GaborGeometry& geo,
                                      const Tolerances& tol) {
    const bool counts_match =
        static_cast<std::int64_t>(geo.R) * S.card_within(geo.N) ==
        static_cast<std::int64_t>(geo.L) * geo.M;
    const bool riesz = is_frame && counts_match;
    bool unit_norms = true;
    for (const auto& window : g) {
        if (std::abs(window.norm() - 1.0) > tol.unit_norm) {
            unit_norms = false;
            break;
        }
    }
    const bool onb = is_parseval && unit_norms && riesz;
    return {riesz, onb};
}

bool norm_identity_check(const WindowFamily& g, const PeriodicSet& S,
                         const GaborGeometry& geo, double tol) {
    double total = 0.0;
    for (const auto& window : g) total += window.squared_norm();
    const double expected =
        static_cast<double>(geo.R) * S.card_within(geo.N) / geo.M;
    return std::abs(total - expected) <= tol;
}

BesselCertificate bessel_check(const WindowFamily& g, const GaborGeometry& geo,
                               ThetaGrid grid) {
    BesselCertificate cert;
    for (int j = 0; j < geo.d; ++j) {
        for (int t = 0; t < grid.T; ++t) {
            const Eigen::MatrixXcd Z =
                z_matrix_family(g, geo, j, grid.node(t));
            if (Z.size() > 0) {
                cert.max_entry =
                    std::max(cert.max_entry, Z.cwiseAbs().maxCoeff());
            }
        }
    }
    return cert;
}

FrameReport analyze(const WindowFamily& g, const PeriodicSet& S,
                    const GaborGeometry& geo, ThetaGrid grid,
                    const Tolerances& tol, bool strict_grid) {
    validate_family(g, S, geo);

    FrameReport report;
    report.grid_T = grid.T;
    report.grid_degree_bound = required_grid_for_family(g, geo);
    report.tolerances = tol;
    if (grid.T < report.grid_degree_bound && strict_grid) {
        throw GridTooCoarseError(
            "analyze: grid of " + std::to_string(grid.T) +
            " nodes is below the family degree bound " +
            std::to_string(report.grid_degree_bound));
    }

    struct Slot {
        int rank = 0;
        double lambda_min = 0.0;
        double lambda_max = 0.0;
        double max_entry = 0.0;
        double parseval_dev = 0.0;
        bool active = false;
    };
    std::vector<std::vector<int>> lambdas(geo.d);
    std::vector<int> required(geo.d);
    for (int j = 0; j < geo.d; ++j) {
        const auto kset = k_set(S, geo, j);
        lambdas[j] = lambda_set(kset, geo.p, geo.R);
        required[j] = geo.R * static_cast<int>(kset.size());
    }

    std::vector<Slot> slots(static_cast<std::size_t>(geo.d) * grid.T);
    detail::parallel_for(slots.size(), [&](std::size_t slot_index) {
        const int j = static_cast<int>(slot_index) / grid.T;
        const int t = static_cast<int>(slot_index) % grid.T;
        Slot& slot = slots[slot_index];
        const Eigen::MatrixXcd Z = z_matrix_family(g, geo, j, grid.node(t));
        slot.rank = numerical_rank(Z, tol);
        if (Z.size() > 0) slot.max_entry = Z.cwiseAbs().maxCoeff();
        if (!lambdas[j].empty()) {
            slot.active = true;
            const Eigen::MatrixXcd G = Z.adjoint() * Z;
            const Eigen::MatrixXcd sub = restrict_to(G, lambdas[j]);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
                sub, Eigen::EigenvaluesOnly);
            slot.lambda_min = eig.eigenvalues().minCoeff();
            slot.lambda_max = eig.eigenvalues().maxCoeff();
            const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(
                sub.rows(), sub.cols());
            slot.parseval_dev =
                (sub - eye / geo.M).cwiseAbs().maxCoeff();
        }
    });

    report.bessel = true;
    report.complete = true;
    bool any_active = false;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double parseval_dev = 0.0;
    for (int j = 0; j < geo.d; ++j) {
        GramCertificate cert;
        cert.j = j;
        cert.rank = slots[static_cast<std::size_t>(j) * grid.T].rank;
        for (int t = 0; t < grid.T; ++t) {
            const Slot& slot = slots[static_cast<std::size_t>(j) * grid.T + t];
            report.bessel_max_entry =
                std::max(report.bessel_max_entry, slot.max_entry);
            if (slot.rank != required[j]) report.complete = false;
            cert.rank = std::min(cert.rank, slot.rank);
            if (!slot.active) continue;
            if (t == 0 || slot.lambda_min < cert.lambda_min) {
                cert.lambda_min = slot.lambda_min;
                cert.theta_index = t;
            }
            cert.lambda_max = std::max(cert.lambda_max, slot.lambda_max);
            parseval_dev = std::max(parseval_dev, slot.parseval_dev);
            if (!any_active) {
                lambda_min = slot.lambda_min;
                lambda_max = slot.lambda_max;
                any_active = true;
            } else {
                lambda_min = std::min(lambda_min, slot.lambda_min);
                lambda_max = std::max(lambda_max, slot.lambda_max);
            }
        }
        report.certificates.push_back(cert);
    }

    report.A = any_active ? geo.M * lambda_min : 0.0;
    report.B = any_active ? geo.M * lambda_max : 0.0;
    const bool sandwich =
        any_active && report.A > tol.frame * std::max(1.0, report.B);
    report.frame = sandwich && report.complete;
    report.tight = report.frame &&
                   (report.B - report.A) <= tol.tight * std::max(1.0, report.B);
    report.parseval =
        report.tight && any_active && parseval_dev <= tol.parseval;
    const auto [riesz, onb] =
        riesz_onb_check(report.frame, report.parseval, g, S, geo, tol);
    report.riesz = riesz;
    report.onb = onb;
    return report;
}

}  // namespace gaborlat
