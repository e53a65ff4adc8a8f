#include "gaborlat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

namespace gaborlat {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

GaborGeometry reduce_geometry(int L, int M, int N, int R) {
    if (L < 1 || M < 1 || N < 1 || R < 1) {
        throw InputError("reduce_geometry: L, M, N, R must all be >= 1");
    }
    GaborGeometry geo;
    geo.L = L;
    geo.M = M;
    geo.N = N;
    geo.R = R;
    const int g = std::gcd(M, N);
    geo.p = N / g;
    geo.q = M / g;
    geo.d = g;  // d = M/q = N/p
    return geo;
}

PeriodicSet::PeriodicSet(std::int64_t period,
                         std::vector<std::int64_t> residues)
    : period_(period) {
    if (period < 1) {
        throw InputError("PeriodicSet: period must be >= 1");
    }
    std::set<std::int64_t> normalized;
    for (std::int64_t r : residues) {
        normalized.insert(mod_floor(r, period));
    }
    if (normalized.empty()) {
        throw InputError("PeriodicSet: residue list must be nonempty");
    }
    residues_.assign(normalized.begin(), normalized.end());
}

bool PeriodicSet::contains(std::int64_t j) const {
    return std::binary_search(residues_.begin(), residues_.end(),
                              mod_floor(j, period_));
}

PeriodicSet PeriodicSet::at_period(std::int64_t new_period) const {
    if (new_period < 1 || new_period % period_ != 0) {
        throw InputError(
            "PeriodicSet::at_period: new period must be a positive multiple "
            "of the current period");
    }
    std::vector<std::int64_t> expanded;
    expanded.reserve(residues_.size() * (new_period / period_));
    for (std::int64_t base = 0; base < new_period; base += period_) {
        for (std::int64_t r : residues_) expanded.push_back(base + r);
    }
    return PeriodicSet(new_period, std::move(expanded));
}

bool PeriodicSet::invariant_under_shift(std::int64_t step) const {
    // +step maps residues injectively mod the period, so mapping into the
    // set is already a bijection onto it.
    return std::all_of(residues_.begin(), residues_.end(),
                       [&](std::int64_t r) { return contains(r + step); });
}

std::int64_t PeriodicSet::card_within(std::int64_t K) const {
    std::int64_t count = 0;
    for (std::int64_t j = 0; j < K; ++j) {
        if (contains(j)) ++count;
    }
    return count;
}

bool PeriodicSet::operator==(const PeriodicSet& other) const {
    return period_ == other.period_ && residues_ == other.residues_;
}

std::vector<int> k_set(const PeriodicSet& S, const GaborGeometry& geo,
                       std::int64_t j) {
    std::vector<int> kset;
    for (int k = 0; k < geo.p; ++k) {
        if (S.contains(j + static_cast<std::int64_t>(k) * geo.M)) {
            kset.push_back(k);
        }
    }
    return kset;
}

std::vector<int> lambda_set(const std::vector<int>& kset, int p, int R) {
    std::vector<int> lambda;
    lambda.reserve(kset.size() * R);
    for (int r = 0; r < R; ++r) {
        for (int k : kset) lambda.push_back(k + r * p);
    }
    std::sort(lambda.begin(), lambda.end());
    return lambda;
}

IndexProjection index_projection(const PeriodicSet& S,
                                 const GaborGeometry& geo, std::int64_t j) {
    IndexProjection proj;
    proj.j = j;
    proj.kset = k_set(S, geo, j);
    proj.lambda = lambda_set(proj.kset, geo.p, geo.R);
    return proj;
}

Eigen::MatrixXd projection_matrix(const std::vector<int>& kset, int p) {
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(p, p);
    for (int k : kset) {
        if (k < 0 || k >= p) {
            throw InputError("projection_matrix: index outside {0..p-1}");
        }
        P(k, k) = 1.0;
    }
    return P;
}

Eigen::MatrixXcd kron_identity(int K, const Eigen::MatrixXcd& A) {
    if (K < 1 || A.rows() == 0 || A.cols() == 0) {
        throw InputError("kron_identity: K >= 1 and A nonempty required");
    }
    Eigen::MatrixXcd B =
        Eigen::MatrixXcd::Zero(K * A.rows(), K * A.cols());
    for (int i = 0; i < K; ++i) {
        B.block(i * A.rows(), i * A.cols(), A.rows(), A.cols()) = A;
    }
    return B;
}

EllDecomposition decompose_ell(const GaborGeometry& geo, std::int64_t ell) {
    const std::int64_t p = geo.p;
    const std::int64_t q = geo.q;
    for (int k = 0; k < p; ++k) {
        for (int r = 0; r < q; ++r) {
            // ell = k q - r p + m p q  <=>  p q divides ell - k q + r p
            const std::int64_t rem = ell - k * q + r * p;
            if (mod_floor(rem, p * q) == 0) {
                return EllDecomposition{k, r, rem / (p * q)};
            }
        }
    }
    throw std::logic_error("decompose_ell: no decomposition found");
}

ShiftUnitaries shift_unitaries(const GaborGeometry& geo, std::int64_t ell,
                               double theta) {
    const EllDecomposition dec = decompose_ell(geo, ell);
    const int p = geo.p;
    const int q = geo.q;
    constexpr double tau = 2.0 * std::numbers::pi;

    ShiftUnitaries u;
    u.a = Eigen::MatrixXcd::Identity(p, p);
    if (dec.k != 0) {
        u.a.setZero();
        const Complex phase = std::polar(1.0, -tau * theta);
        for (int i = 0; i < dec.k; ++i) u.a(i, p - dec.k + i) = phase;
        for (int i = 0; i < p - dec.k; ++i) u.a(dec.k + i, i) = 1.0;
    }
    u.c = Eigen::MatrixXcd::Identity(q, q);
    if (dec.r != 0) {
        u.c.setZero();
        const Complex phase = std::polar(1.0, tau * theta);
        for (int i = 0; i < q - dec.r; ++i) u.c(i, dec.r + i) = 1.0;
        for (int i = 0; i < dec.r; ++i) u.c(q - dec.r + i, i) = phase;
    }
    return u;
}

bool congruent_to_subset_mod(const std::vector<std::int64_t>& E,
                             std::int64_t M) {
    std::set<std::int64_t> seen;
    for (std::int64_t e : E) {
        if (!seen.insert(mod_floor(e, M)).second) return false;
    }
    return true;
}

bool nz_congruent_to(const std::vector<std::int64_t>& E, const PeriodicSet& S,
                     std::int64_t N) {
    std::set<std::int64_t> image;
    for (std::int64_t e : E) {
        const std::int64_t r = mod_floor(e, N);
        if (!S.contains(r)) return false;
        if (!image.insert(r).second) return false;  // two elements collide
    }
    return static_cast<std::int64_t>(image.size()) == S.card_within(N);
}

}  // namespace gaborlat
