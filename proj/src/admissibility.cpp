#include "gaborlat/admissibility.hpp"

#include <algorithm>

namespace gaborlat {

namespace {

std::vector<int> kj_cardinalities(const PeriodicSet& S,
                                  const GaborGeometry& geo) {
    std::vector<int> cards(geo.d);
    for (int j = 0; j < geo.d; ++j) {
        cards[j] = static_cast<int>(k_set(S, geo, j).size());
    }
    return cards;
}

}  // namespace

bool frame_admissible(const PeriodicSet& S, const GaborGeometry& geo) {
    for (int card : kj_cardinalities(S, geo)) {
        if (static_cast<std::int64_t>(geo.R) * card >
            static_cast<std::int64_t>(geo.q) * geo.L) {
            return false;
        }
    }
    return true;
}

bool basis_admissible(const PeriodicSet& S, const GaborGeometry& geo) {
    for (int card : kj_cardinalities(S, geo)) {
        if (static_cast<std::int64_t>(geo.R) * card !=
            static_cast<std::int64_t>(geo.q) * geo.L) {
            return false;
        }
    }
    return true;
}

bool cardinality_necessary(const PeriodicSet& S, const GaborGeometry& geo) {
    return static_cast<std::int64_t>(geo.R) * S.card_within(geo.N) <=
           static_cast<std::int64_t>(geo.L) * geo.M;
}

int min_windows(const PeriodicSet& S, const GaborGeometry& geo) {
    const auto cards = kj_cardinalities(S, geo);
    const int max_card = *std::max_element(cards.begin(), cards.end());
    const std::int64_t need = static_cast<std::int64_t>(geo.R) * max_card;
    return std::max<std::int64_t>(1, (need + geo.q - 1) / geo.q);
}

AdmissibilityReport admissibility_report(const PeriodicSet& S,
                                         const GaborGeometry& geo) {
    AdmissibilityReport report;
    report.kj_cards = kj_cardinalities(S, geo);
    report.card_SN = S.card_within(geo.N);
    report.frame_admissible = frame_admissible(S, geo);
    report.basis_admissible = basis_admissible(S, geo);
    report.cardinality_necessary = cardinality_necessary(S, geo);
    report.min_windows = min_windows(S, geo);
    return report;
}

}  // namespace gaborlat
