#include "polebound/corpus.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "polebound/expression.hpp"

namespace polebound {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

std::shared_ptr<const RationalOracle> oracle_of(std::vector<Pole> poles,
                                                std::vector<Complex> entire = {}) {
    return std::make_shared<const RationalOracle>(std::move(poles), std::move(entire));
}

std::vector<CorpusRow> build_corpus() {
    std::vector<CorpusRow> rows;

    const auto one_over_1pz = oracle_of({{{-1.0, 0.0}, 1, {1.0, 0.0}}});

    rows.push_back({"1/(1+z)", {0.0, 0.0}, 1.0, 1.0, one_over_1pz});
    rows.push_back({"1/(1+z)", {2.0, 0.0}, 3.0, 3.0, one_over_1pz});
    rows.push_back({"1/(1+z)", {-1.1, 0.0}, 0.1, 0.1, one_over_1pz});
    rows.push_back({"1/(1+z)", {0.0, 1.0}, std::sqrt(2.0), std::sqrt(2.0), one_over_1pz});

    // 1/(1+z) + 1/(1-z): opposite residues at -1 and +1.
    rows.push_back({"1/(1+z)+1/(1-z)",
                    {0.0, 0.0},
                    1.0,
                    1.0,
                    oracle_of({{{-1.0, 0.0}, 1, {1.0, 0.0}}, {{1.0, 0.0}, 1, {-1.0, 0.0}}})});

    rows.push_back({"10^2+1/(1+z)",
                    {0.0, 0.0},
                    1.0,
                    1.0,
                    oracle_of({{{-1.0, 0.0}, 1, {1.0, 0.0}}}, {{100.0, 0.0}})});

    // 1/(1+z) + 2/(1-z^2) = 2/(1+z) + 1/(1-z). The published radius is
    // 1/sqrt(2), but the singularities sit at +/-1; the derived radius is 1.
    rows.push_back({"1/(1+z)+2/(1-z^2)",
                    {0.0, 0.0},
                    1.0 / std::sqrt(2.0),
                    1.0,
                    oracle_of({{{-1.0, 0.0}, 1, {2.0, 0.0}}, {{1.0, 0.0}, 1, {-1.0, 0.0}}})});

    rows.push_back({"exp(1/(1+z))", {0.0, 0.0}, 1.0, 1.0, nullptr});

    rows.push_back({"z", {0.0, 0.0}, inf, inf, oracle_of({}, {{0.0, 0.0}, {1.0, 0.0}})});

    rows.push_back({"cos(1/z)", {0.0, 1.0}, 1.0, 1.0, nullptr});

    // z^8/(z^12+1): simple poles at the twelfth roots of -1, residues
    // w^8/(12 w^11) = -w^9/12. The published radius is 5, but the nearest
    // root to z0 = 4 lies at distance ~3.045; derived value wins.
    {
        std::vector<Pole> poles;
        double nearest = inf;
        const Complex z0{4.0, 0.0};
        for (int m = 0; m < 12; ++m) {
            const double angle = std::numbers::pi * (2.0 * m + 1.0) / 12.0;
            const Complex w{std::cos(angle), std::sin(angle)};
            poles.push_back({w, 1, -std::pow(w, 9) / 12.0});
            nearest = std::min(nearest, std::abs(w - z0));
        }
        rows.push_back({"z^8/(z^12+1)", z0, 5.0, nearest, oracle_of(std::move(poles))});
    }

    return rows;
}

}  // namespace

const std::vector<CorpusRow>& corpus() {
    static const std::vector<CorpusRow> rows = build_corpus();
    return rows;
}

AnalyticFunction corpus_function(const CorpusRow& row) {
    return make_function(parse_expression(row.expression));
}

}  // namespace polebound
