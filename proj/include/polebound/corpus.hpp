#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polebound/complex.hpp"
#include "polebound/function.hpp"
#include "polebound/rational.hpp"

namespace polebound {

/// Built-in benchmark row. r_published is the value reported alongside the
/// original benchmark; r_derived is the nearest-singularity distance computed
/// from the closed-form singularity locations. They disagree for two rows
/// (see corpus.cpp); derived values are the ground truth used by the tests.
struct CorpusRow {
    std::string expression;  // parseable text, also the display name
    Complex z0;
    double r_published;
    double r_derived;
    std::shared_ptr<const RationalOracle> oracle;  // null for non-rational rows
};

const std::vector<CorpusRow>& corpus();

/// Parses the row's expression into a black-box function.
AnalyticFunction corpus_function(const CorpusRow& row);

}  // namespace polebound
