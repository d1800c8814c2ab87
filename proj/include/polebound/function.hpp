#pragma once

#include <functional>
#include <string>
#include <utility>

#include "polebound/complex.hpp"

namespace polebound {

/// Black-box analytic function. Evaluation must be pure and deterministic;
/// failures are reported in-band via a non-finite result, never by throwing.
struct AnalyticFunction {
    std::string name;
    std::function<Complex(Complex)> eval;

    Complex operator()(Complex z) const { return eval(z); }
};

inline AnalyticFunction make_function(std::string name, std::function<Complex(Complex)> eval) {
    return {std::move(name), std::move(eval)};
}

}  // namespace polebound
