#include "polebound/error_model.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "polebound/rational.hpp"
#include "polebound/rng.hpp"

namespace polebound {

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::domain_error("epsilon must lie in (0, 1)");
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

// Splits [0, trials) into chunks and counts per-trial predicate hits in
// parallel; per-trial seeds keep the result order-independent.
long count_parallel(long trials, const std::function<bool(long)>& hit) {
    if (trials <= 0) return 0;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(
        std::min<long>(trials, static_cast<long>(hw)));
    std::atomic<long> total{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            long local = 0;
            for (long t = static_cast<long>(w); t < trials; t += workers)
                if (hit(t)) ++local;
            total += local;
        });
    }
    for (auto& th : pool) th.join();
    return total.load();
}

RateReport make_report(std::optional<double> predicted, long hits, long trials) {
    RateReport report;
    report.predicted = predicted;
    report.trials = trials;
    if (trials > 0) {
        const double measured = static_cast<double>(hits) / static_cast<double>(trials);
        report.measured = measured;
        report.standard_error =
            std::sqrt(measured * (1.0 - measured) / static_cast<double>(trials));
    }
    return report;
}

}  // namespace

double p_detect(double epsilon, int n_poles) {
    check_epsilon(epsilon);
    if (n_poles < 2) throw std::domain_error("p_detect requires n_poles >= 2");
    if (n_poles == 2) return clamp01(1.0 - epsilon / (2.0 * std::numbers::pi));
    return clamp01(1.0 - 2.0 * std::sqrt(std::numbers::pi) * epsilon /
                             static_cast<double>(2 * n_poles - 3));
}

double p_false_negative(double epsilon, int samples) {
    check_epsilon(epsilon);
    if (samples < 1) throw std::domain_error("samples must be >= 1");
    return std::pow(epsilon / (2.0 * std::numbers::pi), samples);
}

RateReport measure_miss_rate(const CancellationFamily& family, const PoleTestConfig& config,
                             long trials, std::uint64_t seed) {
    if (!(family.radius > 0.0) || !std::isfinite(family.radius))
        throw std::invalid_argument("family radius must be positive and finite");
    if (!(family.disk_factor > 0.0) || !(family.disk_factor < 1.0))
        throw std::invalid_argument("disk_factor must lie in (0, 1)");

    const double predicted = p_false_negative(config.epsilon, config.samples);
    const Contour contour(family.center, family.radius);

    const auto missed = [&](long trial) {
        Rng geometry(derive_seed(seed, 2 * static_cast<std::uint64_t>(trial)));
        Complex z1 = family.center + uniform_in_disk(geometry, family.disk_factor * family.radius);
        Complex z2 = family.center + uniform_in_disk(geometry, family.disk_factor * family.radius);
        while (z1 == z2)
            z2 = family.center + uniform_in_disk(geometry, family.disk_factor * family.radius);
        const double phase = 2.0 * std::numbers::pi * geometry.uniform01();
        const Complex residue{std::cos(phase), std::sin(phase)};

        const RationalOracle oracle({{z1, 1, residue}, {z2, 1, -residue}}, {});
        PoleTestConfig trial_config = config;
        trial_config.rng_seed = derive_seed(seed, 2 * static_cast<std::uint64_t>(trial) + 1);
        const auto outcome =
            test_contour(oracle.as_function("trial"), contour, trial_config);
        return outcome.verdict == Verdict::NoPolesDetected;
    };

    return make_report(predicted, count_parallel(trials, missed), trials);
}

RateReport measure_false_positive_rate(const PoleTestConfig& config, long trials,
                                       std::uint64_t seed) {
    const auto flagged = [&](long trial) {
        Rng geometry(derive_seed(seed, 2 * static_cast<std::uint64_t>(trial)));
        const int degree = static_cast<int>(geometry.uniform01() * 9.0);  // 0..8
        std::vector<Complex> coeffs;
        coeffs.reserve(static_cast<std::size_t>(degree) + 1);
        for (int d = 0; d <= degree; ++d) coeffs.push_back(uniform_in_disk(geometry, 1.0));
        const double radius = geometry.uniform(0.5, 2.0);

        const RationalOracle oracle({}, coeffs);
        PoleTestConfig trial_config = config;
        trial_config.rng_seed = derive_seed(seed, 2 * static_cast<std::uint64_t>(trial) + 1);
        const auto outcome =
            test_contour(oracle.as_function("trial"), Contour({0.0, 0.0}, radius), trial_config);
        return outcome.verdict == Verdict::PolesDetected;
    };

    return make_report(std::nullopt, count_parallel(trials, flagged), trials);
}

}  // namespace polebound
