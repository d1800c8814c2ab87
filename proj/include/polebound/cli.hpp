#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "polebound/complex.hpp"

namespace polebound::cli {

enum class Mode { test, bound, corpus, sweep_z0, sweep_n, rates };
enum class Format { table, csv };

/// One validated CLI invocation. Field defaults mirror the benchmark setup
/// (M=3, N=1000, epsilon=0.01, limit=1024).
struct RunSpec {
    Mode mode = Mode::bound;
    std::string expression;
    Complex z0{0.0, 0.0};
    double radius = 1.0;  // test mode contour radius
    int samples = 3;
    int n_points = 1000;
    double epsilon = 0.01;
    double tolerance = 0.0;
    double limit = 1024.0;
    std::uint64_t seed = 0;
    Format format = Format::table;

    // sweep-z0
    Complex z0_from{0.0, 0.0};
    Complex z0_to{0.0, 0.0};
    int grid_count = 50;

    // sweep-n
    int n_from = 100;
    int n_to = 10000;

    // rates
    long trials = 10000;
    std::string family = "cancellation";  // or "entire"
};

/// Executes the run, streaming results to `out` (rows are flushed as they
/// complete) and diagnostics to `diag`. Returns the process exit status:
/// 0 success, 1 usage/parse error, 2 evaluation error.
int run(const RunSpec& spec, std::ostream& out, std::ostream& diag);

/// Mode name <-> enum helpers used by the flag parser.
bool parse_mode(const std::string& name, Mode& mode);

}  // namespace polebound::cli
