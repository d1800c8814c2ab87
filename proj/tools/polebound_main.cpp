#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "polebound/cli.hpp"

namespace {

constexpr const char* description =
    "polebound: brackets the radius of convergence of a black-box analytic\n"
    "function by randomized contour-integral pole tests and bisection.";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{description};

    std::string mode_name;
    std::string z0_text = "0";
    std::string z0_from_text = "0";
    std::string z0_to_text = "0";
    std::string format_name = "table";
    std::string out_path;
    polebound::cli::RunSpec spec;

    app.add_option("--mode,mode", mode_name,
                   "run mode: test | bound | corpus | sweep-z0 | sweep-n | rates")
        ->required();
    app.add_option("--expr", spec.expression,
                   "function expression in z, e.g. \"1/(1+z)\" or \"cos(1/z)\"");
    app.add_option("--z0", z0_text, "reference point, format a+bi (default 0)");
    app.add_option("--radius", spec.radius, "contour radius for test/rates modes (default 1)");
    app.add_option("--samples", spec.samples, "probe samples M per contour (default 3)");
    app.add_option("--points", spec.n_points, "quadrature nodes N, even (default 1000)");
    app.add_option("--epsilon", spec.epsilon, "threshold factor (default 0.01)");
    app.add_option("--tolerance", spec.tolerance, "bisection width target (default 0)");
    app.add_option("--limit", spec.limit, "expansion radius limit (default 1024)");
    app.add_option("--seed", spec.seed, "base RNG seed (default 0)");
    auto* format_opt =
        app.add_option("--format", format_name, "output format: table | csv (default table)");
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--z0-from", z0_from_text, "sweep-z0 grid start, format a+bi");
    app.add_option("--z0-to", z0_to_text, "sweep-z0 grid end, format a+bi");
    app.add_option("--grid-count", spec.grid_count, "sweep grid points (default 50)");
    app.add_option("--n-from", spec.n_from, "sweep-n grid start (default 100)");
    app.add_option("--n-to", spec.n_to, "sweep-n grid end (default 10000)");
    app.add_option("--trials", spec.trials, "rates mode trial count (default 10000)");
    app.add_option("--family", spec.family,
                   "rates mode family: cancellation | entire (default cancellation)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1; --help exits 0
    }

    if (!polebound::cli::parse_mode(mode_name, spec.mode)) {
        std::cerr << "error: unknown mode '" << mode_name << "'\n";
        return 1;
    }
    const bool sweep =
        spec.mode == polebound::cli::Mode::sweep_z0 || spec.mode == polebound::cli::Mode::sweep_n;
    if (format_name == "csv") {
        spec.format = polebound::cli::Format::csv;
    } else if (format_name == "table") {
        spec.format = polebound::cli::Format::table;
        if (sweep && format_opt->count() == 0) spec.format = polebound::cli::Format::csv;
    } else {
        std::cerr << "error: unknown format '" << format_name << "'\n";
        return 1;
    }

    try {
        spec.z0 = polebound::parse_complex(z0_text);
        spec.z0_from = polebound::parse_complex(z0_from_text);
        spec.z0_to = polebound::parse_complex(z0_to_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "error: cannot open output file '" << out_path << "'\n";
            return 1;
        }
        return polebound::cli::run(spec, file, std::cerr);
    }
    return polebound::cli::run(spec, std::cout, std::cerr);
}
