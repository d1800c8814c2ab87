#include "polebound/cli.hpp"

#include <cmath>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "polebound/corpus.hpp"
#include "polebound/error_model.hpp"
#include "polebound/expression.hpp"
#include "polebound/search.hpp"

namespace polebound::cli {

namespace {

// RFC 4180 quoting: fields containing comma, quote, or newline get quoted,
// embedded quotes doubled.
std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << csv_field(fields[i]);
    }
    out << '\n';
    out.flush();
}

std::string opt_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
}

PoleTestConfig test_config_of(const RunSpec& spec) {
    PoleTestConfig config;
    config.samples = spec.samples;
    config.n_points = spec.n_points;
    config.epsilon = spec.epsilon;
    config.rng_seed = spec.seed;
    return config;
}

SearchConfig search_config_of(const RunSpec& spec) {
    SearchConfig config;
    config.limit = spec.limit;
    config.tolerance = spec.tolerance;
    config.pole_test = test_config_of(spec);
    config.rng_seed = spec.seed;
    return config;
}

int validate(const RunSpec& spec, std::ostream& diag) {
    const bool needs_expr = spec.mode != Mode::corpus && spec.mode != Mode::rates;
    if (needs_expr && spec.expression.empty()) {
        diag << "error: --expr is required for this mode\n";
        return 1;
    }
    if (spec.samples < 1 || spec.n_points < 4 || spec.n_points % 2 != 0 ||
        !(spec.epsilon > 0.0 && spec.epsilon < 1.0) || !(spec.tolerance >= 0.0) ||
        !(spec.limit > 0.0) || !std::isfinite(spec.limit)) {
        diag << "error: numeric options out of range "
                "(need samples >= 1, even points >= 4, 0 < epsilon < 1, "
                "tolerance >= 0, limit > 0)\n";
        return 1;
    }
    if (spec.mode == Mode::test && !(spec.radius > 0.0 && std::isfinite(spec.radius))) {
        diag << "error: --radius must be positive and finite\n";
        return 1;
    }
    if (spec.mode == Mode::sweep_z0 && spec.grid_count < 1) {
        diag << "error: --grid-count must be >= 1\n";
        return 1;
    }
    if (spec.mode == Mode::sweep_n &&
        (spec.grid_count < 1 || spec.n_from < 4 || spec.n_to < spec.n_from)) {
        diag << "error: --n-from/--n-to grid is invalid\n";
        return 1;
    }
    if ((spec.mode == Mode::sweep_z0 || spec.mode == Mode::sweep_n) &&
        spec.format == Format::table) {
        diag << "error: sweep modes emit CSV; use --format csv\n";
        return 1;
    }
    if (spec.mode == Mode::rates && spec.family != "cancellation" && spec.family != "entire") {
        diag << "error: --family must be 'cancellation' or 'entire'\n";
        return 1;
    }
    if (spec.mode == Mode::rates && spec.trials < 0) {
        diag << "error: --trials must be >= 0\n";
        return 1;
    }
    return 0;
}

AnalyticFunction parse_function(const RunSpec& spec) {
    return make_function(parse_expression(spec.expression));
}

int run_test_mode(const RunSpec& spec, std::ostream& out, std::ostream& diag) {
    const AnalyticFunction f = parse_function(spec);
    const PoleTestOutcome outcome =
        test_contour(f, Contour(spec.z0, spec.radius), test_config_of(spec));

    if (spec.format == Format::csv) {
        csv_row(out, {"k_re", "k_im", "deviation", "delta"});
        for (const auto& s : outcome.per_sample)
            csv_row(out, {format_double(s.k.real()), format_double(s.k.imag()),
                          format_double(s.deviation), format_double(s.delta)});
        diag << "verdict: " << verdict_name(outcome.verdict) << "\n";
        return 0;
    }

    out << "function:      " << f.name << "\n";
    out << "contour:       center " << format_complex(spec.z0) << ", radius "
        << format_double(spec.radius) << "\n";
    out << "verdict:       " << verdict_name(outcome.verdict) << "\n";
    out << "threshold T:   " << format_double(outcome.threshold) << "\n";
    out << "max deviation: " << format_double(outcome.max_deviation) << "\n";
    if (outcome.note) out << "note:          " << *outcome.note << "\n";
    out << "samples (k, deviation, delta):\n";
    for (const auto& s : outcome.per_sample)
        out << "  " << format_complex(s.k) << "  " << format_double(s.deviation) << "  "
            << format_double(s.delta) << "\n";
    out.flush();
    (void)diag;
    return 0;
}

int run_bound_mode(const RunSpec& spec, std::ostream& out, std::ostream& diag) {
    const AnalyticFunction f = parse_function(spec);
    const RadiusBounds bounds = search_radius(f, spec.z0, search_config_of(spec));

    if (spec.format == Format::csv) {
        csv_row(out, {"radius", "verdict"});
        for (const auto& t : bounds.transcript)
            csv_row(out, {format_double(t.radius), verdict_name(t.verdict)});
        diag << "bounds: (" << format_double(bounds.lower) << ", " << format_double(bounds.upper)
             << ") status: " << search_status_name(bounds.status) << "\n";
        return 0;
    }

    out << "function: " << f.name << "\n";
    out << "z0:       " << format_complex(spec.z0) << "\n";
    if (bounds.status == SearchStatus::NoPoleWithinLimit)
        out << "no pole within limit; bounds (0, inf)\n";
    else
        out << "bounds:   (" << format_double(bounds.lower) << ", "
            << format_double(bounds.upper) << ")\n";
    out << "status:   " << search_status_name(bounds.status) << "\n";
    out << "tests:    " << bounds.iterations << "\n";
    out << "transcript (radius, verdict):\n";
    for (const auto& t : bounds.transcript)
        out << "  " << format_double(t.radius) << "  " << verdict_name(t.verdict) << "\n";
    out.flush();
    (void)diag;
    return 0;
}

int run_corpus_mode(const RunSpec& spec, std::ostream& out, std::ostream&) {
    const auto& rows = corpus();

    struct RowResult {
        const CorpusRow* row;
        RadiusBounds bounds;
    };
    std::vector<std::future<RowResult>> futures;
    futures.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        futures.push_back(std::async(std::launch::async, [&spec, &rows, i] {
            const CorpusRow& row = rows[i];
            SearchConfig config = search_config_of(spec);
            config.rng_seed = derive_seed(spec.seed, i);
            return RowResult{&row, search_radius(corpus_function(row), row.z0, config)};
        }));
    }

    const bool csv = spec.format == Format::csv;
    if (csv) {
        csv_row(out, {"name", "z0", "r_paper", "r_derived", "lower", "upper", "status"});
    } else {
        out << std::left << std::setw(22) << "name" << std::setw(10) << "z0" << std::setw(12)
            << "r_paper" << std::setw(12) << "r_derived" << std::setw(12) << "lower"
            << std::setw(12) << "upper" << "status\n";
    }
    for (auto& future : futures) {
        const RowResult r = future.get();
        if (csv) {
            csv_row(out, {r.row->expression, format_complex(r.row->z0),
                          format_double(r.row->r_published), format_double(r.row->r_derived),
                          format_double(r.bounds.lower), format_double(r.bounds.upper),
                          search_status_name(r.bounds.status)});
        } else {
            out << std::left << std::setw(22) << r.row->expression << std::setw(10)
                << format_complex(r.row->z0) << std::setw(12)
                << format_double(r.row->r_published) << std::setw(12)
                << format_double(r.row->r_derived) << std::setw(12)
                << format_double(r.bounds.lower) << std::setw(12)
                << format_double(r.bounds.upper) << search_status_name(r.bounds.status) << "\n";
            out.flush();
        }
    }
    return 0;
}

int run_sweep_z0_mode(const RunSpec& spec, std::ostream& out, std::ostream& diag) {
    const AnalyticFunction f = parse_function(spec);

    std::vector<Complex> grid;
    grid.reserve(static_cast<std::size_t>(spec.grid_count));
    for (int i = 0; i < spec.grid_count; ++i) {
        const double t =
            spec.grid_count == 1 ? 0.0 : static_cast<double>(i) / (spec.grid_count - 1);
        grid.push_back(spec.z0_from + t * (spec.z0_to - spec.z0_from));
    }

    std::vector<std::future<RadiusBounds>> futures;
    futures.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        futures.push_back(std::async(std::launch::async, [&, i] {
            SearchConfig config = search_config_of(spec);
            config.rng_seed = derive_seed(spec.seed, i);
            return search_radius(f, grid[i], config);
        }));
    }

    csv_row(out, {"z0_re", "z0_im", "lower", "upper", "status"});
    for (std::size_t i = 0; i < futures.size(); ++i) {
        try {
            const RadiusBounds bounds = futures[i].get();
            csv_row(out, {format_double(grid[i].real()), format_double(grid[i].imag()),
                          format_double(bounds.lower), format_double(bounds.upper),
                          search_status_name(bounds.status)});
        } catch (const CenterNotFinite& e) {
            diag << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

int run_sweep_n_mode(const RunSpec& spec, std::ostream& out, std::ostream& diag) {
    const AnalyticFunction f = parse_function(spec);

    // Log-spaced grid, rounded to the nearest even node count.
    std::vector<int> grid;
    grid.reserve(static_cast<std::size_t>(spec.grid_count));
    const double lo = std::log10(static_cast<double>(spec.n_from));
    const double hi = std::log10(static_cast<double>(spec.n_to));
    for (int i = 0; i < spec.grid_count; ++i) {
        const double t =
            spec.grid_count == 1 ? 0.0 : static_cast<double>(i) / (spec.grid_count - 1);
        long n = std::lround(std::pow(10.0, lo + t * (hi - lo)));
        if (n % 2 != 0) ++n;
        if (n < 4) n = 4;
        grid.push_back(static_cast<int>(n));
    }

    std::vector<std::future<RadiusBounds>> futures;
    futures.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        futures.push_back(std::async(std::launch::async, [&, i] {
            SearchConfig config = search_config_of(spec);
            config.pole_test.n_points = grid[i];
            config.rng_seed = derive_seed(spec.seed, i);
            return search_radius(f, spec.z0, config);
        }));
    }

    csv_row(out, {"n_points", "lower", "upper", "tightness"});
    for (std::size_t i = 0; i < futures.size(); ++i) {
        try {
            const RadiusBounds bounds = futures[i].get();
            const double tightness = bounds.upper / bounds.lower - 1.0;
            csv_row(out, {std::to_string(grid[i]), format_double(bounds.lower),
                          format_double(bounds.upper), format_double(tightness)});
        } catch (const CenterNotFinite& e) {
            diag << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

int run_rates_mode(const RunSpec& spec, std::ostream& out, std::ostream&) {
    RateReport report;
    if (spec.family == "cancellation") {
        CancellationFamily family;
        family.center = spec.z0;
        family.radius = spec.radius;
        report = measure_miss_rate(family, test_config_of(spec), spec.trials, spec.seed);
    } else {
        report = measure_false_positive_rate(test_config_of(spec), spec.trials, spec.seed);
    }

    if (spec.format == Format::csv) {
        csv_row(out, {"predicted", "measured", "trials", "stderr"});
        if (report.trials > 0)
            csv_row(out, {opt_field(report.predicted), opt_field(report.measured),
                          std::to_string(report.trials), opt_field(report.standard_error)});
        return 0;
    }

    out << "family:    " << spec.family << "\n";
    out << "trials:    " << report.trials << "\n";
    out << "predicted: " << (report.predicted ? format_double(*report.predicted) : "n/a") << "\n";
    out << "measured:  " << (report.measured ? format_double(*report.measured) : "n/a") << "\n";
    out << "stderr:    "
        << (report.standard_error ? format_double(*report.standard_error) : "n/a") << "\n";
    out.flush();
    return 0;
}

}  // namespace

bool parse_mode(const std::string& name, Mode& mode) {
    if (name == "test") mode = Mode::test;
    else if (name == "bound") mode = Mode::bound;
    else if (name == "corpus") mode = Mode::corpus;
    else if (name == "sweep-z0") mode = Mode::sweep_z0;
    else if (name == "sweep-n") mode = Mode::sweep_n;
    else if (name == "rates") mode = Mode::rates;
    else return false;
    return true;
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& diag) {
    if (int status = validate(spec, diag); status != 0) return status;
    try {
        switch (spec.mode) {
            case Mode::test: return run_test_mode(spec, out, diag);
            case Mode::bound: return run_bound_mode(spec, out, diag);
            case Mode::corpus: return run_corpus_mode(spec, out, diag);
            case Mode::sweep_z0: return run_sweep_z0_mode(spec, out, diag);
            case Mode::sweep_n: return run_sweep_n_mode(spec, out, diag);
            case Mode::rates: return run_rates_mode(spec, out, diag);
        }
    } catch (const ParseError& e) {
        diag << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const CenterNotFinite& e) {
        diag << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        diag << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace polebound::cli
