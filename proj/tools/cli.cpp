#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdcop/copula.hpp"
#include "pdcop/csv.hpp"
#include "pdcop/dependence.hpp"
#include "pdcop/errors.hpp"
#include "pdcop/fit.hpp"
#include "pdcop/simulate.hpp"

namespace pdcop::cli {
namespace {

constexpr int kDefaultGrid = 50;
constexpr std::array<double, 8> kFigure3Lambdas{-10.0, -3.0, -2.0, -0.5, 1.0, 2.0, 3.0, 10.0};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        parts.push_back(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

std::vector<double> grid_axis(int m) {
    if (m < 2) throw UsageError("--grid must be at least 2");
    std::vector<double> axis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) axis[static_cast<std::size_t>(i)] = static_cast<double>(i) / (m - 1);
    axis.back() = 1.0;
    return axis;
}

// Output goes to --output when given, otherwise to the command's stdout stream.
class Sink {
  public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw DataError("cannot write " + path);
            stream_ = file_.get();
        }
    }
    std::ostream& operator*() { return *stream_; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

// Resolves column names (or 1-based indices) against a table.
std::vector<std::size_t> resolve_columns(const Table& table, const std::string& spec, std::size_t count,
                                         const std::vector<std::string>& defaults) {
    std::vector<std::string> names = spec.empty() ? defaults : split_list(spec);
    if (names.size() != count) {
        throw UsageError("--columns needs " + std::to_string(count) + " comma-separated entries");
    }
    const std::size_t width = table.header.empty() ? (table.rows.empty() ? 0 : table.rows[0].size()) : table.header.size();
    std::vector<std::size_t> cols;
    for (const auto& name : names) {
        if (auto idx = table.column(name)) {
            cols.push_back(*idx);
            continue;
        }
        std::size_t pos = 0;
        unsigned long index = 0;
        try {
            index = std::stoul(name, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != name.size() || index < 1 || index > width) throw DataError("missing column: " + name);
        cols.push_back(index - 1);
    }
    return cols;
}

DataMatrix read_pairs(const std::string& path, const std::string& columns, bool has_header) {
    if (path.empty()) throw UsageError("--input is required");
    const Table table = read_csv_file(path, has_header);
    const auto cols = resolve_columns(table, columns, 2, {"1", "2"});
    DataMatrix data;
    data.reserve(table.rows.size());
    for (const auto& row : table.rows) data.push_back({parse_double(row[cols[0]]), parse_double(row[cols[1]])});
    if (data.size() < 2) throw DataError("need at least 2 data rows, found " + std::to_string(data.size()));
    return data;
}

void add_output_option(CLI::App* cmd, std::string& path) {
    cmd->add_option("-o,--output", path, "Write to this file instead of stdout");
}

int cmd_eval(double lambda, int grid, const std::vector<std::string>& points, bool density, const std::string& output,
             std::ostream& out) {
    const PdCopula c(lambda);
    std::vector<std::array<double, 2>> where;
    if (!points.empty() && grid != 0) throw UsageError("--point and --grid are mutually exclusive");
    if (!points.empty()) {
        for (const auto& p : points) {
            const auto parts = split_list(p);
            if (parts.size() != 2) throw UsageError("--point expects u1,u2");
            double u1 = 0.0;
            double u2 = 0.0;
            try {
                u1 = parse_double(parts[0]);
                u2 = parse_double(parts[1]);
            } catch (const DataError& e) {
                throw UsageError(std::string("--point: ") + e.what());
            }
            if (!(u1 >= 0.0 && u1 <= 1.0 && u2 >= 0.0 && u2 <= 1.0)) throw UsageError("--point must lie in [0,1]^2");
            where.push_back({u1, u2});
        }
    } else {
        const auto axis = grid_axis(grid == 0 ? kDefaultGrid : grid);
        for (double u1 : axis) {
            for (double u2 : axis) where.push_back({u1, u2});
        }
    }

    Table table{{"u1", "u2", "value"}, {}};
    table.rows.reserve(where.size());
    for (const auto& [u1, u2] : where) {
        std::string value;
        if (density) {
            try {
                value = format_double(pdcop::density(c, u1, u2));
            } catch (const UndefinedDensityError&) {
            } catch (const DomainError&) {
                // boundary of the square: no density
            }
        } else {
            value = format_double(cdf(c, u1, u2));
        }
        table.rows.push_back({format_double(u1), format_double(u2), std::move(value)});
    }
    Sink sink(output, out);
    write_csv(*sink, table);
    return kOk;
}

int cmd_simulate(bool has_lambda, double lambda, std::size_t n, std::uint64_t seed, bool figure3,
                 const std::string& output, std::ostream& out, std::ostream& err) {
    if (n == 0) throw UsageError("--n must be at least 1");
    Table table;
    if (figure3) {
        table.header = {"lambda", "u1", "u2"};
        for (std::size_t k = 0; k < kFigure3Lambdas.size(); ++k) {
            const Lambda l(kFigure3Lambdas[k]);
            const PseudoSample s = sample(l, n, RngStream(seed, k));
            for (const auto& row : s.rows) {
                table.rows.push_back({format_double(l.value()), format_double(row[0]), format_double(row[1])});
            }
        }
    } else {
        if (!has_lambda) throw UsageError("--lambda is required unless --figure3 is given");
        const PdCopula c(lambda);
        const PseudoSample s = sample(c.lambda(), n, RngStream(seed, 0));
        std::size_t on_curve = 0;
        table.header = {"u1", "u2"};
        for (const auto& row : s.rows) {
            if (on_zero_curve(c, row[0], row[1])) ++on_curve;
            table.rows.push_back({format_double(row[0]), format_double(row[1])});
        }
        err << "zero-curve points: " << on_curve << " of " << n << '\n';
    }
    Sink sink(output, out);
    write_csv(*sink, table);
    return kOk;
}

int cmd_fit(const std::string& input, const std::string& columns, bool has_header, const std::string& family_name_arg,
            std::ostream& out) {
    const auto family = parse_family(family_name_arg);
    if (!family) throw UsageError("unknown family: " + family_name_arg);
    const PseudoSample s = pseudo_observations(read_pairs(input, columns, has_header));
    const double tau = sample_kendall_tau(s);
    const double param = fit_mom(s, *family);
    nlohmann::json j{{"family", family_name_arg},
                     {"n", s.size()},
                     {"sample_tau", tau},
                     {"fitted_param", param}};
    if (*family == Family::Pd) {
        const TailCoefficients tails = tail_dependence(Lambda(param));
        j["tail_dependence"] = {{"lower", tails.lower}, {"upper", tails.upper}};
    }
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_gof(const std::string& input, const std::string& columns, bool has_header, std::vector<std::string> families,
            bool all, int bootstrap, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    if (bootstrap < 1) throw UsageError("--bootstrap must be at least 1");
    std::vector<Family> chosen;
    if (all) {
        chosen.assign(kAllFamilies.begin(), kAllFamilies.end());
    } else {
        if (families.empty()) families.push_back("pd");
        for (const auto& name : families) {
            const auto f = parse_family(name);
            if (!f) throw UsageError("unknown family: " + name);
            chosen.push_back(*f);
        }
    }
    const DataMatrix data = read_pairs(input, columns, has_header);
    nlohmann::json reports = nlohmann::json::array();
    for (Family f : chosen) {
        // Each family has its own stream, so a report does not depend on which others run.
        const auto stream_id = static_cast<std::uint64_t>(std::find(kAllFamilies.begin(), kAllFamilies.end(), f) -
                                                          kAllFamilies.begin());
        const GofReport report = gof_test(data, f, bootstrap, RngStream(seed, stream_id));
        if (report.low_resolution) {
            err << "warning: " << family_name(f) << ": with B = " << bootstrap
                << " the smallest attainable p-value exceeds " << kDecisionLevel << '\n';
        }
        reports.push_back(to_json(report));
    }
    out << reports.dump(2) << '\n';
    return kOk;
}

int cmd_ingest_danish(const std::string& input, const std::string& columns, bool has_header, const std::string& output,
                      std::ostream& out, std::ostream& err) {
    if (input.empty()) throw UsageError("--input is required");
    const Table table = read_csv_file(input, has_header);
    Table result{{"material", "profits"}, {}};
    if (table.rows.empty()) {
        err << "warning: input has no data rows\n";
    } else {
        const auto cols = resolve_columns(table, columns, 3, {"Building", "Contents", "Profits"});
        for (const auto& row : table.rows) {
            const double profits = parse_double(row[cols[2]]);
            if (!(profits > 0.0)) continue;
            const double material = parse_double(row[cols[0]]) + parse_double(row[cols[1]]);
            result.rows.push_back({format_double(material), format_double(profits)});
        }
    }
    err << "retained " << result.rows.size() << " of " << table.rows.size() << " rows\n";
    Sink sink(output, out);
    write_csv(*sink, result);
    return kOk;
}

int cmd_zero_curve(double lambda, int grid, const std::string& output, std::ostream& out, std::ostream& err) {
    const PdCopula c(lambda);
    const ZeroCurve curve = zero_curve(c, grid_axis(grid));
    Table table{{"u1", "u2"}, {}};
    if (curve.degenerate) {
        err << "note: for lambda <= -1 the zero set is the two axes; no curve to emit\n";
    }
    for (const auto& [u1, u2] : curve.points) {
        table.rows.push_back({format_double(u1), u2 ? format_double(*u2) : std::string()});
    }
    Sink sink(output, out);
    write_csv(*sink, table);
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Power-divergence Archimedean copulas: evaluation, simulation, fitting and goodness of fit", "pdcop"};
    app.require_subcommand(1);

    double lambda = 0.0;
    int grid = 0;
    std::vector<std::string> points;
    bool density = false;
    std::string output;
    std::size_t n = 1000;
    std::uint64_t seed = 1;
    bool figure3 = false;
    std::string input;
    std::string columns;
    bool no_header = false;
    std::string family = "pd";
    std::vector<std::string> families;
    bool all_archimedean = false;
    int bootstrap = kDefaultBootstrap;

    auto* eval = app.add_subcommand("eval", "Copula or density values as u1,u2,value CSV");
    eval->add_option("--lambda", lambda, "Family parameter")->required();
    eval->add_option("--grid", grid, "m x m grid on [0,1]^2 (default 50)");
    eval->add_option("--point", points, "Single point u1,u2 (repeatable)");
    eval->add_flag("--density", density, "Density instead of the copula; blank where undefined");
    add_output_option(eval, output);

    auto* simulate = app.add_subcommand("simulate", "Random pairs as u1,u2 CSV");
    auto* lambda_opt = simulate->add_option("--lambda", lambda, "Family parameter");
    simulate->add_option("--n", n, "Number of pairs")->capture_default_str();
    simulate->add_option("--seed", seed, "Random seed")->capture_default_str();
    simulate->add_flag("--figure3", figure3, "1000 pairs (or --n) for each of lambda = -10,-3,-2,-0.5,1,2,3,10");
    add_output_option(simulate, output);

    auto* fit = app.add_subcommand("fit", "Kendall's tau inversion fit as JSON");
    fit->add_option("--input", input, "CSV with two numeric columns")->required();
    fit->add_option("--columns", columns, "Two column names or 1-based indices (default 1,2)");
    fit->add_flag("--no-header", no_header, "Input has no header line");
    fit->add_option("--family", family, "pd, clayton_survival, gumbel, frank or joe")->capture_default_str();

    auto* gof = app.add_subcommand("gof", "Parametric bootstrap goodness-of-fit reports as JSON");
    gof->add_option("--input", input, "CSV with two numeric columns")->required();
    gof->add_option("--columns", columns, "Two column names or 1-based indices (default 1,2)");
    gof->add_flag("--no-header", no_header, "Input has no header line");
    gof->add_option("--family", families, "Family to test (repeatable; default pd)");
    gof->add_flag("--all-archimedean", all_archimedean, "pd and the four benchmark families");
    gof->add_option("--bootstrap", bootstrap, "Bootstrap replicates B")->capture_default_str();
    gof->add_option("--seed", seed, "Random seed")->capture_default_str();

    auto* ingest = app.add_subcommand("ingest-danish", "material = building + contents, rows with profits > 0");
    ingest->add_option("--input", input, "Loss CSV")->required();
    ingest->add_option("--columns", columns, "Building, contents and profits columns (default Building,Contents,Profits)");
    ingest->add_flag("--no-header", no_header, "Input has no header line");
    add_output_option(ingest, output);

    auto* curve = app.add_subcommand("zero-curve", "Zero curve phi(u1) + phi(u2) = phi(0) as u1,u2 CSV");
    curve->add_option("--lambda", lambda, "Family parameter")->required();
    int curve_grid = kDefaultGrid;
    curve->add_option("--grid", curve_grid, "Number of u1 values on [0,1]")->capture_default_str();
    add_output_option(curve, output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (eval->parsed()) return cmd_eval(lambda, grid, points, density, output, out);
        if (simulate->parsed()) {
            return cmd_simulate(lambda_opt->count() > 0, lambda, n, seed, figure3, output, out, err);
        }
        if (fit->parsed()) return cmd_fit(input, columns, !no_header, family, out);
        if (gof->parsed()) {
            return cmd_gof(input, columns, !no_header, families, all_archimedean, bootstrap, seed, out, err);
        }
        if (ingest->parsed()) return cmd_ingest_danish(input, columns, !no_header, output, out, err);
        if (curve->parsed()) return cmd_zero_curve(lambda, curve_grid, output, out, err);
        return kUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ValidityError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return kData;
    } catch (const FitError& e) {
        err << "fit error: " << e.what() << '\n';
        return kData;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kNumerical;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "numerical error: " << e.what() << '\n';
        return kNumerical;
    }
}

}  // namespace pdcop::cli
