#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "pdcop/csv.hpp"

using namespace pdcop;
using pdcop::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
    const std::string cmd = std::string(PDCOP_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Table parse(const std::string& text, bool header = true) {
    std::istringstream in(text);
    return read_csv(in, header);
}

const std::string kFixture = std::string(PDCOP_FIXTURES) + "/danish_synthetic.csv";

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "pdcop_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("eval on points and grids") {
    const Run point = run({"eval", "--lambda", "-2", "--point", "0.5,0.5", "--point", "1,0.3"});
    REQUIRE(point.code == 0);
    const Table t = parse(point.out);
    CHECK(t.header == std::vector<std::string>{"u1", "u2", "value"});
    REQUIRE(t.rows.size() == 2);
    CHECK(parse_double(t.rows[0][2]) == doctest::Approx(0.38196601125010515).epsilon(1e-14));
    CHECK(parse_double(t.rows[1][2]) == doctest::Approx(0.3).epsilon(1e-14));

    const Run grid = run({"eval", "--lambda", "1", "--grid", "5"});
    REQUIRE(grid.code == 0);
    const Table g = parse(grid.out);
    CHECK(g.rows.size() == 25);
    CHECK(g.rows.front()[0] == "0");
    CHECK(g.rows.back()[0] == "1");
    CHECK(parse(run({"eval", "--lambda", "0"}).out).rows.size() == 2500);

    const Run density = run({"eval", "--lambda", "1", "--density", "--grid", "5"});
    REQUIRE(density.code == 0);
    for (const auto& row : parse(density.out).rows) {
        const double u1 = parse_double(row[0]);
        const double u2 = parse_double(row[1]);
        // the boundary and the zero set of lambda = 1 get blank cells
        const bool defined = u1 > 0.0 && u1 < 1.0 && u2 > 0.0 && u2 < 1.0 &&
                             (1.0 - u1) * (1.0 - u1) + (1.0 - u2) * (1.0 - u2) < 1.0;
        CHECK(row[2].empty() == !defined);
    }
    const Run one = run({"eval", "--lambda", "1", "--density", "--point", "0.8,0.9"});
    CHECK(parse_double(parse(one.out).rows[0][2]) == doctest::Approx(0.02 / std::pow(0.05, 1.5)).epsilon(1e-12));
}

TEST_CASE("eval usage errors") {
    CHECK(run({"eval", "--point", "0.5,0.5"}).code == cli::kUsage);
    CHECK(run({"eval", "--lambda", "1", "--grid", "3", "--point", "0.5,0.5"}).code == cli::kUsage);
    CHECK(run({"eval", "--lambda", "1", "--point", "0.5"}).code == cli::kUsage);
    CHECK(run({"eval", "--lambda", "1", "--point", "1.5,0.5"}).code == cli::kUsage);
    CHECK(run({"eval", "--lambda", "1", "--grid", "1"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("simulate") {
    const Run r = run({"simulate", "--lambda", "10", "--n", "2000", "--seed", "3"});
    REQUIRE(r.code == 0);
    const Table t = parse(r.out);
    CHECK(t.header == std::vector<std::string>{"u1", "u2"});
    CHECK(t.rows.size() == 2000);
    CHECK(r.err.find("zero-curve points: ") != std::string::npos);
    CHECK(r.err.find(" of 2000") != std::string::npos);
    CHECK(run({"simulate", "--lambda", "10", "--n", "2000", "--seed", "3"}).out == r.out);
    CHECK(run({"simulate", "--lambda", "10", "--n", "2000", "--seed", "4"}).out != r.out);

    const Run fig = run({"simulate", "--figure3", "--n", "10"});
    REQUIRE(fig.code == 0);
    const Table f = parse(fig.out);
    CHECK(f.header == std::vector<std::string>{"lambda", "u1", "u2"});
    CHECK(f.rows.size() == 80);
    CHECK(f.rows.front()[0] == "-10");
    CHECK(f.rows.back()[0] == "10");

    CHECK(run({"simulate"}).code == cli::kUsage);
    CHECK(run({"simulate", "--lambda", "1", "--n", "0"}).code == cli::kUsage);
    CHECK(run({"simulate", "--lambda", "0.5", "--n", "10", "-o", scratch("sim.csv").string()}).out.empty());
    std::ifstream written(scratch("sim.csv"));
    CHECK(read_csv(written).rows.size() == 10);
}

TEST_CASE("ingest, fit and gof on the fixture") {
    const auto cleaned = scratch("cleaned.csv");
    const Run ingest = run({"ingest-danish", "--input", kFixture, "-o", cleaned.string()});
    REQUIRE(ingest.code == 0);
    CHECK(ingest.err.find("retained 15 of 20 rows") != std::string::npos);

    const Run fit = run({"fit", "--input", cleaned.string()});
    REQUIRE(fit.code == 0);
    const auto j = nlohmann::json::parse(fit.out);
    CHECK(j.at("family") == "pd");
    CHECK(j.at("n") == 15);
    CHECK(j.at("sample_tau").get<double>() == doctest::Approx(0.3365384615384616).epsilon(1e-15));
    CHECK(std::abs(j.at("fitted_param").get<double>() - -0.516625489449139) < 1e-9);
    CHECK(j.at("tail_dependence").at("lower") == 0.0);
    CHECK(j.at("tail_dependence").at("upper").get<double>() == doctest::Approx(2.0 - std::sqrt(2.0)));

    const Run frank = run({"fit", "--input", cleaned.string(), "--columns", "2,1", "--family", "frank"});
    REQUIRE(frank.code == 0);
    CHECK_FALSE(nlohmann::json::parse(frank.out).contains("tail_dependence"));

    const Run gof = run({"gof", "--input", cleaned.string(), "--all-archimedean", "--bootstrap", "50"});
    REQUIRE(gof.code == 0);
    const auto reports = nlohmann::json::parse(gof.out);
    REQUIRE(reports.size() == 5);
    CHECK(reports[0].at("family") == "pd");
    CHECK(std::abs(reports[0].at("statistic").get<double>() - 0.058513965258282064) < 1e-10);
    for (const auto& rep : reports) {
        CHECK(rep.size() == 5);
        CHECK(rep.at("replicates") == 50);
    }
    CHECK(gof.err.find("warning") == std::string::npos);
    const Run coarse = run({"gof", "--input", cleaned.string(), "--bootstrap", "5"});
    CHECK(coarse.code == 0);
    CHECK(coarse.err.find("warning") != std::string::npos);
}

TEST_CASE("data and fit errors") {
    CHECK(run({"fit", "--input", "/nonexistent.csv"}).code == cli::kData);
    CHECK(run({"fit", "--input", kFixture, "--columns", "Building,Nope"}).code == cli::kData);
    CHECK(run({"fit", "--input", kFixture, "--columns", "Date,Building"}).code == cli::kData);
    CHECK(run({"fit", "--input", kFixture, "--columns", "1,2,3"}).code == cli::kUsage);
    CHECK(run({"fit", "--input", kFixture, "--columns", "2,3", "--family", "gauss"}).code == cli::kUsage);

    const auto negative = scratch("negative.csv");
    {
        std::ofstream f(negative);
        f << "x,y\n1,5\n2,4\n3,3\n4,2\n5,1.5\n6,1\n";
    }
    const Run gumbel = run({"fit", "--input", negative.string(), "--family", "gumbel"});
    CHECK(gumbel.code == cli::kData);
    CHECK(gumbel.err.find("fit error") != std::string::npos);

    const auto empty = scratch("empty.csv");
    {
        std::ofstream f(empty);
        f << "Building,Contents,Profits\n";
    }
    const Run ingest = run({"ingest-danish", "--input", empty.string()});
    CHECK(ingest.code == 0);
    CHECK(ingest.err.find("warning") != std::string::npos);
}

TEST_CASE("zero curve") {
    const Run r = run({"zero-curve", "--lambda", "1", "--grid", "3"});
    REQUIRE(r.code == 0);
    const Table t = parse(r.out);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0] == std::vector<std::string>{"0", "1"});
    CHECK(parse_double(t.rows[1][1]) == doctest::Approx(1.0 - std::sqrt(0.75)).epsilon(1e-14));
    CHECK(t.rows[2] == std::vector<std::string>{"1", "0"});
    CHECK(parse(run({"zero-curve", "--lambda", "2"}).out).rows.size() == 50);
    const Run strict = run({"zero-curve", "--lambda", "-2"});
    CHECK(strict.code == 0);
    CHECK(parse(strict.out).rows.empty());
    CHECK_FALSE(strict.err.empty());
}

// 3000 rows with a single discordant pair: tau is within 2e-6 of 1, beyond what the tau integral resolves
std::string write_near_comonotone() {
    const auto path = scratch("near_comonotone.csv");
    std::ofstream f(path);
    f << "x,y\n";
    for (int i = 0; i < 3000; ++i) f << i << ',' << (i == 5 ? 7 : i == 7 ? 5 : i) << '\n';
    return path.string();
}

TEST_CASE("numerical failure") {
    const std::string path = write_near_comonotone();
    const Run r = run({"fit", "--input", path});
    CHECK(r.code == cli::kNumerical);
    CHECK(r.err.find("numerical error") != std::string::npos);
    CHECK(run({"fit", "--input", path, "--family", "gumbel"}).code == cli::kOk);
}

TEST_CASE("exit codes of the installed binary") {
    CHECK(run_binary("eval --lambda 1 --point 0.5,0.5") == 0);
    CHECK(run_binary("--help") == 0);
    CHECK(run_binary("eval") == 2);
    CHECK(run_binary("eval --lambda 0.5 --point 2,2") == 2);
    CHECK(run_binary("fit --input /nonexistent.csv") == 3);
    CHECK(run_binary("fit --input " + write_near_comonotone()) == 4);
}
