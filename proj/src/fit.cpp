#include "pdcop/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "pdcop/copula.hpp"
#include "pdcop/dependence.hpp"
#include "pdcop/errors.hpp"
#include "pdcop/parallel.hpp"
#include "pdcop/reference_copulas.hpp"
#include "pdcop/simulate.hpp"

namespace pdcop {
namespace {

Benchmark to_benchmark(Family f) {
    switch (f) {
        case Family::ClaytonSurvival: return Benchmark::ClaytonSurvival;
        case Family::Gumbel: return Benchmark::Gumbel;
        case Family::Frank: return Benchmark::Frank;
        case Family::Joe: return Benchmark::Joe;
        case Family::Pd: break;
    }
    throw DomainError("pd is not a benchmark family");
}

std::vector<double> midranks(const DataMatrix& data, std::size_t col) {
    const std::size_t n = data.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return data[a][col] < data[b][col]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && data[order[j + 1]][col] == data[order[i]][col]) ++j;
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

std::int64_t tied_pairs(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::int64_t pairs = 0;
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        const auto run = static_cast<std::int64_t>(j - i);
        pairs += run * (run - 1) / 2;
        i = j;
    }
    return pairs;
}

std::int64_t merge_count(std::vector<double>& v, std::vector<double>& buffer, std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::int64_t swaps = merge_count(v, buffer, lo, mid) + merge_count(v, buffer, mid, hi);
    std::size_t i = lo;
    std::size_t j = mid;
    std::size_t k = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            swaps += static_cast<std::int64_t>(mid - i);
            buffer[k++] = v[j++];
        } else {
            buffer[k++] = v[i++];
        }
    }
    while (i < mid) buffer[k++] = v[i++];
    while (j < hi) buffer[k++] = v[j++];
    std::copy(buffer.begin() + static_cast<std::ptrdiff_t>(lo), buffer.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
    return swaps;
}

double tau_b(std::int64_t s, std::int64_t n0, std::int64_t ties_x, std::int64_t ties_y) {
    const double denom = std::sqrt(static_cast<double>(n0 - ties_x)) * std::sqrt(static_cast<double>(n0 - ties_y));
    if (denom == 0.0) throw DomainError("sample_kendall_tau: a column is constant");
    return static_cast<double>(s) / denom;
}

void require_pairs(const PseudoSample& s) {
    if (s.size() < 2) throw DomainError("sample_kendall_tau: need at least 2 observations");
}

// Replicate fits never fail: an unattainable tau is moved to the nearest attainable parameter.
double clamped_fit(const PseudoSample& s, Family family) {
    try {
        return fit_mom(s, family);
    } catch (const FitError&) {
        const double tau = sample_kendall_tau(s);
        switch (family) {
            case Family::Pd: return tau_inverse(std::clamp(tau, -0.999, 0.999)).value();
            case Family::ClaytonSurvival: return bench_tau_inverse(Benchmark::ClaytonSurvival, 1e-6);
            case Family::Gumbel: return 1.0;
            case Family::Frank: return bench_tau_inverse(Benchmark::Frank, tau < 0.0 ? -1e-6 : 1e-6);
            case Family::Joe: return 1.0;
        }
        throw;
    }
}

}  // namespace

std::string_view family_name(Family f) {
    if (f == Family::Pd) return "pd";
    return benchmark_name(to_benchmark(f));
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

PseudoSample pseudo_observations(const DataMatrix& data) {
    const std::size_t n = data.size();
    if (n < 2) throw DomainError("pseudo_observations: need at least 2 observations");
    for (const auto& row : data) {
        if (!std::isfinite(row[0]) || !std::isfinite(row[1])) {
            throw DomainError("pseudo_observations: entries must be finite");
        }
    }
    const std::vector<double> r1 = midranks(data, 0);
    const std::vector<double> r2 = midranks(data, 1);
    const double scale = 1.0 / static_cast<double>(n + 1);
    PseudoSample out;
    out.rows.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.rows[i] = {r1[i] * scale, r2[i] * scale};
    return out;
}

double sample_kendall_tau_reference(const PseudoSample& s) {
    require_pairs(s);
    const std::size_t n = s.size();
    std::int64_t score = 0;
    std::int64_t ties_x = 0;
    std::int64_t ties_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = s[i][0] - s[j][0];
            const double dy = s[i][1] - s[j][1];
            if (dx == 0.0) ++ties_x;
            if (dy == 0.0) ++ties_y;
            const double prod = dx * dy;
            if (prod > 0.0) ++score;
            if (prod < 0.0) --score;
        }
    }
    const auto n0 = static_cast<std::int64_t>(n * (n - 1) / 2);
    return tau_b(score, n0, ties_x, ties_y);
}

double sample_kendall_tau(const PseudoSample& s) {
    require_pairs(s);
    const std::size_t n = s.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });

    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = s[order[i]][0];
        ys[i] = s[order[i]][1];
    }
    // Pairs tied in both coordinates; the sort makes them adjacent.
    std::int64_t joint_ties = 0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && xs[j] == xs[i] && ys[j] == ys[i]) ++j;
        const auto run = static_cast<std::int64_t>(j - i);
        joint_ties += run * (run - 1) / 2;
        i = j;
    }
    const std::int64_t ties_x = tied_pairs(xs);
    const std::int64_t ties_y = tied_pairs(ys);
    std::vector<double> buffer(n);
    const std::int64_t swaps = merge_count(ys, buffer, 0, n);

    const auto n0 = static_cast<std::int64_t>(n * (n - 1) / 2);
    const std::int64_t score = n0 - ties_x - ties_y + joint_ties - 2 * swaps;
    return tau_b(score, n0, ties_x, ties_y);
}

double empirical_copula(const PseudoSample& s, double u, double v) {
    std::size_t count = 0;
    for (const auto& row : s.rows) {
        if (row[0] <= u && row[1] <= v) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(s.size());
}

std::vector<double> empirical_copula_at_sample(const PseudoSample& s) {
    const std::size_t n = s.size();
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = s[i][1];
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    auto y_rank = [&](double y) {
        return static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin()) + 1;
    };

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a][0] < s[b][0]; });

    std::vector<std::size_t> tree(ys.size() + 1, 0);  // Fenwick tree over y ranks
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && s[order[j]][0] == s[order[i]][0]) {
            for (std::size_t k = y_rank(s[order[j]][1]); k < tree.size(); k += k & (~k + 1)) ++tree[k];
            ++j;
        }
        for (std::size_t m = i; m < j; ++m) {
            std::size_t count = 0;
            for (std::size_t k = y_rank(s[order[m]][1]); k > 0; k -= k & (~k + 1)) count += tree[k];
            out[order[m]] = static_cast<double>(count) / static_cast<double>(n);
        }
        i = j;
    }
    return out;
}

double fit_mom(const PseudoSample& s, Family family) {
    const double tau = sample_kendall_tau(s);
    try {
        if (family == Family::Pd) return tau_inverse(tau).value();
        return bench_tau_inverse(to_benchmark(family), tau);
    } catch (const DomainError& e) {
        const std::string range = family == Family::Pd ? "pd attains tau only in (-1, 1)" : e.what();
        throw FitError("sample tau " + std::to_string(tau) + " is unattainable: " + range);
    }
}

double family_cdf(Family family, double param, double u1, double u2) {
    if (family == Family::Pd) return cdf(PdCopula(param), u1, u2);
    return bench_cdf(BenchmarkFamily(to_benchmark(family), param), u1, u2);
}

PseudoSample family_sample(Family family, double param, std::size_t n, const RngStream& rng) {
    if (family == Family::Pd) return sample(Lambda(param), n, rng);
    return bench_sample(BenchmarkFamily(to_benchmark(family), param), n, rng);
}

double cvm_statistic(const PseudoSample& s, Family family, double param) {
    const std::vector<double> emp = empirical_copula_at_sample(s);
    double stat = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double diff = emp[i] - family_cdf(family, param, s[i][0], s[i][1]);
        stat += diff * diff;
    }
    return stat;
}

GofReport gof_test(const DataMatrix& data, Family family, int bootstrap, const RngStream& rng) {
    if (bootstrap < 1) throw DomainError("gof_test: the bootstrap count must be at least 1");
    const PseudoSample pseudo = pseudo_observations(data);
    GofReport report;
    report.family = family;
    report.fitted_param = fit_mom(pseudo, family);
    report.statistic = cvm_statistic(pseudo, family, report.fitted_param);
    report.replicates = bootstrap;
    report.low_resolution = 1.0 / (bootstrap + 1.0) > kDecisionLevel;

    const auto b_count = static_cast<std::size_t>(bootstrap);
    std::vector<double> replicate_stats(b_count);
    parallel_for(b_count, [&](std::size_t b) {
        const PseudoSample draw = family_sample(family, report.fitted_param, pseudo.size(), rng.split(b));
        DataMatrix raw(draw.rows.begin(), draw.rows.end());
        const PseudoSample star = pseudo_observations(raw);
        replicate_stats[b] = cvm_statistic(star, family, clamped_fit(star, family));
    });
    const auto exceed = std::count_if(replicate_stats.begin(), replicate_stats.end(),
                                      [&](double st) { return st > report.statistic; });
    report.p_value = (1.0 + static_cast<double>(exceed)) / (bootstrap + 1.0);
    return report;
}

nlohmann::json to_json(const GofReport& report) {
    return {{"family", std::string(family_name(report.family))},
            {"fitted_param", report.fitted_param},
            {"statistic", report.statistic},
            {"p_value", report.p_value},
            {"replicates", report.replicates}};
}

GofReport gof_report_from_json(const nlohmann::json& j) {
    GofReport report;
    const auto family = parse_family(j.at("family").get<std::string>());
    if (!family) throw DataError("unknown family in report");
    report.family = *family;
    report.fitted_param = j.at("fitted_param").get<double>();
    report.statistic = j.at("statistic").get<double>();
    report.p_value = j.at("p_value").get<double>();
    report.replicates = j.at("replicates").get<int>();
    report.low_resolution = 1.0 / (report.replicates + 1.0) > kDecisionLevel;
    return report;
}

}  // namespace pdcop
