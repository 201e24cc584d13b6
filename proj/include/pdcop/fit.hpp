#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pdcop/pseudo_sample.hpp"
#include "pdcop/rng.hpp"

namespace pdcop {

enum class Family { Pd, ClaytonSurvival, Gumbel, Frank, Joe };

inline constexpr std::array<Family, 5> kAllFamilies{Family::Pd, Family::ClaytonSurvival, Family::Gumbel,
                                                   Family::Frank, Family::Joe};
inline constexpr int kDefaultBootstrap = 1000;

/// Significance level against which the bootstrap resolution 1/(B+1) is checked.
inline constexpr double kDecisionLevel = 0.05;

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

using DataMatrix = std::vector<std::array<double, 2>>;

/// Column-wise midranks divided by n + 1.
PseudoSample pseudo_observations(const DataMatrix& data);

/// Tie-adjusted Kendall tau-b in O(n log n) (Knight's merge-sort count).
double sample_kendall_tau(const PseudoSample& s);

/// The same statistic by enumerating all n(n-1)/2 pairs.
double sample_kendall_tau_reference(const PseudoSample& s);

/// C_n(u, v) = (1/n) #{i : V_i1 <= u, V_i2 <= v}.
double empirical_copula(const PseudoSample& s, double u, double v);

/// C_n(V_i) for every sample point, in O(n log n).
std::vector<double> empirical_copula_at_sample(const PseudoSample& s);

/// Method-of-moments estimate by Kendall's tau inversion; FitError if tau is unattainable.
double fit_mom(const PseudoSample& s, Family family);

double family_cdf(Family family, double param, double u1, double u2);
PseudoSample family_sample(Family family, double param, std::size_t n, const RngStream& rng);

/// S_n = sum_i (C_n(V_i) - C_param(V_i))^2.
double cvm_statistic(const PseudoSample& s, Family family, double param);

struct GofReport {
    Family family = Family::Pd;
    double fitted_param = 0.0;
    double statistic = 0.0;
    double p_value = 1.0;
    int replicates = 0;
    bool low_resolution = false;  ///< 1/(B+1) exceeds kDecisionLevel; not serialized
};

/// Parametric bootstrap Cramer-von Mises test. Replicate b simulates from the fitted model on
/// rng.split(b), re-ranks and re-fits; p = (1 + #{S*_b > S_n}) / (B + 1).
GofReport gof_test(const DataMatrix& data, Family family, int bootstrap, const RngStream& rng);

nlohmann::json to_json(const GofReport& report);
GofReport gof_report_from_json(const nlohmann::json& j);

}  // namespace pdcop
