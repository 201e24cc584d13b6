#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pdcop/pseudo_sample.hpp"
#include "pdcop/rng.hpp"

namespace pdcop {

enum class Benchmark { ClaytonSurvival, Gumbel, Frank, Joe };

std::string_view benchmark_name(Benchmark b);
std::optional<Benchmark> parse_benchmark(std::string_view name);

/// A benchmark Archimedean copula with a validated parameter:
/// Clayton theta > 0, Gumbel theta >= 1, Frank theta != 0, Joe theta >= 1.
class BenchmarkFamily {
  public:
    BenchmarkFamily(Benchmark name, double param);

    Benchmark name() const noexcept { return name_; }
    double param() const noexcept { return param_; }

  private:
    Benchmark name_;
    double param_;
};

/// Clayton survival is u1 + u2 - 1 + C_clayton(1 - u1, 1 - u2).
double bench_cdf(const BenchmarkFamily& f, double u1, double u2);

double bench_tau(const BenchmarkFamily& f);

/// The parameter with bench_tau = tau; DomainError naming the attainable range otherwise.
double bench_tau_inverse(Benchmark name, double tau);

std::array<double, 2> bench_sample_pair(const BenchmarkFamily& f, RngStream& rng);

/// Same blocking and substream layout as sample().
PseudoSample bench_sample(const BenchmarkFamily& f, std::size_t n, const RngStream& rng);

}  // namespace pdcop
