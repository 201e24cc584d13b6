#include "pdcop/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "pdcop/errors.hpp"
#include "pdcop/generator.hpp"
#include "pdcop/parallel.hpp"

namespace pdcop {

std::array<double, 2> sample_pair(const Lambda& lambda, RngStream& rng) {
    const double u1 = rng.uniform_positive();
    const double t = rng.uniform_positive();
    const double phi_u1 = phi(lambda, u1);

    if (lambda.branch() == Branch::Zero) {
        const double c = std::exp(std::log(u1) / t);
        return {u1, pseudo_inverse(lambda, std::max(0.0, phi(lambda, c) - phi_u1))};
    }
    const double l = lambda.branch() == Branch::NegOne ? -1.0 : lambda.value();
    // 1 + (u1^l - 1) / t = C^l, where C = C(u1, u2)
    const double y = std::expm1(l * std::log(u1)) / t;
    if (y < -1.0) return {u1, pseudo_inverse(lambda, std::max(0.0, phi_at_zero(lambda) - phi_u1))};
    const double c = std::exp(std::log1p(y) / l);
    return {u1, pseudo_inverse(lambda, std::max(0.0, phi(lambda, c) - phi_u1))};
}

PseudoSample sample(const Lambda& lambda, std::size_t n, const RngStream& rng) {
    if (n == 0) throw DomainError("sample: n must be at least 1");
    PseudoSample out;
    out.rows.resize(n);
    const std::size_t blocks = (n + kSampleBlock - 1) / kSampleBlock;
    parallel_for(blocks, [&](std::size_t b) {
        RngStream stream = rng.split(b);
        const std::size_t end = std::min(n, (b + 1) * kSampleBlock);
        for (std::size_t i = b * kSampleBlock; i < end; ++i) out.rows[i] = sample_pair(lambda, stream);
    });
    return out;
}

}  // namespace pdcop
