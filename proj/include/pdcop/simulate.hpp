#pragma once

#include <array>
#include <cstddef>

#include "pdcop/lambda.hpp"
#include "pdcop/pseudo_sample.hpp"
#include "pdcop/rng.hpp"

namespace pdcop {

/// Pairs per substream in sample(); fixes the output independently of the thread count.
inline constexpr std::size_t kSampleBlock = 4096;

/// One draw by the conditional distribution method: u1 and the conditional level t are
/// uniform, and u2 solves dC/du1 = t. Draws with l > 0 can land exactly on the zero curve.
std::array<double, 2> sample_pair(const Lambda& lambda, RngStream& rng);

/// n draws; block b of kSampleBlock pairs uses rng.split(b). rng itself is not advanced.
PseudoSample sample(const Lambda& lambda, std::size_t n, const RngStream& rng);

}  // namespace pdcop
