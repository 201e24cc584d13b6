#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace pdcop {

/// n x 2 sample on the unit square: simulated copula draws or rank-transformed data.
struct PseudoSample {
    std::vector<std::array<double, 2>> rows;

    std::size_t size() const noexcept { return rows.size(); }
    const std::array<double, 2>& operator[](std::size_t i) const { return rows[i]; }
};

}  // namespace pdcop
