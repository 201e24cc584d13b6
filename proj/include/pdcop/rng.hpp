#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace pdcop {

/// xoshiro256** stream keyed by (seed, stream_id). The 256-bit state is filled by
/// SplitMix64, so nearby seeds and ids still give unrelated streams.
class RngStream {
  public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Independent substream k; depends only on (seed, stream_id, k).
    RngStream split(std::uint64_t k) const;

    std::uint64_t next() noexcept;
    result_type operator()() noexcept { return next(); }
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    /// 53-bit uniform on [0, 1).
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1), redrawing exact zeros.
    double uniform_positive() noexcept;

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace pdcop
