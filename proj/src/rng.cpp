#include "pdcop/rng.hpp"

namespace pdcop {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += kGolden;
    return mix64(state);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {
    std::uint64_t state = mix64(seed) ^ mix64(stream_id ^ 0xD1B54A32D192ED03ULL);
    for (auto& word : s_) word = splitmix64(state);
}

RngStream RngStream::split(std::uint64_t k) const {
    return RngStream(seed_, mix64(stream_id_ + kGolden * (k + 1)));
}

std::uint64_t RngStream::next() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform_positive() noexcept {
    double u = uniform();
    while (u == 0.0) u = uniform();
    return u;
}

}  // namespace pdcop
