#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

namespace commkit {

/**
 * Deterministic random stream: xoshiro256** seeded through SplitMix64 from
 * (seed, stream id). All sampling helpers are implemented here rather than
 * through <random> distributions so that output is bit-identical across
 * standard libraries and platforms.
 */
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed = 0, std::uint64_t stream_id = 0);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_; }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() noexcept;

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t uniform(std::uint64_t bound) noexcept;
    /// Uniform real in [0, 1) with 53 random bits.
    double uniform_real() noexcept;
    bool bernoulli(double p) noexcept { return uniform_real() < p; }

    template <class T>
    void shuffle(std::span<T> items) noexcept {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = uniform(i);
            std::swap(items[i - 1], items[j]);
        }
    }

    /// Independent child stream keyed by `index`; does not advance this stream.
    RngStream derive(std::uint64_t index) const noexcept;

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::array<std::uint64_t, 4> state_{};
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

} // namespace commkit
