#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>

namespace compgraph {

__extension__ using uint128 = unsigned __int128;

/// SplitMix64 finalizer. Every random stream in the library is built on it so that
/// results are identical across platforms and standard library implementations.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives a substream key from a seed and a list of coordinates (cell, trial, attempt...).
constexpr std::uint64_t derive_key(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) noexcept {
    std::uint64_t h = mix64(seed);
    for (std::uint64_t p : parts) h = mix64(h ^ mix64(p + 0x632be59bd9b4e019ULL));
    return h;
}

/// Counter-based generator: the i-th output is a pure function of (key, i).
class counter_rng {
public:
    using result_type = std::uint64_t;

    explicit constexpr counter_rng(std::uint64_t key) noexcept : key_(key) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept {
        return mix64(key_ + 0xd1b54a32d192ed03ULL * counter_++);
    }

    /// Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t bound) noexcept {
        if (bound <= 1) return 0;
        uint128 m = static_cast<uint128>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<uint128>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    constexpr std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Fisher-Yates with decreasing index: for i = n-1..1 swap(i, uniform[0, i]).
template <class T>
void shuffle(std::span<T> items, counter_rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

/// Seed for trial `index` of an experiment driven by `master`.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return derive_key(master, {0x7472'6961'6cULL, index});
}

} // namespace compgraph
