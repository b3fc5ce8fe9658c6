#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace logan {

/// A 64-bit seed driving the "mt19937_64/v1" stream.
///
/// std::mt19937_64 output is fixed by the standard, but the std::*_distribution
/// templates are not, so every draw below is derived from raw engine output.
/// Changing any of these derivations must bump the version string.
struct Seed {
    std::uint64_t value = 0;

    auto operator<=>(const Seed &) const = default;
};

inline constexpr std::string_view rng_version = "mt19937_64/v1";

/// splitmix64 finaliser; used to derive independent sub-seeds.
constexpr auto mix64(std::uint64_t x) -> std::uint64_t
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives a child seed for stream `stream` of `parent`.
constexpr auto derive_seed(Seed parent, std::uint64_t stream) -> Seed
{
    return Seed{mix64(mix64(parent.value) ^ mix64(stream + 0x632be59bd9b4e019ULL))};
}

class Rng {
public:
    explicit Rng(Seed seed) : engine_(mix64(seed.value)) {}

    auto next_u64() -> std::uint64_t { return engine_(); }

    /// Uniform double in [0, 1) with 53 bits of precision.
    auto uniform01() -> double { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    auto bernoulli(double p) -> bool { return uniform01() < p; }

    /// Uniform integer in [0, bound). bound must be positive.
    auto below(std::uint64_t bound) -> std::uint64_t
    {
        // rejection sampling on the top of the range keeps this exactly uniform
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform integer in [lo, hi] inclusive.
    auto between(std::int64_t lo, std::int64_t hi) -> std::int64_t
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    template <typename T>
    auto pick(const std::vector<T> & items) -> const T &
    {
        return items[below(items.size())];
    }

    /// Fisher-Yates with our own index draws.
    template <typename T>
    auto shuffle(std::vector<T> & items) -> void
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace logan
