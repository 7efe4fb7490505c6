#ifndef ODDCOL_RANDOM_HPP
#define ODDCOL_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace oddcol
{

/// mt19937_64 with portable bounded draws.
///
/// std::uniform_*_distribution differ between standard libraries; these
/// helpers do not, so a seed reproduces the same run everywhere.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= limit)
                return x % bound;
        }
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    template <typename T>
    void shuffle(std::span<T> items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace oddcol

#endif // ODDCOL_RANDOM_HPP
