#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "dgsp/matrix.hpp"

namespace dgsp {

/// One step of the splitmix64 generator applied to x.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ seeded by splitmix64 expansion of a 64-bit seed.
/// Gaussians use Box-Muller; the second variate of each pair is kept for the next call.
class Prng {
public:
    explicit Prng(std::uint64_t seed) noexcept;

    /// Independent stream for trial `trial`, seeded with splitmix64(seed ^ trial).
    static Prng substream(std::uint64_t seed, std::uint64_t trial) noexcept {
        return Prng(splitmix64(seed ^ trial));
    }

    std::uint64_t next() noexcept;

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept;

    double gaussian() noexcept;

    /// (g1 + i g2) / sqrt(2): unit variance complex Gaussian.
    cdouble complex_gaussian() noexcept;

    CVector complex_gaussian_vector(std::size_t n);

    const std::array<std::uint64_t, 4>& state() const noexcept { return s_; }

private:
    std::array<std::uint64_t, 4> s_{};
    std::optional<double> spare_;
};

}  // namespace dgsp
