#include "dgsp/prng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace dgsp {

Prng::Prng(std::uint64_t seed) noexcept {
    std::uint64_t x = seed;
    for (auto& word : s_) {
        word = splitmix64(x);
        x += 0x9e3779b97f4a7c15ULL;
    }
}

std::uint64_t Prng::next() noexcept {
    const std::uint64_t result = std::rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double Prng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Prng::below(std::uint64_t bound) noexcept {
    // rejection on the top of the range keeps the result unbiased
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % bound;
}

double Prng::gaussian() noexcept {
    if (spare_) {
        const double g = *spare_;
        spare_.reset();
        return g;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    return r * std::cos(theta);
}

cdouble Prng::complex_gaussian() noexcept {
    const double re = gaussian();
    const double im = gaussian();
    return cdouble(re, im) * std::numbers::sqrt2 * 0.5;
}

CVector Prng::complex_gaussian_vector(std::size_t n) {
    CVector v(n);
    for (auto& z : v) z = complex_gaussian();
    return v;
}

}  // namespace dgsp
