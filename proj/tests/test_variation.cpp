#include <cmath>

#include "doctest.h"
#include "dgsp/errors.hpp"
#include "dgsp/variation.hpp"
#include "oracles.hpp"

using namespace dgsp;

TEST_CASE("directed_tv") {
    const Laplacian c3 = laplacian(directed_cycle(3));
    CHECK(directed_tv(c3, Signal::vertex(CVector(3, 1.0))) == 0.0);
    CHECK(directed_tv(c3, Signal::vertex(CVector{1.0, 0.0, 0.0})) == 2.0);

    const Laplacian c12 = laplacian(directed_cycle(12));
    const Spectrum s(c12);
    for (std::size_t k = 0; k < 12; ++k) {
        const double tv = directed_tv(c12, Signal::vertex(s.vectors().column(k)));
        CHECK(std::abs(tv - std::norm(s.values()[k])) <= 1e-12);
    }
    CHECK_THROWS_AS(directed_tv(c3, Signal::spectral(CVector(3))), InvalidArgumentError);
    CHECK_THROWS_AS(directed_tv(c3, Signal::vertex(CVector(4))), DimensionError);
}

TEST_CASE("tv_bounds sandwich the directed variation") {
    Prng rng(10);
    std::vector<Laplacian> graphs{laplacian(directed_cycle(20)), laplacian(directed_cycle(9))};
    for (std::uint64_t seed = 1; seed <= 4; ++seed) graphs.push_back(laplacian(perturbed_cycle(20, 0.2, 0.8, seed)));
    for (const auto& l : graphs) {
        const Spectrum s(l);
        const std::size_t n = s.size();
        const bool normal = std::abs(s.kappa() - 1.0) <= 1e-9;
        for (int trial = 0; trial < 1000; ++trial) {
            const Signal xh = Signal::spectral(rng.complex_gaussian_vector(n));
            const Signal x = inverse(s, xh);
            const double tv = directed_tv(l, x);
            const Interval b = tv_bounds(s, xh);
            CHECK(b.contains(tv, 1e-9));
            CHECK(std::abs(spectral_tv(s, xh) - tv) <= 1e-8 * s.kappa() * s.kappa() * tv);
            if (normal) {
                CHECK(b.upper - b.lower <= 1e-8 * b.upper);
                CHECK(std::abs(b.lower - tv) <= 1e-9 * tv);
            }
        }
    }
}

TEST_CASE("tv_bounds of the DC mode vanish") {
    const Spectrum s(laplacian(perturbed_cycle(20, 0.2, 0.8, 1)));
    CVector e(20);
    e[Spectrum::dc_index()] = 1.0;
    const Interval b = tv_bounds(s, Signal::spectral(e));
    CHECK(b.lower <= 1e-20);
    CHECK(b.upper <= 1e-20);
    CHECK(directed_tv(laplacian(perturbed_cycle(20, 0.2, 0.8, 1)), inverse(s, Signal::spectral(e))) <= 1e-20);
}

TEST_CASE("frequency_order") {
    const CVector c4{0.0, cdouble(1, -1), 2.0, cdouble(1, 1)};
    CHECK(frequency_order(c4).permutation == std::vector<std::size_t>{0, 1, 3, 2});

    const CVector same_modulus{cdouble(0, 1), cdouble(-1, 0), cdouble(1, 0), cdouble(0, -1)};
    CHECK(frequency_order(same_modulus).permutation == std::vector<std::size_t>{1, 3, 0, 2});

    const CVector sorted{0.0, 0.5, cdouble(1, -1), cdouble(1, 1)};
    CHECK(frequency_order(sorted).permutation == std::vector<std::size_t>{0, 1, 2, 3});

    const CVector ties{1.0, 1.0, 1.0};
    CHECK(frequency_order(ties).permutation == std::vector<std::size_t>{0, 1, 2});

    Prng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const CVector v = rng.complex_gaussian_vector(1 + rng.below(30));
        const FrequencyOrder o = frequency_order(v);
        std::vector<std::size_t> seen = o.permutation;
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == i);
        for (std::size_t i = 1; i < v.size(); ++i) CHECK(std::abs(v[o.permutation[i - 1]]) <= std::abs(v[o.permutation[i]]));
        CHECK(is_frequency_ordered(v, o));
    }
}
