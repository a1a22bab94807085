#include <cmath>

#include "doctest.h"
#include "dgsp/bgft.hpp"
#include "dgsp/errors.hpp"
#include "oracles.hpp"

using namespace dgsp;

namespace {

std::vector<Laplacian> test_laplacians() {
    std::vector<Laplacian> out;
    out.push_back(laplacian(directed_cycle(20)));
    out.push_back(laplacian(directed_cycle(7)));
    for (std::uint64_t seed = 1; seed <= 4; ++seed) out.push_back(laplacian(perturbed_cycle(20, 0.2, 0.8, seed)));
    out.push_back(laplacian(perturbed_cycle(12, 0.5, 0.3, 9)));
    return out;
}

CVector unit(std::size_t n, std::size_t k) {
    CVector e(n);
    e[k] = 1.0;
    return e;
}

}  // namespace

TEST_CASE("Spectrum invariants") {
    for (const auto& l : test_laplacians()) {
        const Spectrum s(l);
        const std::size_t n = s.size();
        CHECK(std::abs(s.values()[Spectrum::dc_index()]) <= 1e-9 * frobenius_norm(l.matrix()));
        double asym = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) asym = std::max(asym, std::abs(s.gram()(i, j) - std::conj(s.gram()(j, i))));
        CHECK(asym <= 1e-12);
        const auto ev = oracle::singular_values_via_gram(s.vectors());
        CHECK(s.sigma_min() > 0.0);
        CHECK(std::abs(s.sigma_min() - ev.back()) <= 1e-8 * s.sigma_max());
    }
    // a perturbed instance that is genuinely non-normal
    bool strongly_non_normal = false;
    for (std::uint64_t seed = 1; seed <= 10 && !strongly_non_normal; ++seed)
        strongly_non_normal = Spectrum(laplacian(perturbed_cycle(20, 0.2, 0.8, seed))).kappa() > 10.0;
    CHECK(strongly_non_normal);
}

TEST_CASE("Spectrum from an eigensystem skips the DC check") {
    const Spectrum s(la::eig(RMatrix{{2.0, 1.0}, {0.0, 3.0}}));
    CHECK(std::abs(s.values()[0] - 2.0) <= 1e-14);
    CHECK(s.kappa() > 1.0);
}

TEST_CASE("forward") {
    SUBCASE("constant signal on the cycle hits only the DC index") {
        for (std::size_t n : {3u, 8u, 20u}) {
            const Spectrum s(laplacian(directed_cycle(n)));
            const Signal xh = forward(s, Signal::vertex(CVector(n, 1.0)));
            CHECK(xh.domain == Domain::Spectral);
            CHECK(std::abs(xh.values[0] - std::sqrt(static_cast<double>(n))) <= 1e-9);
            for (std::size_t k = 1; k < n; ++k) CHECK(std::abs(xh.values[k]) <= 1e-9);
        }
    }
    SUBCASE("eigenvector columns map to unit vectors") {
        const Spectrum s(laplacian(perturbed_cycle(20, 0.2, 0.8, 2)));
        for (std::size_t k = 0; k < 20; ++k) {
            const Signal xh = forward(s, Signal::vertex(s.vectors().column(k)));
            CHECK(oracle::distance(xh.values, unit(20, k)) <= 1e-9 * s.kappa());
        }
    }
    SUBCASE("domain and length are checked") {
        const Spectrum s(laplacian(directed_cycle(4)));
        CHECK_THROWS_AS(forward(s, Signal::spectral(CVector(4))), InvalidArgumentError);
        CHECK_THROWS_AS(forward(s, Signal::vertex(CVector(5))), DimensionError);
        CHECK_THROWS_AS(inverse(s, Signal::vertex(CVector(4))), InvalidArgumentError);
        CHECK_THROWS_AS(inverse(s, Signal::spectral(CVector(3))), DimensionError);
    }
}

TEST_CASE("inverse") {
    const Spectrum s(laplacian(perturbed_cycle(20, 0.2, 0.8, 3)));
    for (std::size_t k = 0; k < 20; ++k) {
        const Signal x = inverse(s, Signal::spectral(unit(20, k)));
        CHECK(x.domain == Domain::Vertex);
        CHECK(x.values == s.vectors().column(k));
    }
    const Signal zero = inverse(s, Signal::spectral(CVector(20)));
    for (const auto& z : zero.values) CHECK(z == cdouble{});
}

TEST_CASE("round trips, energy identity and Parseval bounds") {
    Prng rng(2024);
    for (const auto& l : test_laplacians()) {
        const Spectrum s(l);
        const std::size_t n = s.size();
        for (int trial = 0; trial < 1000; ++trial) {
            const Signal x = Signal::vertex(rng.complex_gaussian_vector(n));
            const Signal xh = forward(s, x);
            CHECK(oracle::distance(inverse(s, xh).values, x.values) <= 1e-9 * s.kappa() * x.norm());
            const double energy = spectral_energy(s, xh);
            CHECK(std::abs(energy - x.norm() * x.norm()) <= 1e-9 * x.norm() * x.norm());

            const Signal ch = Signal::spectral(rng.complex_gaussian_vector(n));
            const Signal back = forward(s, inverse(s, ch));
            CHECK(oracle::distance(back.values, ch.values) <= 1e-9 * s.kappa() * ch.norm());
            const double vx2 = std::pow(inverse(s, ch).norm(), 2);
            CHECK(parseval_bounds(s, ch).contains(vx2, 1e-9));
        }
    }
}

TEST_CASE("spectral_energy special cases") {
    const Spectrum pert(laplacian(perturbed_cycle(20, 0.2, 0.8, 4)));
    for (std::size_t k = 0; k < 20; ++k)
        CHECK(std::abs(spectral_energy(pert, Signal::spectral(unit(20, k))) - 1.0) <= 1e-12);

    const Spectrum cyc(laplacian(directed_cycle(16)));
    Prng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Signal ch = Signal::spectral(rng.complex_gaussian_vector(16));
        CHECK(std::abs(spectral_energy(cyc, ch) - std::pow(ch.norm(), 2)) <= 1e-9 * std::pow(ch.norm(), 2));
    }
    CHECK_THROWS_AS(spectral_energy(cyc, Signal::vertex(CVector(16))), InvalidArgumentError);
}

TEST_CASE("parseval_bounds") {
    const Spectrum cyc(laplacian(directed_cycle(20)));
    Prng rng(6);
    const Signal ch = Signal::spectral(rng.complex_gaussian_vector(20));
    const Interval b = parseval_bounds(cyc, ch);
    const double nrm2 = std::pow(ch.norm(), 2);
    CHECK(std::abs(b.lower - nrm2) <= 1e-9 * nrm2);
    CHECK(std::abs(b.upper - nrm2) <= 1e-9 * nrm2);

    const Interval z = parseval_bounds(cyc, Signal::spectral(CVector(20)));
    CHECK(z.lower == 0.0);
    CHECK(z.upper == 0.0);
}

TEST_CASE("apply_filter") {
    Prng rng(7);
    for (const auto& l : test_laplacians()) {
        const Spectrum s(l);
        const std::size_t n = s.size();
        const Signal x = Signal::vertex(rng.complex_gaussian_vector(n));

        const Signal same = apply_filter(s, CVector(n, 1.0), x);
        CHECK(oracle::distance(same.values, x.values) <= 1e-9 * s.kappa() * x.norm());

        const Signal lx = apply_filter(s, s.values(), x);
        const CVector direct = to_complex(l.matrix()) * x.values;
        CHECK(oracle::distance(lx.values, direct) <= 1e-9 * s.kappa() * frobenius_norm(l.matrix()) * x.norm());

        const CVector h1 = rng.complex_gaussian_vector(n);
        const CVector h2 = rng.complex_gaussian_vector(n);
        CVector h12(n);
        for (std::size_t k = 0; k < n; ++k) h12[k] = h1[k] * h2[k];
        const Signal composed = apply_filter(s, h1, apply_filter(s, h2, x));
        const Signal joint = apply_filter(s, h12, x);
        CHECK(oracle::distance(composed.values, joint.values) <= 1e-8 * s.kappa() * s.kappa() * x.norm());
    }
    const Spectrum s(laplacian(directed_cycle(5)));
    CHECK_THROWS_AS(apply_filter(s, CVector(4, 1.0), Signal::vertex(CVector(5))), DimensionError);
}

TEST_CASE("ideal low-pass keeps in-band signals and removes out-of-band ones") {
    const Spectrum s(laplacian(perturbed_cycle(20, 0.2, 0.8, 8)));
    const CVector h = band_indicator(20, {0, 1, 2, 3, 4});
    for (std::size_t k = 0; k < 20; ++k) CHECK(h[k] == cdouble(k < 5 ? 1.0 : 0.0));
    Prng rng(8);
    CVector c(20);
    for (std::size_t k = 0; k < 5; ++k) c[k] = rng.complex_gaussian();
    const Signal x = inverse(s, Signal::spectral(c));
    CHECK(oracle::distance(apply_filter(s, h, x).values, x.values) <= 1e-9 * s.kappa() * x.norm());

    const Signal out_of_band = Signal::vertex(s.vectors().column(10));
    CHECK(apply_filter(s, h, out_of_band).norm() <= 1e-9 * s.kappa());
    CHECK_THROWS_AS(band_indicator(4, {4}), IndexOutOfRangeError);
}

TEST_CASE("disconnected graphs keep the constant vector in the zero eigenspace") {
    // disjoint 3-cycle and 4-cycle: lambda = 0 twice, other eigenvalues distinct
    const Digraph g = from_edge_list(7, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0},
                                         {3, 4, 1.0}, {4, 5, 1.0}, {5, 6, 1.0}, {6, 3, 1.0}});
    const Spectrum s(laplacian(g));
    CHECK(std::abs(s.values()[0]) <= 1e-12);
    CHECK(std::abs(s.values()[1]) <= 1e-12);
    CHECK(std::abs(s.values()[2]) > 0.5);
    const Signal xh = forward(s, Signal::vertex(CVector(7, 1.0)));
    for (std::size_t k = 2; k < 7; ++k) CHECK(std::abs(xh.values[k]) <= 1e-9 * xh.norm());
}
