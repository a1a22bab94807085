#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "dgsp/errors.hpp"
#include "dgsp/sampling.hpp"
#include "oracles.hpp"

using namespace dgsp;

namespace {

std::vector<std::size_t> all_vertices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::vector<std::size_t> random_subset(Prng& rng, std::size_t n, std::size_t m) {
    std::vector<std::size_t> v = all_vertices(n);
    for (std::size_t i = 0; i < m; ++i) std::swap(v[i], v[i + rng.below(n - i)]);
    v.resize(m);
    return v;
}

CVector band_signal(Prng& rng, const SamplingPlan& plan) {
    return plan.basis() * rng.complex_gaussian_vector(plan.band_size());
}

}  // namespace

TEST_CASE("make_plan") {
    const Spectrum s(laplacian(perturbed_cycle(20, 0.2, 0.8, 1)));

    SUBCASE("full sampling gives B = V_Omega") {
        const SamplingPlan plan = make_plan(s, {0, 3, 7}, all_vertices(20));
        CHECK(plan.matrix() == plan.basis());
        CHECK(plan.full_rank());
        CHECK(plan.gamma() > 0.0);
        CHECK(plan.gamma() == la::svd_values(plan.basis()).back());
        for (std::size_t i = 0; i < 20; ++i) CHECK(plan.basis()(i, 1) == s.vectors()(i, 3));
    }
    SUBCASE("too few samples") {
        const SamplingPlan plan = make_plan(s, lowest_band(s, 5), {0, 1, 2});
        CHECK_FALSE(plan.full_rank());
        CHECK(plan.gamma() == 0.0);
        CHECK_THROWS_AS(recover(plan, CVector(3)), UnrecoverableError);
    }
    SUBCASE("cycle with five of eight vertices") {
        const Spectrum c(laplacian(directed_cycle(8)));
        const SamplingPlan plan = make_plan(c, lowest_band(c, 3), {0, 2, 4, 6, 7});
        const auto oracle_sigma = oracle::singular_values_via_gram(plan.matrix());
        CHECK(plan.full_rank());
        CHECK(oracle_sigma.back() > 0.1);
        CHECK(std::abs(plan.gamma() - oracle_sigma.back()) <= 1e-10);
    }
    SUBCASE("invalid index sets") {
        CHECK_THROWS_AS(make_plan(s, {0, 0}, {1, 2}), InvalidArgumentError);
        CHECK_THROWS_AS(make_plan(s, {0, 1}, {2, 2}), InvalidArgumentError);
        CHECK_THROWS_AS(make_plan(s, {0, 20}, {1, 2}), IndexOutOfRangeError);
        CHECK_THROWS_AS(make_plan(s, {0, 1}, {1, 21}), IndexOutOfRangeError);
        CHECK_THROWS_AS(lowest_band(s, 21), InvalidArgumentError);
    }
}

TEST_CASE("adding a vertex never decreases gamma") {
    Prng rng(20);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Spectrum s(laplacian(perturbed_cycle(20, 0.2, 0.8, seed)));
        const auto band = lowest_band(s, 5);
        const std::vector<std::size_t> order = random_subset(rng, 20, 20);
        double previous = 0.0;
        for (std::size_t m = 1; m <= 20; ++m) {
            const SamplingPlan plan = make_plan(s, band, {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m)});
            CHECK(plan.gamma() >= previous * (1.0 - 1e-12));
            previous = plan.gamma();
        }
    }
}

TEST_CASE("exact recovery from noiseless samples") {
    Prng rng(21);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Spectrum s(laplacian(seed == 1 ? directed_cycle(20) : perturbed_cycle(20, 0.2, 0.8, seed)));
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t k = 1 + rng.below(6);
            const auto omega = random_subset(rng, 20, k);
            const auto samples = random_subset(rng, 20, k + rng.below(20 - k + 1));
            const SamplingPlan plan = make_plan(s, omega, samples);
            if (!plan.full_rank()) continue;
            const CVector c = rng.complex_gaussian_vector(k);
            const CVector x = plan.basis() * c;
            const RecoveryResult r = recover(plan, plan.take_samples(x));
            CHECK(oracle::distance(r.x_hat, x) <= 1e-8 * vector_norm(x));
            CHECK(r.residual <= 1e-9 * vector_norm(plan.take_samples(x)));
            CHECK(r.bound_noise == 0.0);
        }
    }
    const Spectrum s(laplacian(directed_cycle(10)));
    const SamplingPlan plan = make_plan(s, lowest_band(s, 3), {0, 3, 6, 9});
    const RecoveryResult zero = recover(plan, CVector(4));
    for (const auto& z : zero.x_hat) CHECK(z == cdouble{});
    CHECK_THROWS_AS(recover(plan, CVector(3)), DimensionError);
}

TEST_CASE("noise bound") {
    const Spectrum cyc(laplacian(directed_cycle(12)));
    const SamplingPlan full = make_plan(cyc, lowest_band(cyc, 4), all_vertices(12));
    CHECK(noise_bound(full, 0.0) == 0.0);
    CHECK(std::abs(noise_bound(full, 0.3) - 0.3) <= 1e-12);
    CHECK_THROWS_AS(noise_bound(full, -1.0), InvalidArgumentError);

    Prng rng(22);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Spectrum s(laplacian(perturbed_cycle(20, 0.2, 0.8, seed)));
        const SamplingPlan plan = make_plan(s, lowest_band(s, 5), {0, 2, 4, 6, 8, 10, 12, 14, 16, 18});
        REQUIRE(plan.full_rank());
        for (int trial = 0; trial < 1000; ++trial) {
            const CVector x = band_signal(rng, plan);
            CVector y = plan.take_samples(x);
            const CVector eta = rng.complex_gaussian_vector(y.size());
            const double scale = 0.01 + rng.uniform();
            for (std::size_t i = 0; i < y.size(); ++i) y[i] += scale * eta[i];
            const double eta_norm = scale * vector_norm(eta);
            const RecoveryResult r = recover(plan, y, eta_norm);
            CHECK(r.bound_noise == noise_bound(plan, eta_norm));
            CHECK(r.bound_noise == (plan.basis_norm() * eta_norm) / plan.gamma());
            CHECK(oracle::distance(r.x_hat, x) <= r.bound_noise);
        }
    }
}

TEST_CASE("amplification bound") {
    CHECK(amplification_bound(3.0, 0.0, 2.0) == 0.0);
    CHECK(amplification_bound(2.0, 0.5, 4.0) == 0.25);
    CHECK_THROWS_AS(amplification_bound(1.0, 1.0, 0.0), InvalidArgumentError);

    Prng rng(23);
    const Spectrum cyc(laplacian(directed_cycle(20)));
    for (int trial = 0; trial < 50; ++trial) {
        const Signal xh = Signal::spectral(rng.complex_gaussian_vector(20));
        const Signal eta = Signal::spectral(rng.complex_gaussian_vector(20));
        const double rel = inverse(cyc, eta).norm() / inverse(cyc, xh).norm();
        const double bound = amplification_bound(cyc.kappa(), eta.norm(), xh.norm());
        CHECK(std::abs(rel - bound) <= 1e-9 * bound);
    }
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Spectrum s(laplacian(perturbed_cycle(20, 0.2, 0.8, seed)));
        for (int trial = 0; trial < 1000; ++trial) {
            const Signal xh = Signal::spectral(rng.complex_gaussian_vector(20));
            const Signal eta = Signal::spectral(rng.complex_gaussian_vector(20));
            const double rel = inverse(s, eta).norm() / inverse(s, xh).norm();
            CHECK(rel <= amplification_bound(s.kappa(), eta.norm(), xh.norm()));
        }
    }
}
