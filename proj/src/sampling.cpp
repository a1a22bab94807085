#include "dgsp/sampling.hpp"

#include <algorithm>

#include "dgsp/errors.hpp"

namespace dgsp {

namespace {

constexpr double kRankThreshold = 1e-10;

void check_indices(const std::vector<std::size_t>& idx, std::size_t n, const char* what) {
    std::vector<bool> seen(n, false);
    for (std::size_t i : idx) {
        if (i >= n) throw IndexOutOfRangeError(std::string(what) + " index " + std::to_string(i) + " out of range");
        if (seen[i]) throw InvalidArgumentError(std::string("duplicate ") + what + " index " + std::to_string(i));
        seen[i] = true;
    }
}

}  // namespace

SamplingPlan::SamplingPlan(const Spectrum& s, std::vector<std::size_t> omega, std::vector<std::size_t> samples)
    : omega_(std::move(omega)), samples_(std::move(samples)) {
    const std::size_t n = s.size();
    check_indices(omega_, n, "band");
    check_indices(samples_, n, "sample");
    const std::size_t k = omega_.size();
    const std::size_t m = samples_.size();

    v_omega_ = CMatrix(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) v_omega_(i, j) = s.vectors()(i, omega_[j]);
    b_ = CMatrix(m, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) b_(i, j) = v_omega_(samples_[i], j);

    if (k == 0) return;
    basis_norm_ = la::svd_values(v_omega_).front();
    if (m == 0) return;
    const RVector sigma = la::svd_values(b_);
    sigma_max_b_ = sigma.front();
    if (m < k) return;  // gamma stays 0
    gamma_ = sigma.back();
    full_rank_ = gamma_ > 0.0 && gamma_ >= kRankThreshold * sigma_max_b_;
}

CVector SamplingPlan::take_samples(const CVector& x) const {
    if (x.size() != v_omega_.rows()) throw DimensionError("take_samples: signal length does not match the graph");
    CVector y(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) y[i] = x[samples_[i]];
    return y;
}

SamplingPlan make_plan(const Spectrum& s, std::vector<std::size_t> omega, std::vector<std::size_t> samples) {
    return SamplingPlan(s, std::move(omega), std::move(samples));
}

std::vector<std::size_t> lowest_band(const Spectrum& s, std::size_t k) {
    if (k > s.size()) throw InvalidArgumentError("band size exceeds the number of vertices");
    std::vector<std::size_t> band(k);
    for (std::size_t i = 0; i < k; ++i) band[i] = i;
    return band;
}

RecoveryResult recover(const SamplingPlan& plan, const CVector& y, double eta_norm) {
    if (!plan.full_rank()) throw UnrecoverableError("sampling plan is rank deficient; signal cannot be recovered");
    if (y.size() != plan.sample_count()) throw DimensionError("recover: sample vector length mismatch");
    RecoveryResult r;
    r.c_hat = la::least_squares(plan.matrix(), y);
    r.x_hat = plan.basis() * r.c_hat;
    CVector resid = plan.matrix() * r.c_hat;
    for (std::size_t i = 0; i < resid.size(); ++i) resid[i] -= y[i];
    r.residual = vector_norm(resid);
    r.bound_noise = noise_bound(plan, eta_norm);
    return r;
}

double noise_bound(const SamplingPlan& plan, double eta_norm) {
    if (!plan.full_rank()) throw UnrecoverableError("noise bound undefined for a rank-deficient plan");
    if (eta_norm < 0.0) throw InvalidArgumentError("noise norm must be non-negative");
    return (plan.basis_norm() * eta_norm) / plan.gamma();
}

double amplification_bound(double kappa, double eta_norm, double coeff_norm) {
    if (!(coeff_norm > 0.0)) throw InvalidArgumentError("coefficient norm must be positive");
    return kappa * eta_norm / coeff_norm;
}

}  // namespace dgsp
