#pragma once

#include <vector>

#include "dgsp/bgft.hpp"

namespace dgsp {

/// Band Omega (frequency-order indices) and sampled vertices M, with
/// B = P_M V_Omega and gamma = sigma_min(B).
class SamplingPlan {
public:
    SamplingPlan(const Spectrum& s, std::vector<std::size_t> omega, std::vector<std::size_t> samples);

    const std::vector<std::size_t>& omega() const noexcept { return omega_; }
    const std::vector<std::size_t>& samples() const noexcept { return samples_; }
    std::size_t band_size() const noexcept { return omega_.size(); }
    std::size_t sample_count() const noexcept { return samples_.size(); }

    const CMatrix& basis() const noexcept { return v_omega_; }  // V_Omega, n x K
    const CMatrix& matrix() const noexcept { return b_; }       // B, m x K

    /// sigma_min(B); 0 when m < K.
    double gamma() const noexcept { return gamma_; }
    double sigma_max_b() const noexcept { return sigma_max_b_; }
    /// ||V_Omega||_2.
    double basis_norm() const noexcept { return basis_norm_; }

    /// False when m < K or gamma < 1e-10 * sigma_max(B).
    bool full_rank() const noexcept { return full_rank_; }

    /// P_M x.
    CVector take_samples(const CVector& x) const;

private:
    std::vector<std::size_t> omega_;
    std::vector<std::size_t> samples_;
    CMatrix v_omega_;
    CMatrix b_;
    double gamma_ = 0.0;
    double sigma_max_b_ = 0.0;
    double basis_norm_ = 0.0;
    bool full_rank_ = false;
};

SamplingPlan make_plan(const Spectrum& s, std::vector<std::size_t> omega, std::vector<std::size_t> samples);

/// The K lowest frequencies: {0, ..., K-1} in frequency order.
std::vector<std::size_t> lowest_band(const Spectrum& s, std::size_t k);

struct RecoveryResult {
    CVector x_hat;        // V_Omega c_hat
    CVector c_hat;        // least-squares band coefficients
    double residual = 0;  // ||B c_hat - y||
    double bound_noise = 0;
};

/// Least-squares recovery from y = P_M x (+ noise). `eta_norm` feeds bound_noise.
/// Throws UnrecoverableError for rank-deficient plans.
RecoveryResult recover(const SamplingPlan& plan, const CVector& y, double eta_norm = 0.0);

/// ||V_Omega||_2 * eta_norm / gamma, evaluated as (basis_norm * eta_norm) / gamma.
double noise_bound(const SamplingPlan& plan, double eta_norm);

/// kappa * eta_norm / coeff_norm: bound on ||V eta|| / ||V x_hat||.
double amplification_bound(double kappa, double eta_norm, double coeff_norm);

}  // namespace dgsp
