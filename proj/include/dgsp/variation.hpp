#pragma once

#include "dgsp/bgft.hpp"
#include "dgsp/digraph.hpp"
#include "dgsp/frequency_order.hpp"

namespace dgsp {

/// ||Lx||_2^2, evaluated in the vertex domain.
double directed_tv(const Laplacian& l, const Signal& x);

/// x_hat^* (Lambda^* M Lambda) x_hat, i.e. ||V Lambda x_hat||^2 evaluated spectrally.
double spectral_tv(const Spectrum& s, const Signal& x_hat);

/// sigma_min^2 * sum |lambda_k x_hat_k|^2 and sigma_max^2 * the same sum.
/// Brackets ||Lx||^2 for x = V x_hat.
Interval tv_bounds(const Spectrum& s, const Signal& x_hat);

}  // namespace dgsp
