#pragma once

#include <string>

#include "dgsp/densela.hpp"
#include "dgsp/digraph.hpp"

namespace dgsp {

/// The four asymmetry / non-normality scalars of one Laplacian.
struct MetricsReport {
    std::string graph_label;
    double kappa = 1.0;    // sigma_max(V) / sigma_min(V)
    double henrici = 0.0;  // (||L||_F^2 - sum |lambda|^2) / n
    double alpha = 0.0;    // ||L - L^T||_F / ||L||_F
    double delta = 0.0;    // ||LL^* - L^*L||_F / ||L||_F^2
};

/// ||A - A^T||_F / ||A||_F, and 0 for A = 0.
double asymmetry_index(const RMatrix& a);

/// ||AA^* - A^*A||_F / ||A||_F^2, and 0 for A = 0.
double commutator_departure(const CMatrix& a);
double commutator_departure(const RMatrix& a);

/// Henrici departure without square root, divided by n:
/// (||A||_F^2 - sum_k |lambda_k|^2) / n.
/// Small negative rounding (down to -1e-9 * max(1, ||A||_F^2 / n)) is clamped to zero.
double henrici_departure(const CMatrix& a, const CVector& values);
double henrici_departure(const RMatrix& a, const CVector& values);

/// kappa(V) from the singular values of the eigenvector matrix.
/// Throws NumericallyDefectiveError if sigma_min < 1e-14.
double condition_number(const la::EigenSystem& e);
double condition_number(const CMatrix& v);

MetricsReport report(const Digraph& g, std::string label, const la::EigOptions& options = {});

}  // namespace dgsp
