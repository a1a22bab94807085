#include "dgsp/nonnormality.hpp"

#include <cmath>

#include "dgsp/errors.hpp"

namespace dgsp {

double asymmetry_index(const RMatrix& a) {
    if (!a.square()) throw DimensionError("asymmetry_index requires a square matrix");
    // visit (i, j) and (j, i) together so that A and A^T give bit-identical sums
    double mass = 0.0;
    double skew = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mass += abs2(a(i, i));
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            mass += abs2(a(i, j)) + abs2(a(j, i));
            skew += 2.0 * abs2(a(i, j) - a(j, i));
        }
    }
    if (mass == 0.0) return 0.0;
    return std::sqrt(skew) / std::sqrt(mass);
}

double commutator_departure(const CMatrix& a) {
    if (!a.square()) throw DimensionError("commutator_departure requires a square matrix");
    const double norm = frobenius_norm(a);
    if (norm == 0.0) return 0.0;
    const CMatrix ah = adjoint(a);
    return frobenius_norm(a * ah - ah * a) / (norm * norm);
}

double commutator_departure(const RMatrix& a) {
    if (!a.square()) throw DimensionError("commutator_departure requires a square matrix");
    const double norm = frobenius_norm(a);
    if (norm == 0.0) return 0.0;
    const RMatrix at = transpose(a);
    return frobenius_norm(a * at - at * a) / (norm * norm);
}

double henrici_departure(const CMatrix& a, const CVector& values) {
    if (!a.square()) throw DimensionError("henrici_departure requires a square matrix");
    const std::size_t n = a.rows();
    if (values.size() != n) throw DimensionError("henrici_departure: eigenvalue count does not match matrix size");
    if (n == 0) return 0.0;
    const double fro2 = abs2(frobenius_norm(a));
    double spec2 = 0.0;
    for (const auto& v : values) spec2 += std::norm(v);
    const double d = (fro2 - spec2) / static_cast<double>(n);
    if (d >= 0.0) return d;
    if (d >= -1e-9 * std::max(1.0, fro2 / static_cast<double>(n))) return 0.0;
    throw ConsistencyError("henrici_departure: eigenvalue mass exceeds Frobenius mass; values are not eigenvalues");
}

double henrici_departure(const RMatrix& a, const CVector& values) { return henrici_departure(to_complex(a), values); }

double condition_number(const CMatrix& v) {
    if (v.empty()) return 1.0;
    const RVector sigma = la::svd_values(v);
    if (sigma.back() < 1e-14) throw NumericallyDefectiveError("sigma_min(V) below 1e-14; eigenbasis is numerically defective");
    return sigma.front() / sigma.back();
}

double condition_number(const la::EigenSystem& e) { return condition_number(e.vectors); }

MetricsReport report(const Digraph& g, std::string label, const la::EigOptions& options) {
    const Laplacian l = laplacian(g);
    const la::EigenSystem es = la::eig(l.matrix(), options);
    MetricsReport r;
    r.graph_label = std::move(label);
    r.kappa = condition_number(es);
    r.henrici = henrici_departure(l.matrix(), es.values);
    r.alpha = asymmetry_index(l.matrix());
    r.delta = commutator_departure(l.matrix());
    return r;
}

}  // namespace dgsp
