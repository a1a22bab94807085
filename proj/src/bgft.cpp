#include "dgsp/bgft.hpp"

#include <cmath>

#include "dgsp/errors.hpp"

namespace dgsp {

namespace {

void expect(const Spectrum& s, const Signal& x, Domain domain, const char* op) {
    if (x.domain != domain)
        throw InvalidArgumentError(std::string(op) + ": signal is in the wrong domain");
    if (x.size() != s.size()) throw DimensionError(std::string(op) + ": signal length does not match the graph");
}

}  // namespace

Spectrum::Spectrum(const Laplacian& laplacian, const la::EigOptions& options)
    : Spectrum(la::eig(laplacian.matrix(), options)) {
    if (size() == 0) return;
    const double tol = 1e-9 * frobenius_norm(laplacian.matrix());
    if (std::abs(eig_.values[dc_index()]) > tol)
        throw ConsistencyError("Laplacian spectrum has no eigenvalue at zero within tolerance");
}

Spectrum::Spectrum(la::EigenSystem eigensystem)
    : eig_(std::move(eigensystem)), gram_(adjoint(eig_.vectors) * eig_.vectors), lu_(eig_.vectors) {}

Signal forward(const Spectrum& s, const Signal& x) {
    expect(s, x, Domain::Vertex, "forward");
    return Signal::spectral(s.factors().solve(x.values));
}

Signal inverse(const Spectrum& s, const Signal& x_hat) {
    expect(s, x_hat, Domain::Spectral, "inverse");
    return Signal::vertex(s.vectors() * x_hat.values);
}

double spectral_energy(const Spectrum& s, const Signal& x_hat) {
    expect(s, x_hat, Domain::Spectral, "spectral_energy");
    const CVector mx = s.gram() * x_hat.values;
    cdouble q{};
    for (std::size_t i = 0; i < mx.size(); ++i) q += std::conj(x_hat.values[i]) * mx[i];
    if (std::abs(q.imag()) > 1e-9 * std::abs(q.real()))
        throw ConsistencyError("Gram quadratic form has a non-negligible imaginary part");
    return std::max(q.real(), 0.0);
}

Interval parseval_bounds(const Spectrum& s, const Signal& x_hat) {
    expect(s, x_hat, Domain::Spectral, "parseval_bounds");
    const double c2 = abs2(x_hat.norm());
    return {s.sigma_min() * s.sigma_min() * c2, s.sigma_max() * s.sigma_max() * c2};
}

Signal apply_filter(const Spectrum& s, const CVector& h, const Signal& x) {
    if (h.size() != s.size()) throw DimensionError("apply_filter: response length does not match the graph");
    Signal coeffs = forward(s, x);
    for (std::size_t k = 0; k < h.size(); ++k) coeffs.values[k] *= h[k];
    return inverse(s, coeffs);
}

CVector band_indicator(std::size_t n, const std::vector<std::size_t>& band) {
    CVector h(n, 0.0);
    for (std::size_t k : band) {
        if (k >= n) throw IndexOutOfRangeError("band index out of range");
        h[k] = 1.0;
    }
    return h;
}

}  // namespace dgsp
