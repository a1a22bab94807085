#include "dgsp/variation.hpp"

#include "dgsp/errors.hpp"

namespace dgsp {

double directed_tv(const Laplacian& l, const Signal& x) {
    if (x.domain != Domain::Vertex) throw InvalidArgumentError("directed_tv: expected a vertex-domain signal");
    if (x.size() != l.size()) throw DimensionError("directed_tv: signal length does not match the graph");
    const CVector lx = to_complex(l.matrix()) * x.values;
    double tv = 0.0;
    for (const auto& v : lx) tv += std::norm(v);
    return tv;
}

double spectral_tv(const Spectrum& s, const Signal& x_hat) {
    if (x_hat.domain != Domain::Spectral) throw InvalidArgumentError("spectral_tv: expected spectral coefficients");
    if (x_hat.size() != s.size()) throw DimensionError("spectral_tv: coefficient length does not match the graph");
    CVector z(s.size());
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = s.values()[k] * x_hat.values[k];
    return spectral_energy(s, Signal::spectral(std::move(z)));
}

Interval tv_bounds(const Spectrum& s, const Signal& x_hat) {
    if (x_hat.domain != Domain::Spectral) throw InvalidArgumentError("tv_bounds: expected spectral coefficients");
    if (x_hat.size() != s.size()) throw DimensionError("tv_bounds: coefficient length does not match the graph");
    double weighted = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) weighted += std::norm(s.values()[k] * x_hat.values[k]);
    return {s.sigma_min() * s.sigma_min() * weighted, s.sigma_max() * s.sigma_max() * weighted};
}

}  // namespace dgsp
