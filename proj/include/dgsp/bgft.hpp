#pragma once

#include <utility>

#include "dgsp/densela.hpp"
#include "dgsp/digraph.hpp"
#include "dgsp/matrix.hpp"

namespace dgsp {

enum class Domain { Vertex, Spectral };

/// Graph signal tagged with the domain it lives in. Transforms flip the tag.
struct Signal {
    CVector values;
    Domain domain = Domain::Vertex;

    static Signal vertex(CVector v) { return {std::move(v), Domain::Vertex}; }
    static Signal spectral(CVector v) { return {std::move(v), Domain::Spectral}; }

    std::size_t size() const noexcept { return values.size(); }
    double norm() const { return vector_norm(values); }
};

/// Eigensystem of a Laplacian together with the Gram matrix M = V^*V and the
/// LU factors of V. Immutable once built; every member is computed eagerly.
class Spectrum {
public:
    /// Decomposes L. Throws ConsistencyError if the smallest |lambda| exceeds
    /// 1e-9 * ||L||_F (the DC mode must come first in frequency order).
    explicit Spectrum(const Laplacian& laplacian, const la::EigOptions& options = {});

    /// Wraps an existing eigensystem without the DC check. For synthetic operators.
    explicit Spectrum(la::EigenSystem eigensystem);

    std::size_t size() const noexcept { return eig_.size(); }
    const la::EigenSystem& eigensystem() const noexcept { return eig_; }
    const CVector& values() const noexcept { return eig_.values; }
    const CMatrix& vectors() const noexcept { return eig_.vectors; }
    const CMatrix& gram() const noexcept { return gram_; }
    const la::LuFactorization& factors() const noexcept { return lu_; }

    double sigma_min() const noexcept { return eig_.sigma_min; }
    double sigma_max() const noexcept { return eig_.sigma_max; }
    double kappa() const noexcept { return eig_.kappa; }

    /// Index of the lambda = 0 mode in frequency order.
    static constexpr std::size_t dc_index() noexcept { return 0; }

private:
    la::EigenSystem eig_;
    CMatrix gram_;
    la::LuFactorization lu_;
};

/// x_hat = V^-1 x, by LU solve.
Signal forward(const Spectrum& s, const Signal& x);

/// x = V x_hat.
Signal inverse(const Spectrum& s, const Signal& x_hat);

/// x_hat^* M x_hat, which equals ||V x_hat||^2.
double spectral_energy(const Spectrum& s, const Signal& x_hat);

struct Interval {
    double lower;
    double upper;

    bool contains(double v, double rel_slack = 0.0) const {
        return v >= lower * (1.0 - rel_slack) && v <= upper * (1.0 + rel_slack);
    }
};

/// (sigma_min^2 ||x_hat||^2, sigma_max^2 ||x_hat||^2).
Interval parseval_bounds(const Spectrum& s, const Signal& x_hat);

/// y = V diag(h) V^-1 x. h is indexed in frequency order.
Signal apply_filter(const Spectrum& s, const CVector& h, const Signal& x);

/// Indicator of `band` as a length-n filter.
CVector band_indicator(std::size_t n, const std::vector<std::size_t>& band);

}  // namespace dgsp
