#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "dgsp/densela.hpp"
#include "dgsp/errors.hpp"

namespace dgsp::la {

namespace {

constexpr int kMaxSweeps = 100;

// One-sided Jacobi: rotate column pairs until all are mutually orthogonal;
// the column norms are then the singular values. Works on columns of a
// column-major copy.
RVector jacobi_column_norms(std::vector<CVector> cols) {
    const std::size_t n = cols.size();
    const double tol = std::numeric_limits<double>::epsilon();
    for (int sweep = 0;; ++sweep) {
        if (sweep == kMaxSweeps) throw ConvergenceError("one-sided Jacobi SVD did not converge");
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                auto& ap = cols[p];
                auto& aq = cols[q];
                double alpha = 0.0;
                double beta = 0.0;
                cdouble gamma{};
                for (std::size_t i = 0; i < ap.size(); ++i) {
                    alpha += std::norm(ap[i]);
                    beta += std::norm(aq[i]);
                    gamma += std::conj(ap[i]) * aq[i];
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) continue;
                rotated = true;
                // phase-align column q so the inner product is real, then a real rotation
                const cdouble phase = std::conj(gamma) / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < ap.size(); ++i) {
                    const cdouble x = ap[i];
                    const cdouble y = aq[i] * phase;
                    ap[i] = c * x - s * y;
                    aq[i] = s * x + c * y;
                }
            }
        }
        if (!rotated) break;
    }
    RVector sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = vector_norm(cols[j]);
    std::sort(sigma.begin(), sigma.end(), std::greater<>());
    return sigma;
}

}  // namespace

RVector svd_values(const CMatrix& a) {
    // work on whichever orientation has no more columns than rows
    const bool tall = a.rows() >= a.cols();
    const std::size_t ncols = tall ? a.cols() : a.rows();
    const std::size_t nrows = tall ? a.rows() : a.cols();
    std::vector<CVector> cols(ncols, CVector(nrows));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
                throw InvalidArgumentError("svd_values: non-finite entry");
            if (tall)
                cols[j][i] = a(i, j);
            else
                cols[i][j] = std::conj(a(i, j));
        }
    return jacobi_column_norms(std::move(cols));
}

RVector svd_values(const RMatrix& a) { return svd_values(to_complex(a)); }

}  // namespace dgsp::la
