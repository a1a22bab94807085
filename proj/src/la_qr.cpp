#include <cmath>
#include <numeric>

#include "dgsp/densela.hpp"
#include "dgsp/errors.hpp"

namespace dgsp::la {

namespace {

constexpr double kRankThreshold = 1e-10;

}  // namespace

CVector least_squares(const CMatrix& b, const CVector& y) {
    const std::size_t m = b.rows();
    const std::size_t k_cols = b.cols();
    if (y.size() != m) throw DimensionError("least squares: sample vector length mismatch");
    if (m < k_cols) throw RankDeficientError("least squares: fewer rows than unknowns");

    CMatrix r = b;
    CVector rhs = y;
    std::vector<std::size_t> perm(k_cols);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    double leading = 0.0;

    for (std::size_t k = 0; k < k_cols; ++k) {
        // pivot: remaining column of largest trailing norm
        std::size_t pivot = k;
        double best = -1.0;
        for (std::size_t j = k; j < k_cols; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < m; ++i) s += std::norm(r(i, j));
            if (s > best) {
                best = s;
                pivot = j;
            }
        }
        if (pivot != k) {
            std::swap(perm[k], perm[pivot]);
            for (std::size_t i = 0; i < m; ++i) std::swap(r(i, k), r(i, pivot));
        }

        const double xnorm = std::sqrt(best);
        if (k == 0) leading = xnorm;
        if (xnorm == 0.0 || xnorm < kRankThreshold * leading)
            throw RankDeficientError("least squares: numerical rank " + std::to_string(k) + " < " +
                                     std::to_string(k_cols));

        // Householder reflector mapping r(k:m, k) onto alpha * e1
        const cdouble x0 = r(k, k);
        const cdouble phase = std::abs(x0) == 0.0 ? cdouble(1.0) : x0 / std::abs(x0);
        const cdouble alpha = -phase * xnorm;
        CVector v(m - k);
        for (std::size_t i = k; i < m; ++i) v[i - k] = r(i, k);
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (const auto& z : v) vnorm2 += std::norm(z);

        if (vnorm2 > 0.0) {
            for (std::size_t j = k; j < k_cols; ++j) {
                cdouble dot{};
                for (std::size_t i = k; i < m; ++i) dot += std::conj(v[i - k]) * r(i, j);
                const cdouble f = 2.0 * dot / vnorm2;
                for (std::size_t i = k; i < m; ++i) r(i, j) -= f * v[i - k];
            }
            cdouble dot{};
            for (std::size_t i = k; i < m; ++i) dot += std::conj(v[i - k]) * rhs[i];
            const cdouble f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < m; ++i) rhs[i] -= f * v[i - k];
        }
        r(k, k) = alpha;
        for (std::size_t i = k + 1; i < m; ++i) r(i, k) = 0.0;
    }

    CVector z(k_cols);
    for (std::size_t i = k_cols; i-- > 0;) {
        cdouble s = rhs[i];
        for (std::size_t j = i + 1; j < k_cols; ++j) s -= r(i, j) * z[j];
        z[i] = s / r(i, i);
    }
    CVector c(k_cols);
    for (std::size_t j = 0; j < k_cols; ++j) c[perm[j]] = z[j];
    return c;
}

}  // namespace dgsp::la
