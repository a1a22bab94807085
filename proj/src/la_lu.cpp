#include <cmath>
#include <numeric>

#include "dgsp/densela.hpp"
#include "dgsp/errors.hpp"

namespace dgsp::la {

LuFactorization::LuFactorization(const CMatrix& a) : lu_(a), perm_(a.rows()) {
    if (!a.square()) throw DimensionError("LU factorization requires a square matrix");
    const std::size_t n = a.rows();
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    const double floor = 1e-14 * frobenius_norm(a);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best <= floor)
            throw SingularMatrixError("matrix is singular to working precision (pivot " + std::to_string(k) + ")");
        if (pivot != k) {
            std::swap(perm_[k], perm_[pivot]);
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(pivot, j));
        }
        const cdouble diag = lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cdouble factor = lu_(i, k) / diag;
            lu_(i, k) = factor;
            if (factor == cdouble{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
        }
    }
}

CMatrix LuFactorization::solve(const CMatrix& b) const {
    const std::size_t n = size();
    if (b.rows() != n) throw DimensionError("LU solve: right-hand side has wrong row count");
    CMatrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = b(perm_[i], j);

    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 1; i < n; ++i) {
            cdouble s = x(i, c);
            for (std::size_t k = 0; k < i; ++k) s -= lu_(i, k) * x(k, c);
            x(i, c) = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            cdouble s = x(i, c);
            for (std::size_t k = i + 1; k < n; ++k) s -= lu_(i, k) * x(k, c);
            x(i, c) = s / lu_(i, i);
        }
    }
    return x;
}

CVector LuFactorization::solve(const CVector& b) const {
    CMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    return solve(rhs).column(0);
}

CMatrix LuFactorization::solve_transposed(const CMatrix& b) const {
    // A^T = U^T L^T P
    const std::size_t n = size();
    if (b.rows() != n) throw DimensionError("LU solve: right-hand side has wrong row count");
    CMatrix w = b;
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            cdouble s = w(i, c);
            for (std::size_t k = 0; k < i; ++k) s -= lu_(k, i) * w(k, c);
            w(i, c) = s / lu_(i, i);
        }
        for (std::size_t i = n; i-- > 0;) {
            cdouble s = w(i, c);
            for (std::size_t k = i + 1; k < n; ++k) s -= lu_(k, i) * w(k, c);
            w(i, c) = s;
        }
    }
    CMatrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(perm_[i], j) = w(i, j);
    return x;
}

CMatrix lu_solve(const CMatrix& a, const CMatrix& b) { return LuFactorization(a).solve(b); }

CMatrix dual_basis(const CMatrix& v) {
    CMatrix u = LuFactorization(transpose(v)).solve(CMatrix::identity(v.rows()));
    for (auto& z : u.data()) z = std::conj(z);
    return u;
}

CMatrix dual_basis(const EigenSystem& e) { return dual_basis(e.vectors); }

}  // namespace dgsp::la
