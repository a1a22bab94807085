#pragma once

#include <vector>

#include "dgsp/matrix.hpp"

// Dense linear algebra kernel: LU, pivoted QR least squares, singular values,
// Osborne balancing and the real non-symmetric eigensolver.
namespace dgsp::la {

/// LU factorization with partial pivoting, PA = LU.
class LuFactorization {
public:
    /// Throws SingularMatrixError when a pivot falls below 1e-14 * ||A||_F.
    explicit LuFactorization(const CMatrix& a);

    std::size_t size() const noexcept { return lu_.rows(); }

    CMatrix solve(const CMatrix& b) const;
    CVector solve(const CVector& b) const;

    /// Solves A^T X = B with the same factors.
    CMatrix solve_transposed(const CMatrix& b) const;

private:
    CMatrix lu_;
    std::vector<std::size_t> perm_;
};

CMatrix lu_solve(const CMatrix& a, const CMatrix& b);

/// Non-increasing singular values (one-sided Jacobi). Length min(rows, cols).
RVector svd_values(const CMatrix& a);
RVector svd_values(const RMatrix& a);

/// Minimizer of ||Bc - y||_2 by Householder QR with column pivoting.
/// Throws RankDeficientError when |R_kk| / |R_00| < 1e-10 for some k.
CVector least_squares(const CMatrix& b, const CVector& y);

struct Balanced {
    RVector scale;     // D, powers of two
    RMatrix balanced;  // D^-1 A D
};

/// Osborne balancing with power-of-two scale factors (no permutations).
Balanced balance(const RMatrix& a);

struct EigOptions {
    bool balance = false;
    double eig_tol = 1e-9;
    /// Return a decomposition even when residual > eig_tol.
    bool accept_near_defective = false;
};

struct EigenSystem {
    CVector values;   // frequency ordered
    CMatrix vectors;  // unit-norm columns, largest-modulus entry real positive
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double kappa = 0.0;
    double residual = 0.0;  // ||AV - V Lambda||_F / ||A||_F

    std::size_t size() const noexcept { return values.size(); }
};

/// Right eigensystem of a real square matrix: optional balancing, Householder
/// Hessenberg reduction, Francis double-shift QR to real Schur form, and
/// back-substitution for eigenvectors. Eigenpairs come back in frequency order.
EigenSystem eig(const RMatrix& a, const EigOptions& options = {});

/// Quasi-triangular real Schur form A = Q T Q^T. Complex pairs occupy 2x2
/// diagonal blocks and are listed as (a + ib, a - ib) with b > 0.
struct RealSchur {
    RMatrix t;
    RMatrix q;
    CVector values;  // diagonal order of T
    std::size_t iterations = 0;
};

/// Householder reduction to upper Hessenberg form: A = Q H Q^T.
void hessenberg(const RMatrix& a, RMatrix& h, RMatrix& q);

/// Hessenberg reduction followed by Francis double-shift QR with accumulated Q.
/// Throws ConvergenceError after 30n iterations.
RealSchur real_schur(const RMatrix& a);

/// U = (V^-1)^*, from an LU solve of V^T X = I.
CMatrix dual_basis(const EigenSystem& e);
CMatrix dual_basis(const CMatrix& v);

/// Column j scaled to unit norm and its largest-modulus entry (lowest index
/// within a relative 1e-12 window) rotated to the positive real axis.
void normalize_columns(CMatrix& v);

}  // namespace dgsp::la
