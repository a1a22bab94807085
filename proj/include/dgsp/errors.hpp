#pragma once

#include <stdexcept>
#include <string>

namespace dgsp {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph construction / ingestion
class IndexOutOfRangeError : public Error { using Error::Error; };
class SelfLoopError : public Error { using Error::Error; };
class DuplicateEdgeError : public Error { using Error::Error; };
class InvalidWeightError : public Error { using Error::Error; };
class InvalidArgumentError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

// numerical kernel
class DimensionError : public Error { using Error::Error; };
class SingularMatrixError : public Error { using Error::Error; };
class RankDeficientError : public Error { using Error::Error; };
class ConvergenceError : public Error { using Error::Error; };
class ConsistencyError : public Error { using Error::Error; };

/// Eigendecomposition whose residual exceeds the configured tolerance.
class NearDefectiveError : public Error {
public:
    NearDefectiveError(double kappa, double residual)
        : Error("near-defective eigendecomposition: kappa=" + std::to_string(kappa) +
                " residual=" + std::to_string(residual)),
          kappa_(kappa),
          residual_(residual) {}

    double kappa() const noexcept { return kappa_; }
    double residual() const noexcept { return residual_; }

private:
    double kappa_;
    double residual_;
};

/// sigma_min(V) is below the numerical floor, so kappa(V) is meaningless.
class NumericallyDefectiveError : public Error { using Error::Error; };

/// Sampling plan without full column rank.
class UnrecoverableError : public Error { using Error::Error; };

}  // namespace dgsp
