#include <cmath>

#include "dgsp/densela.hpp"
#include "dgsp/errors.hpp"

namespace dgsp::la {

namespace {

constexpr double kRadix = 2.0;
constexpr double kRadixSq = kRadix * kRadix;
constexpr int kMaxPasses = 1000;

}  // namespace

Balanced balance(const RMatrix& a) {
    if (!a.square()) throw DimensionError("balance requires a square matrix");
    const std::size_t n = a.rows();
    Balanced out{RVector(n, 1.0), a};
    RMatrix& b = out.balanced;

    // Osborne iteration on off-diagonal 1-norms; every factor is a power of
    // two, so the similarity D^-1 A D is exact in floating point.
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            double c = 0.0;
            double r = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(b(j, i));
                r += std::abs(b(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            double g = r / kRadix;
            while (c < g) {
                f *= kRadix;
                c *= kRadixSq;
            }
            g = r * kRadix;
            while (c >= g) {
                f /= kRadix;
                c /= kRadixSq;
            }
            if ((c + r) / f < 0.95 * s) {
                changed = true;
                out.scale[i] *= f;
                const double inv = 1.0 / f;
                for (std::size_t j = 0; j < n; ++j) b(i, j) *= inv;
                for (std::size_t j = 0; j < n; ++j) b(j, i) *= f;
            }
        }
        if (!changed) break;
    }
    return out;
}

}  // namespace dgsp::la
