#include <algorithm>
#include <cmath>
#include <limits>

#include "dgsp/densela.hpp"
#include "dgsp/errors.hpp"
#include "dgsp/frequency_order.hpp"

namespace dgsp::la {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

cdouble cdiv(double xr, double xi, double yr, double yi) { return cdouble(xr, xi) / cdouble(yr, yi); }

// Eigenvectors of the quasi-triangular T by back-substitution, rotated by Q.
// A complex pair (a + ib, a - ib) at columns (j, j+1) yields x for a + ib in
// column j and conj(x) in column j+1.
CMatrix schur_eigenvectors(const RealSchur& schur) {
    const std::size_t nn = schur.t.rows();
    RMatrix h = schur.t;
    RVector d(nn), e(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        d[i] = schur.values[i].real();
        e[i] = schur.values[i].imag();
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = (i == 0 ? 0 : i - 1); j < nn; ++j) norm += std::abs(h(i, j));

    CMatrix vectors(nn, nn);
    if (norm == 0.0) {
        // zero matrix: the canonical basis
        for (std::size_t i = 0; i < nn; ++i) vectors(i, i) = 1.0;
        return vectors;
    }

    for (std::ptrdiff_t n = static_cast<std::ptrdiff_t>(nn) - 1; n >= 0; --n) {
        const double p = d[n];
        const double q = e[n];
        if (q == 0.0) {
            std::ptrdiff_t l = n;
            h(n, n) = 1.0;
            double z = 0.0, s = 0.0;
            for (std::ptrdiff_t i = n - 1; i >= 0; --i) {
                const double w = h(i, i) - p;
                double r = 0.0;
                for (std::ptrdiff_t j = l; j <= n; ++j) r += h(i, j) * h(j, n);
                if (e[i] < 0.0) {
                    z = w;
                    s = r;
                    continue;
                }
                l = i;
                if (e[i] == 0.0) {
                    h(i, n) = w != 0.0 ? -r / w : -r / (kEps * norm);
                } else {
                    const double x = h(i, i + 1);
                    const double y = h(i + 1, i);
                    const double qq = (d[i] - p) * (d[i] - p) + e[i] * e[i];
                    const double t = (x * s - z * r) / qq;
                    h(i, n) = t;
                    h(i + 1, n) = std::abs(x) > std::abs(z) ? (-r - w * t) / x : (-s - y * t) / z;
                }
                const double t = std::abs(h(i, n));
                if ((kEps * t) * t > 1.0)
                    for (std::ptrdiff_t j = i; j <= n; ++j) h(j, n) /= t;
            }
        } else if (q < 0.0) {
            // second member of a pair; columns n-1 and n receive real and imaginary parts
            std::ptrdiff_t l = n - 1;
            if (std::abs(h(n, n - 1)) > std::abs(h(n - 1, n))) {
                h(n - 1, n - 1) = q / h(n, n - 1);
                h(n - 1, n) = -(h(n, n) - p) / h(n, n - 1);
            } else {
                const cdouble c = cdiv(0.0, -h(n - 1, n), h(n - 1, n - 1) - p, q);
                h(n - 1, n - 1) = c.real();
                h(n - 1, n) = c.imag();
            }
            h(n, n - 1) = 0.0;
            h(n, n) = 1.0;
            double z = 0.0, r = 0.0, s = 0.0;
            for (std::ptrdiff_t i = n - 2; i >= 0; --i) {
                double ra = 0.0, sa = 0.0;
                for (std::ptrdiff_t j = l; j <= n; ++j) {
                    ra += h(i, j) * h(j, n - 1);
                    sa += h(i, j) * h(j, n);
                }
                const double w = h(i, i) - p;
                if (e[i] < 0.0) {
                    z = w;
                    r = ra;
                    s = sa;
                    continue;
                }
                l = i;
                if (e[i] == 0.0) {
                    const cdouble c = cdiv(-ra, -sa, w, q);
                    h(i, n - 1) = c.real();
                    h(i, n) = c.imag();
                } else {
                    const double x = h(i, i + 1);
                    const double y = h(i + 1, i);
                    double vr = (d[i] - p) * (d[i] - p) + e[i] * e[i] - q * q;
                    const double vi = (d[i] - p) * 2.0 * q;
                    if (vr == 0.0 && vi == 0.0)
                        vr = kEps * norm * (std::abs(w) + std::abs(q) + std::abs(x) + std::abs(y) + std::abs(z));
                    const cdouble c = cdiv(x * r - z * ra + q * sa, x * s - z * sa - q * ra, vr, vi);
                    h(i, n - 1) = c.real();
                    h(i, n) = c.imag();
                    if (std::abs(x) > std::abs(z) + std::abs(q)) {
                        h(i + 1, n - 1) = (-ra - w * h(i, n - 1) + q * h(i, n)) / x;
                        h(i + 1, n) = (-sa - w * h(i, n) - q * h(i, n - 1)) / x;
                    } else {
                        const cdouble c2 = cdiv(-r - y * h(i, n - 1), -s - y * h(i, n), z, q);
                        h(i + 1, n - 1) = c2.real();
                        h(i + 1, n) = c2.imag();
                    }
                }
                const double t = std::max(std::abs(h(i, n - 1)), std::abs(h(i, n)));
                if ((kEps * t) * t > 1.0)
                    for (std::ptrdiff_t j = i; j <= n; ++j) {
                        h(j, n - 1) /= t;
                        h(j, n) /= t;
                    }
            }
        }
    }

    // back-transform: X = Q * (upper triangle of h)
    RMatrix x(nn, nn);
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k <= j; ++k) s += schur.q(i, k) * h(k, j);
            x(i, j) = s;
        }

    for (std::size_t j = 0; j < nn; ++j) {
        if (e[j] == 0.0) {
            for (std::size_t i = 0; i < nn; ++i) vectors(i, j) = x(i, j);
        } else if (e[j] > 0.0) {
            // columns (j, j+1) hold re/im of the vector for d + i|e|
            for (std::size_t i = 0; i < nn; ++i) {
                const cdouble v(x(i, j), x(i, j + 1));
                vectors(i, j) = v;
                vectors(i, j + 1) = std::conj(v);
            }
            ++j;
        }
    }
    return vectors;
}

}  // namespace

void hessenberg(const RMatrix& a, RMatrix& h, RMatrix& q) {
    if (!a.square()) throw DimensionError("hessenberg requires a square matrix");
    const std::size_t n = a.rows();
    h = a;
    q = RMatrix::identity(n);
    if (n < 3) return;
    const std::size_t high = n - 1;
    RVector ort(n, 0.0);

    for (std::size_t m = 1; m + 1 <= high; ++m) {
        double scale = 0.0;
        for (std::size_t i = m; i <= high; ++i) scale += std::abs(h(i, m - 1));
        if (scale == 0.0) continue;
        double hh = 0.0;
        for (std::size_t i = high + 1; i-- > m;) {
            ort[i] = h(i, m - 1) / scale;
            hh += ort[i] * ort[i];
        }
        double g = std::sqrt(hh);
        if (ort[m] > 0) g = -g;
        hh -= ort[m] * g;
        ort[m] -= g;

        for (std::size_t j = m; j < n; ++j) {
            double f = 0.0;
            for (std::size_t i = high + 1; i-- > m;) f += ort[i] * h(i, j);
            f /= hh;
            for (std::size_t i = m; i <= high; ++i) h(i, j) -= f * ort[i];
        }
        for (std::size_t i = 0; i <= high; ++i) {
            double f = 0.0;
            for (std::size_t j = high + 1; j-- > m;) f += ort[j] * h(i, j);
            f /= hh;
            for (std::size_t j = m; j <= high; ++j) h(i, j) -= f * ort[j];
        }
        ort[m] *= scale;
        h(m, m - 1) = scale * g;
    }

    for (std::size_t m = high - 1; m >= 1; --m) {
        if (h(m, m - 1) != 0.0) {
            for (std::size_t i = m + 1; i <= high; ++i) ort[i] = h(i, m - 1);
            for (std::size_t j = m; j <= high; ++j) {
                double g = 0.0;
                for (std::size_t i = m; i <= high; ++i) g += ort[i] * q(i, j);
                g = (g / ort[m]) / h(m, m - 1);
                for (std::size_t i = m; i <= high; ++i) q(i, j) += g * ort[i];
            }
        }
        if (m == 1) break;
    }
    for (std::size_t i = 2; i < n; ++i)
        for (std::size_t j = 0; j + 1 < i; ++j) h(i, j) = 0.0;
}

RealSchur real_schur(const RMatrix& a) {
    RealSchur out;
    hessenberg(a, out.t, out.q);
    RMatrix& h = out.t;
    RMatrix& v = out.q;
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(a.rows());
    out.values.assign(nn, cdouble{});
    if (nn == 0) return out;

    const std::size_t max_iterations = 30 * static_cast<std::size_t>(nn);
    const std::ptrdiff_t low = 0;
    std::ptrdiff_t n = nn - 1;
    double exshift = 0.0;
    double p = 0, q = 0, r = 0, s = 0, z = 0, w, x, y;

    double norm = 0.0;
    for (std::ptrdiff_t i = 0; i < nn; ++i)
        for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(i - 1, 0); j < nn; ++j) norm += std::abs(h(i, j));

    int iter = 0;
    while (n >= low) {
        // find a negligible subdiagonal entry
        std::ptrdiff_t l = n;
        while (l > low) {
            s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (s == 0.0) s = norm;
            if (std::abs(h(l, l - 1)) <= kEps * s) break;
            --l;
        }
        if (l > low) h(l, l - 1) = 0.0;

        if (l == n) {
            h(n, n) += exshift;
            out.values[n] = h(n, n);
            --n;
            iter = 0;
        } else if (l == n - 1) {
            w = h(n, n - 1) * h(n - 1, n);
            p = (h(n - 1, n - 1) - h(n, n)) / 2.0;
            q = p * p + w;
            z = std::sqrt(std::abs(q));
            h(n, n) += exshift;
            h(n - 1, n - 1) += exshift;
            x = h(n, n);
            if (q >= 0) {
                // real pair: rotate the block to upper triangular form
                z = p >= 0 ? p + z : p - z;
                double lo = x + z;
                double hi = lo;
                if (z != 0.0) hi = x - w / z;
                x = h(n, n - 1);
                s = std::abs(x) + std::abs(z);
                p = x / s;
                q = z / s;
                r = std::sqrt(p * p + q * q);
                p /= r;
                q /= r;
                for (std::ptrdiff_t j = n - 1; j < nn; ++j) {
                    z = h(n - 1, j);
                    h(n - 1, j) = q * z + p * h(n, j);
                    h(n, j) = q * h(n, j) - p * z;
                }
                for (std::ptrdiff_t i = 0; i <= n; ++i) {
                    z = h(i, n - 1);
                    h(i, n - 1) = q * z + p * h(i, n);
                    h(i, n) = q * h(i, n) - p * z;
                }
                for (std::ptrdiff_t i = 0; i < nn; ++i) {
                    z = v(i, n - 1);
                    v(i, n - 1) = q * z + p * v(i, n);
                    v(i, n) = q * v(i, n) - p * z;
                }
                h(n, n - 1) = 0.0;
                out.values[n - 1] = lo;
                out.values[n] = hi;
            } else {
                out.values[n - 1] = cdouble(x + p, z);
                out.values[n] = cdouble(x + p, -z);
            }
            n -= 2;
            iter = 0;
        } else {
            if (++out.iterations > max_iterations)
                throw ConvergenceError("QR iteration did not converge within " + std::to_string(max_iterations) +
                                       " iterations");
            x = h(n, n);
            y = 0.0;
            w = 0.0;
            if (l < n) {
                y = h(n - 1, n - 1);
                w = h(n, n - 1) * h(n - 1, n);
            }
            // exceptional shifts
            if (iter == 10) {
                exshift += x;
                for (std::ptrdiff_t i = low; i <= n; ++i) h(i, i) -= x;
                s = std::abs(h(n, n - 1)) + std::abs(h(n - 1, n - 2));
                x = y = 0.75 * s;
                w = -0.4375 * s * s;
            }
            if (iter == 30) {
                s = (y - x) / 2.0;
                s = s * s + w;
                if (s > 0) {
                    s = std::sqrt(s);
                    if (y < x) s = -s;
                    s = x - w / ((y - x) / 2.0 + s);
                    for (std::ptrdiff_t i = low; i <= n; ++i) h(i, i) -= s;
                    exshift += s;
                    x = y = w = 0.964;
                }
            }
            ++iter;

            // look for two consecutive small subdiagonal entries
            std::ptrdiff_t m = n - 2;
            while (m >= l) {
                z = h(m, m);
                r = x - z;
                s = y - z;
                p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
                q = h(m + 1, m + 1) - z - r - s;
                r = h(m + 2, m + 1);
                s = std::abs(p) + std::abs(q) + std::abs(r);
                p /= s;
                q /= s;
                r /= s;
                if (m == l) break;
                if (std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r)) <
                    kEps * (std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) + std::abs(h(m + 1, m + 1)))))
                    break;
                --m;
            }
            for (std::ptrdiff_t i = m + 2; i <= n; ++i) {
                h(i, i - 2) = 0.0;
                if (i > m + 2) h(i, i - 3) = 0.0;
            }

            // double-shift QR sweep on rows l..n, columns m..n
            for (std::ptrdiff_t k = m; k <= n - 1; ++k) {
                const bool notlast = k != n - 1;
                if (k != m) {
                    p = h(k, k - 1);
                    q = h(k + 1, k - 1);
                    r = notlast ? h(k + 2, k - 1) : 0.0;
                    x = std::abs(p) + std::abs(q) + std::abs(r);
                    if (x == 0.0) continue;
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = std::sqrt(p * p + q * q + r * r);
                if (p < 0) s = -s;
                if (s == 0.0) continue;
                if (k != m)
                    h(k, k - 1) = -s * x;
                else if (l != m)
                    h(k, k - 1) = -h(k, k - 1);
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;
                for (std::ptrdiff_t j = k; j < nn; ++j) {
                    p = h(k, j) + q * h(k + 1, j);
                    if (notlast) {
                        p += r * h(k + 2, j);
                        h(k + 2, j) -= p * z;
                    }
                    h(k, j) -= p * x;
                    h(k + 1, j) -= p * y;
                }
                for (std::ptrdiff_t i = 0; i <= std::min(n, k + 3); ++i) {
                    p = x * h(i, k) + y * h(i, k + 1);
                    if (notlast) {
                        p += z * h(i, k + 2);
                        h(i, k + 2) -= p * r;
                    }
                    h(i, k) -= p;
                    h(i, k + 1) -= p * q;
                }
                for (std::ptrdiff_t i = 0; i < nn; ++i) {
                    p = x * v(i, k) + y * v(i, k + 1);
                    if (notlast) {
                        p += z * v(i, k + 2);
                        v(i, k + 2) -= p * r;
                    }
                    v(i, k) -= p;
                    v(i, k + 1) -= p * q;
                }
            }
        }
    }
    // the sweeps leave stale bulge entries below the subdiagonal; they are structurally zero
    for (std::ptrdiff_t i = 2; i < nn; ++i)
        for (std::ptrdiff_t j = 0; j + 1 < i; ++j) h(i, j) = 0.0;
    return out;
}

void normalize_columns(CMatrix& v) {
    for (std::size_t j = 0; j < v.cols(); ++j) {
        double norm2 = 0.0;
        double largest = 0.0;
        for (std::size_t i = 0; i < v.rows(); ++i) {
            norm2 += std::norm(v(i, j));
            largest = std::max(largest, std::abs(v(i, j)));
        }
        if (norm2 == 0.0) continue;
        std::size_t anchor = 0;
        for (std::size_t i = 0; i < v.rows(); ++i)
            if (std::abs(v(i, j)) >= largest * (1.0 - 1e-12)) {
                anchor = i;
                break;
            }
        const cdouble a = v(anchor, j);
        const cdouble factor = std::conj(a) / (std::abs(a) * std::sqrt(norm2));
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) *= factor;
        v(anchor, j) = cdouble(std::abs(v(anchor, j)), 0.0);
    }
}

EigenSystem eig(const RMatrix& a, const EigOptions& options) {
    if (!a.square()) throw DimensionError("eig requires a square matrix");
    for (double x : a.data())
        if (!std::isfinite(x)) throw InvalidArgumentError("eig: non-finite entry");
    const std::size_t n = a.rows();

    RVector scale(n, 1.0);
    RMatrix work = a;
    if (options.balance) {
        auto b = balance(a);
        scale = std::move(b.scale);
        work = std::move(b.balanced);
    }

    const RealSchur schur = real_schur(work);
    CMatrix raw = schur_eigenvectors(schur);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) raw(i, j) *= scale[i];
    normalize_columns(raw);

    const FrequencyOrder order = frequency_order(schur.values);
    EigenSystem es;
    es.values.resize(n);
    es.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = schur.values[order[k]];
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = raw(i, order[k]);
    }

    if (n > 0) {
        const RVector sigma = svd_values(es.vectors);
        es.sigma_max = sigma.front();
        es.sigma_min = sigma.back();
        es.kappa = es.sigma_max / es.sigma_min;
    }

    double res2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            cdouble s{};
            for (std::size_t j = 0; j < n; ++j) s += a(i, j) * es.vectors(j, k);
            res2 += std::norm(s - es.vectors(i, k) * es.values[k]);
        }
    const double anorm = frobenius_norm(a);
    es.residual = std::sqrt(res2) / (anorm > 0.0 ? anorm : 1.0);

    if (!(es.residual <= options.eig_tol) && !options.accept_near_defective)
        throw NearDefectiveError(es.kappa, es.residual);
    return es;
}

}  // namespace dgsp::la
