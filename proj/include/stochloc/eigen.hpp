#pragma once

// Dense eigenvalue oracle.
//
// eig_symmetric: cyclic Jacobi rotations.
// eig_general:   balancing, Householder reduction to upper Hessenberg form,
//                then Francis double-shift QR on the Hessenberg matrix.
//
// Both are desk-scale (n up to a few hundred) and allocate their own
// scratch copies, so concurrent calls are independent.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "stochloc/matrix.hpp"

namespace stochloc {

struct SolverConfig {
    /// Jacobi: sweep cap. Hessenberg QR: iteration cap per eigenvalue.
    std::size_t max_iterations = 100;
    /// Jacobi stops once the off-diagonal Frobenius norm is at most
    /// tolerance * ||A||_F. Hessenberg QR always deflates at machine
    /// precision.
    double tolerance = 1e-12;

    void validate() const {
        if (max_iterations < 1) throw Error(ErrorKind::InvalidArgument, "iteration cap must be >= 1");
        if (!(tolerance > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    }
};

namespace detail {

inline bool descending(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
}

struct SymmetricEigen {
    std::vector<double> values;
    /// Column j of vectors is the eigenvector for values[j].
    DenseMatrix vectors;
};

/// Jacobi eigen-decomposition, eigenpairs sorted by descending eigenvalue.
inline SymmetricEigen jacobi_eigen(const DenseMatrix& m, const SolverConfig& cfg) {
    cfg.validate();
    const std::size_t n = m.order();
    DenseMatrix a = m;
    DenseMatrix v = DenseMatrix::identity(n);

    double frob2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) frob2 += a(i, j) * a(i, j);
    const double target = cfg.tolerance * std::sqrt(frob2);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    std::size_t sweep = 0;
    while (off_norm() > target) {
        if (sweep++ >= cfg.max_iterations) throw NoConvergenceError(cfg.max_iterations);
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    SymmetricEigen out;
    out.values.reserve(n);
    out.vectors = DenseMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values.push_back(a(order[j], order[j]));
        for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
    }
    return out;
}

/// Diagonal similarity by powers of 2 that equalizes row and column norms.
inline void balance(DenseMatrix& a) {
    const std::size_t n = a.order();
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                for (std::size_t j = 0; j < n; ++j) a(i, j) /= f;
                for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

/// Householder reduction to upper Hessenberg form (entries below the first
/// subdiagonal are zeroed).
inline void to_hessenberg(DenseMatrix& a) {
    const std::size_t n = a.order();
    if (n < 3) return;
    std::vector<double> ort(n, 0.0);
    for (std::size_t m = 1; m + 1 < n; ++m) {
        double scale = 0.0;
        for (std::size_t i = m; i < n; ++i) scale += std::abs(a(i, m - 1));
        if (scale == 0.0) continue;

        double h = 0.0;
        for (std::size_t i = n; i-- > m;) {
            ort[i] = a(i, m - 1) / scale;
            h += ort[i] * ort[i];
        }
        const double g = ort[m] > 0.0 ? -std::sqrt(h) : std::sqrt(h);
        h -= ort[m] * g;
        ort[m] -= g;

        for (std::size_t j = m; j < n; ++j) {
            double f = 0.0;
            for (std::size_t i = n; i-- > m;) f += ort[i] * a(i, j);
            f /= h;
            for (std::size_t i = m; i < n; ++i) a(i, j) -= f * ort[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            double f = 0.0;
            for (std::size_t j = n; j-- > m;) f += ort[j] * a(i, j);
            f /= h;
            for (std::size_t j = m; j < n; ++j) a(i, j) -= f * ort[j];
        }
        a(m, m - 1) = scale * g;
        for (std::size_t i = m + 1; i < n; ++i) a(i, m - 1) = 0.0;
    }
}

/// Eigenvalues of an upper Hessenberg matrix by Francis double-shift QR.
/// The matrix is overwritten.
inline std::vector<Complex> hessenberg_qr(DenseMatrix& a, std::size_t max_its) {
    const int n = static_cast<int>(a.order());
    std::vector<Complex> w(a.order());
    const double eps = std::numeric_limits<double>::epsilon();
    auto sign = [](double mag, double s) { return s >= 0.0 ? std::abs(mag) : -std::abs(mag); };

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));

    int nn = n - 1;
    double t = 0.0;  // accumulated exceptional shifts
    std::size_t its = 0;
    while (nn >= 0) {
        int l = nn;
        for (; l > 0; --l) {
            double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
            if (s == 0.0) s = anorm;
            if (std::abs(a(l, l - 1)) <= eps * s) {
                a(l, l - 1) = 0.0;
                break;
            }
        }
        double x = a(nn, nn);
        if (l == nn) {
            w[nn--] = Complex(x + t, 0.0);
            its = 0;
            continue;
        }
        double y = a(nn - 1, nn - 1);
        double ww = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
            const double p = 0.5 * (y - x);
            const double q = p * p + ww;
            double z = std::sqrt(std::abs(q));
            x += t;
            if (q >= 0.0) {
                z = p + sign(z, p);
                w[nn - 1] = w[nn] = Complex(x + z, 0.0);
                if (z != 0.0) w[nn] = Complex(x - ww / z, 0.0);
            } else {
                w[nn - 1] = Complex(x + p, z);
                w[nn] = Complex(x + p, -z);
            }
            nn -= 2;
            its = 0;
            continue;
        }

        if (its >= max_its) throw NoConvergenceError(its);
        if (its > 0 && its % 10 == 0) {
            t += x;
            for (int i = 0; i <= nn; ++i) a(i, i) -= x;
            const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            x = y = 0.75 * s;
            ww = -0.4375 * s * s;
        }
        ++its;

        double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
        int m = nn - 2;
        for (; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            double s = y - z;
            p = (r * s - ww) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u <= eps * v) break;
        }
        for (int i = m; i < nn - 1; ++i) {
            a(i + 2, i) = 0.0;
            if (i != m) a(i + 2, i - 1) = 0.0;
        }
        for (int k = m; k < nn; ++k) {
            if (k != m) {
                p = a(k, k - 1);
                q = a(k + 1, k - 1);
                r = (k + 1 != nn) ? a(k + 2, k - 1) : 0.0;
                x = std::abs(p) + std::abs(q) + std::abs(r);
                if (x != 0.0) {
                    p /= x;
                    q /= x;
                    r /= x;
                }
            }
            const double s = sign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
            } else {
                a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
                p = a(k, j) + q * a(k + 1, j);
                if (k + 1 != nn) {
                    p += r * a(k + 2, j);
                    a(k + 2, j) -= p * z;
                }
                a(k + 1, j) -= p * y;
                a(k, j) -= p * x;
            }
            const int mmin = std::min(nn, k + 3);
            for (int i = l; i <= mmin; ++i) {
                p = x * a(i, k) + y * a(i, k + 1);
                if (k + 1 != nn) {
                    p += z * a(i, k + 2);
                    a(i, k + 2) -= p * r;
                }
                a(i, k + 1) -= p * q;
                a(i, k) -= p;
            }
        }
    }
    return w;
}

inline void require_symmetric(const DenseMatrix& m) {
    const double tol = 1e-12 * std::max(1.0, m.max_abs());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = i + 1; j < m.order(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol)
                throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric at (" +
                                                         std::to_string(i + 1) + ", " +
                                                         std::to_string(j + 1) + ")");
}

}  // namespace detail

/// Real spectrum of a symmetric matrix, sorted descending.
inline Spectrum eig_symmetric(const DenseMatrix& m, const SolverConfig& cfg = {}) {
    detail::require_symmetric(m);
    const auto eig = detail::jacobi_eigen(m, cfg);
    Spectrum s;
    s.values.reserve(eig.values.size());
    for (double v : eig.values) s.values.emplace_back(v, 0.0);
    return s;
}

/// Complex spectrum of a real matrix, sorted by descending real part, then
/// descending imaginary part. Complex eigenvalues come in exact conjugate
/// pairs.
inline Spectrum eig_general(const DenseMatrix& m, const SolverConfig& cfg = {}) {
    cfg.validate();
    if (!m.all_finite()) throw Error(ErrorKind::NonFinite, "matrix has a non-finite entry");
    DenseMatrix a = m;
    detail::balance(a);
    detail::to_hessenberg(a);
    Spectrum s;
    s.values = detail::hessenberg_qr(a, cfg.max_iterations);
    std::sort(s.values.begin(), s.values.end(), detail::descending);
    return s;
}

/// Copy of spec with perron_index pointing at the eigenvalue closest to 1,
/// provided it is within tol.
inline Spectrum mark_perron(Spectrum spec, double tol) {
    spec.perron_index.reset();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        const double d = std::abs(spec.values[i] - Complex(1.0, 0.0));
        if (d <= tol && d < best) {
            best = d;
            spec.perron_index = i;
        }
    }
    return spec;
}

/// Removes the single eigenvalue closest to 1. Throws PerronNotFound when
/// none lies within tol; sets repeated_perron when several do.
inline Spectrum non_perron(const Spectrum& spec, double tol) {
    const Spectrum marked = mark_perron(spec, tol);
    if (!marked.perron_index)
        throw Error(ErrorKind::PerronNotFound, "no eigenvalue within tolerance of 1");
    Spectrum out;
    std::size_t near_one = 0;
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        if (std::abs(spec.values[i] - Complex(1.0, 0.0)) <= tol) ++near_one;
        if (i != *marked.perron_index) out.values.push_back(spec.values[i]);
    }
    out.repeated_perron = near_one > 1;
    return out;
}

/// Largest pair distance under greedy minimal-distance matching of two
/// multisets; infinity when the sizes differ.
inline double spectral_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    struct Pair {
        double d;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    pairs.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) pairs.push_back({std::abs(a[i] - b[j]), i, j});
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        if (x.d != y.d) return x.d < y.d;
        return x.i != y.i ? x.i < y.i : x.j < y.j;
    });
    std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
    double worst = 0.0;
    for (const auto& p : pairs) {
        if (used_a[p.i] || used_b[p.j]) continue;
        used_a[p.i] = used_b[p.j] = true;
        worst = std::max(worst, p.d);
    }
    return worst;
}

}  // namespace stochloc
