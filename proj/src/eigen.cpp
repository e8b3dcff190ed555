#include "curvop/eigen.hpp"

#include "curvop/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace curvop {

EigenDecomposition eigen_sym(const SymmetricMatrix& matrix, double tol) {
    if (!(tol > 0.0 && tol <= 1e-6)) throw DomainError("eigen_sym tolerance must lie in (0, 1e-6]");

    const std::size_t m = matrix.order();
    std::vector<double> a(m * m), v(m * m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) a[r * m + c] = matrix(r, c);
        v[r * m + r] = 1.0;
    }
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * m + c]; };

    const double scale = matrix.frobenius_norm();
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                if (r != c) s += at(r, c) * at(r, c);
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_norm() > tol * scale) {
        if (++sweep > kMaxSweeps) throw NumericError("Jacobi eigensolver did not converge in 100 sweeps");
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                // Symmetric Schur rotation zeroing (p, q).
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = at(q, p) = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    const double vkp = v[k * m + p], vkq = v[k * m + q];
                    v[k * m + p] = c * vkp - s * vkq;
                    v[k * m + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return at(x, x) < at(y, y); });

    EigenDecomposition out;
    out.order = m;
    out.sweeps = sweep;
    out.eigenvalues.resize(m);
    out.vectors.resize(m * m);
    for (std::size_t k = 0; k < m; ++k) {
        out.eigenvalues[k] = at(order[k], order[k]);
        for (std::size_t r = 0; r < m; ++r) out.vectors[k * m + r] = v[r * m + order[k]];
    }

    for (std::size_t k = 0; k < m; ++k) {
        const auto vec = out.vector(k);
        double norm2 = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            double av = 0.0;
            for (std::size_t c = 0; c < m; ++c) av += matrix(r, c) * vec[c];
            const double d = av - out.eigenvalues[k] * vec[r];
            norm2 += d * d;
        }
        out.residual = std::max(out.residual, std::sqrt(norm2));
    }
    return out;
}

Spectrum cluster_spectrum(std::span<const double> values, double cluster_tol) {
    Spectrum spectrum;
    if (values.empty()) return spectrum;
    if (!std::is_sorted(values.begin(), values.end())) throw DomainError("cluster_spectrum expects sorted input");

    double sum = values[0];
    int count = 1;
    for (std::size_t k = 1; k < values.size(); ++k) {
        const double prev = values[k - 1];
        if (values[k] - prev <= cluster_tol * std::max(1.0, std::abs(values[k]))) {
            sum += values[k];
            ++count;
        } else {
            spectrum.entries.push_back({sum / count, count});
            sum = values[k];
            count = 1;
        }
    }
    spectrum.entries.push_back({sum / count, count});
    return spectrum;
}

}  // namespace curvop
