#pragma once

#include "curvop/symmetric_matrix.hpp"

#include <span>
#include <vector>

namespace curvop {

inline constexpr double kDefaultEigenTol = 1e-13;
inline constexpr double kDefaultClusterTol = 1e-6;

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    std::vector<double> vectors;      // column k (stride order) belongs to eigenvalues[k]
    std::size_t order = 0;
    double residual = 0.0;            // max_k |A v_k - lambda_k v_k|
    int sweeps = 0;

    [[nodiscard]] std::span<const double> vector(std::size_t k) const {
        return {vectors.data() + k * order, order};
    }
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
// tol * |A|_F. Requires 0 < tol <= 1e-6 (DomainError otherwise); throws
// NumericError after 100 sweeps without convergence.
[[nodiscard]] EigenDecomposition eigen_sym(const SymmetricMatrix& matrix, double tol = kDefaultEigenTol);

struct SpectrumEntry {
    double value = 0.0;
    int multiplicity = 0;
};

struct Spectrum {
    std::vector<SpectrumEntry> entries;

    [[nodiscard]] int total_multiplicity() const {
        int s = 0;
        for (const auto& e : entries) s += e.multiplicity;
        return s;
    }
};

// Greedy clustering of ascending values: a value joins the current cluster if
// it lies within cluster_tol * max(1, |value|) of the previous one. The cluster
// representative is its mean. Throws DomainError on unsorted input.
[[nodiscard]] Spectrum cluster_spectrum(std::span<const double> sorted_eigenvalues,
                                        double cluster_tol = kDefaultClusterTol);

}  // namespace curvop
