#pragma once

#include "curvop/curvature_tensor.hpp"
#include "curvop/frame.hpp"

#include <vector>

namespace curvop {

// Lie brackets of the (non-orthonormal) frame X_1..X_{2n-2}, X_{2n-1} = d/dtheta,
// X_{2n} = d/dr: [X_a, X_b] = sum_c coeff(a, b, c) X_c. Only holomorphic pairs
// of horizontal fields have a nonzero bracket, [X_i, X_{i+1}] = c_i d/dtheta.
class BracketTable {
public:
    explicit BracketTable(int dim) : dim_(dim), coeff_(static_cast<std::size_t>(dim * dim * dim), 0.0) {}

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] double operator()(int a, int b, int c) const { return coeff_[slot(a, b, c)]; }
    void set_antisymmetric(int a, int b, int c, double value) {
        coeff_[slot(a, b, c)] = value;
        coeff_[slot(b, a, c)] = -value;
    }

private:
    [[nodiscard]] std::size_t slot(int a, int b, int c) const {
        return static_cast<std::size_t>(((a - 1) * dim_ + (b - 1)) * dim_ + (c - 1));
    }

    int dim_;
    std::vector<double> coeff_;
};

[[nodiscard]] BracketTable bracket_table(const ModelPoint& point);

// Value and r-derivative of a radial function.
struct Dual {
    double value = 0.0;
    double slope = 0.0;
};

// Levi-Civita connection of the warped metric in the X-frame:
// nabla_{X_a} X_b = sum_c gamma(a, b, c) X_c, each coefficient with its r-derivative.
// The frame is orthogonal with <X_a, X_a> = metric(a).
class ConnectionCoefficients {
public:
    ConnectionCoefficients(int dim, std::vector<Jet2> metric, std::vector<Dual> gamma)
        : dim_(dim), metric_(std::move(metric)), gamma_(std::move(gamma)) {}

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] Dual metric(int a) const {
        const Jet2& g = metric_[static_cast<std::size_t>(a - 1)];
        return {g.v, g.d1};
    }
    // X_a <X_b, X_c> with its r-derivative; nonzero only for a = dim, b = c.
    [[nodiscard]] Dual metric_derivative(int a, int b, int c) const {
        if (a != dim_ || b != c) return {};
        const Jet2& g = metric_[static_cast<std::size_t>(b - 1)];
        return {g.d1, g.d2};
    }
    [[nodiscard]] const Dual& gamma(int a, int b, int c) const {
        return gamma_[static_cast<std::size_t>(((a - 1) * dim_ + (b - 1)) * dim_ + (c - 1))];
    }

    // max |gamma(a,b,c) - gamma(b,a,c) - [X_a, X_b]^c|, each term divided by
    // max(1, largest magnitude involved). X-frame coefficients grow like e^{2r}.
    [[nodiscard]] double torsion_residual(const BracketTable& brackets) const;
    // max |X_a <X_b, X_c> - <nabla_a X_b, X_c> - <X_b, nabla_a X_c>|, both for the
    // values and for their r-derivatives, scaled like torsion_residual.
    [[nodiscard]] double metric_residual() const;

private:
    int dim_;
    std::vector<Jet2> metric_;
    std::vector<Dual> gamma_;
};

[[nodiscard]] ConnectionCoefficients connection(const ModelPoint& point);

// Curvature rebuilt from the connection, R(X,Y)Z = nabla_X nabla_Y Z -
// nabla_Y nabla_X Z - nabla_[X,Y] Z, plus the lifted curvature of the
// holomorphic-curvature -4 base divided by h^2, normalized to the Y-frame.
// The overall sign is pinned so that K(Y_1, Y_2) = -4 for c = 2.
[[nodiscard]] CurvatureTensor oracle_tensor(const ModelPoint& point);

// +1 or -1: factor taking the textbook <R(X,Y)Z,W> to the convention used by
// CurvatureTensor (R_ijij = sectional curvature).
[[nodiscard]] double oracle_sign();

struct TensorComparison {
    double max_abs_diff = 0.0;
    TensorIndex worst;
};

// Exhaustive over canonical tuples. Throws DomainError on a dimension mismatch.
[[nodiscard]] TensorComparison compare_tensors(const CurvatureTensor& a, const CurvatureTensor& b);

}  // namespace curvop
