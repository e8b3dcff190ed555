#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace curvop {

// Dense real symmetric matrix; only the upper triangle is stored, so symmetry
// holds by construction.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t order) : order_(order), upper_(order * (order + 1) / 2, 0.0) {}

    static SymmetricMatrix identity(std::size_t order) {
        SymmetricMatrix m(order);
        for (std::size_t i = 0; i < order; ++i) m.set(i, i, 1.0);
        return m;
    }

    [[nodiscard]] std::size_t order() const { return order_; }
    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const { return upper_[slot(r, c)]; }
    void set(std::size_t r, std::size_t c, double value) { upper_[slot(r, c)] = value; }

    [[nodiscard]] double frobenius_norm() const {
        double s = 0.0;
        for (std::size_t r = 0; r < order_; ++r)
            for (std::size_t c = 0; c < order_; ++c) s += (*this)(r, c) * (*this)(r, c);
        return std::sqrt(s);
    }

    // Principal submatrix on the given rows/columns, in that order.
    [[nodiscard]] SymmetricMatrix principal(const std::vector<std::size_t>& indices) const {
        SymmetricMatrix m(indices.size());
        for (std::size_t a = 0; a < indices.size(); ++a)
            for (std::size_t b = a; b < indices.size(); ++b) m.set(a, b, (*this)(indices[a], indices[b]));
        return m;
    }

    [[nodiscard]] SymmetricMatrix negated() const {
        SymmetricMatrix m = *this;
        for (double& x : m.upper_) x = -x;
        return m;
    }

private:
    [[nodiscard]] std::size_t slot(std::size_t r, std::size_t c) const {
        if (r > c) std::swap(r, c);
        return r * order_ - r * (r + 1) / 2 + c;
    }

    std::size_t order_ = 0;
    std::vector<double> upper_;
};

}  // namespace curvop
