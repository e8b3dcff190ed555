#include "curvop/curvature_tensor.hpp"

#include "curvop/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvop {

CurvatureTensor::CurvatureTensor(int dim) : dim_(dim) {
    if (dim < 2) throw DomainError("tensor dimension must be >= 2");
    pair_lookup_.assign(static_cast<std::size_t>((dim + 1) * (dim + 1)), 0);
    for (int i = 1; i <= dim; ++i) {
        for (int j = i + 1; j <= dim; ++j) {
            pair_lookup_[static_cast<std::size_t>(i * (dim + 1) + j)] = pairs_.size();
            pairs_.push_back({i, j});
        }
    }
    values_.assign(pairs_.size() * (pairs_.size() + 1) / 2, 0.0);
}

void CurvatureTensor::check(int i) const {
    if (i < 1 || i > dim_) {
        throw DomainError("tensor index " + std::to_string(i) + " outside 1.." + std::to_string(dim_));
    }
}

std::size_t CurvatureTensor::pair_index(int i, int j) const {
    check(i);
    check(j);
    if (i >= j) throw DomainError("pair_index expects i < j");
    return pair_lookup_[static_cast<std::size_t>(i * (dim_ + 1) + j)];
}

double CurvatureTensor::operator()(int i, int j, int k, int l) const {
    check(i);
    check(j);
    check(k);
    check(l);
    if (i == j || k == l) return 0.0;
    double sign = 1.0;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (k > l) {
        std::swap(k, l);
        sign = -sign;
    }
    return sign * at_pairs(pair_index(i, j), pair_index(k, l));
}

void CurvatureTensor::set(int i, int j, int k, int l, double value) {
    check(i);
    check(j);
    check(k);
    check(l);
    if (i == j || k == l) {
        if (value != 0.0) throw DomainError("component with a repeated slot index must vanish");
        return;
    }
    double sign = 1.0;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (k > l) {
        std::swap(k, l);
        sign = -sign;
    }
    std::size_t p = pair_index(i, j);
    std::size_t q = pair_index(k, l);
    if (p > q) std::swap(p, q);
    values_[packed(p, q)] = sign * value;
}

double CurvatureTensor::max_bianchi_residual() const {
    double worst = 0.0;
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j)
            for (int k = 1; k <= dim_; ++k)
                for (int l = 1; l <= dim_; ++l) {
                    const double s = (*this)(i, j, k, l) + (*this)(i, k, l, j) + (*this)(i, l, j, k);
                    worst = std::max(worst, std::abs(s));
                }
    return worst;
}

}  // namespace curvop
