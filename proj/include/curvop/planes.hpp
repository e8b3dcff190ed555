#pragma once

#include "curvop/curvature_tensor.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace curvop {

// Orthonormal pair (u, w) spanning a 2-plane, in frame coordinates.
struct PlaneFrame {
    std::vector<double> u;
    std::vector<double> w;
};

// `count` planes in real dimension 2n. When count >= n(2n-1) the coordinate
// planes (Y_i, Y_j), i < j, come first in lexicographic order; the rest are
// Gaussian pairs orthonormalized by Gram-Schmidt, which is uniform on the
// Grassmannian. Deterministic in `seed`.
[[nodiscard]] std::vector<PlaneFrame> sample_planes(int n, int count, std::uint64_t seed);

// Fast K(u, w) for orthonormal frames against one fixed tensor.
class PlaneCurvature {
public:
    explicit PlaneCurvature(const CurvatureTensor& tensor);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] double operator()(const PlaneFrame& plane) const;
    // dK/du and dK/dw at an orthonormal frame.
    void gradient(const PlaneFrame& plane, std::vector<double>& grad_u, std::vector<double>& grad_w) const;

private:
    struct Entry {
        std::size_t p, q;
        double value;  // doubled for off-diagonal entries
    };
    void bivector(const PlaneFrame& plane, std::vector<double>& b) const;

    int dim_;
    std::vector<Bivector> pairs_;
    std::vector<Entry> entries_;
    std::vector<std::vector<std::pair<std::size_t, double>>> rows_;
};

struct PlaneSearchOptions {
    int refine_starts = 4;  // best samples refined in each direction
    int refine_steps = 50;
};

struct CurvatureRange {
    double min_k = 0.0;
    double max_k = 0.0;
    PlaneFrame argmin;
    PlaneFrame argmax;
};

// Extremes of K over the sampled planes, then refined by projected gradient
// ascent/descent on the Grassmannian from the best samples. Throws
// DomainError for an empty plane set.
[[nodiscard]] CurvatureRange sectional_extremes(const CurvatureTensor& tensor, std::span<const PlaneFrame> planes,
                                                const PlaneSearchOptions& options = {});

}  // namespace curvop
