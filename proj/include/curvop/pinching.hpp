#pragma once

#include "curvop/frame.hpp"
#include "curvop/planes.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace curvop {

// Values of every structure constant: `points` equally spaced values in
// [lo, hi] per pair (tensor grid), or the single value lo when points == 1.
struct CRange {
    double lo = 0.0;
    double hi = 0.0;
    int points = 1;

    [[nodiscard]] static CRange fixed(double value) { return {value, value, 1}; }
    [[nodiscard]] std::vector<StructureConstants> enumerate(int n) const;
};

struct PinchingOptions {
    double r_lo = kRMin;  // first grid radius
    double r_hi = 16.0;
    double r_step = 0.25;  // grid is r_lo, then multiples of r_step up to r_hi
    PlaneSearchOptions search;

    [[nodiscard]] std::vector<double> radii() const;
};

struct RadiusScan {
    double r = 0.0;
    double min_k = 0.0;
    double max_k = 0.0;
    bool inside = false;  // all sampled K in (-4 - eps, -1 + eps) for every c
};

struct PinchingResult {
    std::optional<double> r_est;  // empty when the largest grid radius still fails
    std::vector<RadiusScan> scans;
};

// Smallest grid radius from which every tested radius keeps all sampled and
// refined sectional curvatures inside (-4 - eps, -1 + eps). The planes and the
// refinement do not depend on eps, so r_est is antitone in eps.
[[nodiscard]] PinchingResult pinching_radius(int n, const CRange& c_range, double eps, int samples,
                                             std::uint64_t seed, const PinchingOptions& options = {});

}  // namespace curvop
