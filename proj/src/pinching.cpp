#include "curvop/pinching.hpp"

#include "curvop/closed_form.hpp"
#include "curvop/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvop {

std::vector<StructureConstants> CRange::enumerate(int n) const {
    if (points < 1) throw DomainError("c range needs points >= 1");
    if (n < 2) throw DomainError("complex dimension n must be >= 2");
    std::vector<double> values;
    if (points == 1) {
        values.push_back(lo);
    } else {
        for (int k = 0; k < points; ++k) values.push_back(lo + (hi - lo) * k / (points - 1));
    }
    const auto pairs = static_cast<std::size_t>(n - 1);
    std::vector<StructureConstants> out;
    std::vector<std::size_t> digit(pairs, 0);
    while (true) {
        std::vector<double> c(pairs);
        for (std::size_t k = 0; k < pairs; ++k) c[k] = values[digit[k]];
        out.emplace_back(std::move(c));
        std::size_t k = 0;
        while (k < pairs && ++digit[k] == values.size()) digit[k++] = 0;
        if (k == pairs) break;
    }
    return out;
}

std::vector<double> PinchingOptions::radii() const {
    if (!(r_step > 0.0) || !(r_hi >= r_lo) || r_lo < kRMin) throw DomainError("invalid pinching radius grid");
    std::vector<double> out{r_lo};
    for (int k = 1;; ++k) {
        const double r = k * r_step;
        if (r > r_hi + 1e-12) break;
        if (r > r_lo) out.push_back(r);
    }
    return out;
}

PinchingResult pinching_radius(int n, const CRange& c_range, double eps, int samples, std::uint64_t seed,
                               const PinchingOptions& options) {
    if (!(eps > 0.0)) throw DomainError("pinching window needs eps > 0");
    const std::vector<PlaneFrame> planes = sample_planes(n, samples, seed);
    const std::vector<StructureConstants> cs = c_range.enumerate(n);

    PinchingResult result;
    for (double r : options.radii()) {
        RadiusScan scan{r, std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), true};
        for (const StructureConstants& c : cs) {
            const CurvatureRange range = sectional_extremes(component_table(ModelPoint(n, r, c)), planes, options.search);
            scan.min_k = std::min(scan.min_k, range.min_k);
            scan.max_k = std::max(scan.max_k, range.max_k);
        }
        scan.inside = scan.min_k > -4.0 - eps && scan.max_k < -1.0 + eps;
        result.scans.push_back(scan);
    }

    if (!result.scans.back().inside) return result;
    std::size_t first = result.scans.size() - 1;
    while (first > 0 && result.scans[first - 1].inside) --first;
    result.r_est = result.scans[first].r;
    return result;
}

}  // namespace curvop
