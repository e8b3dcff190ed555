#pragma once

#include "curvop/stage_profile.hpp"
#include "curvop/sweep.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace curvop {

struct RadiusVerdict {
    double r = 0.0;
    Stage stage = Stage::ComplexHyperbolic;
    double c = 0.0;               // common structure constant at r
    double stretch = 1.0;         // theta stretch factor s(r)
    double max_eigenvalue = 0.0;
    std::string source;           // which matrix produced max_eigenvalue
    bool quasi_static = false;    // c varies with r here; formulas used with c frozen
    bool pass = false;
};

struct Certificate {
    std::string profile_hash;
    StageProfile profile;
    double tol = 0.0;
    std::vector<RadiusVerdict> verdicts;
    bool pass = false;  // conjunction of the per-radius verdicts
    std::vector<std::string> caveats;

    // Verdict with the largest max_eigenvalue; nullptr when empty.
    [[nodiscard]] const RadiusVerdict* worst() const;
};

// Evaluates the curvature operator at r_samples equally spaced radii over
// [r_min, R + tail] plus the four stage boundaries:
//   complex hyperbolic and outer stages: full exact operator (c = 2);
//   unwind and rewind: asymptotic holomorphic block with exact 2x2 blocks;
//   stretch: full exact operator at c = 0 with v = s(r) sinh(2r).
// A radius passes when the largest eigenvalue is <= tol. Throws DomainError
// for r_samples < 10 or an invalid profile.
[[nodiscard]] Certificate certify_nonpositive(const StageProfile& profile, int r_samples, double tol);

struct PerturbationReport {
    ReportRow row;                    // exact operator at c = 2 + delta, sampled curvature extremes
    double asymptotic_mixed_eig = 0.0;  // larger eigenvalue of the asymptotic horizontal-vertical block
    bool positive_eigenvalue = false;   // row.max_op_eig > tol
    bool negative_curvature = false;    // row.max_k < 0
};

// All structure constants set to 2 + delta. DomainError for delta < 0.
[[nodiscard]] PerturbationReport perturbation_demo(double delta, int n, double r, int samples, std::uint64_t seed,
                                                   double tol = 1e-9);

}  // namespace curvop
