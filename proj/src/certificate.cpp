#include "curvop/certificate.hpp"

#include "curvop/closed_form.hpp"
#include "curvop/errors.hpp"
#include "curvop/operator.hpp"
#include "curvop/planes.hpp"

#include <algorithm>

namespace curvop {

const RadiusVerdict* Certificate::worst() const {
    if (verdicts.empty()) return nullptr;
    return &*std::max_element(verdicts.begin(), verdicts.end(), [](const RadiusVerdict& a, const RadiusVerdict& b) {
        return a.max_eigenvalue < b.max_eigenvalue;
    });
}

Certificate certify_nonpositive(const StageProfile& profile, int r_samples, double tol) {
    profile.validate();
    if (r_samples < 10) throw DomainError("certify_nonpositive needs at least 10 radius samples");

    std::vector<double> radii;
    const double lo = kRMin, hi = profile.r_max();
    for (int k = 0; k < r_samples; ++k) radii.push_back(lo + (hi - lo) * k / (r_samples - 1));
    for (double b : {profile.r1, profile.r2, profile.r3, profile.R}) radii.push_back(b);
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

    Certificate cert;
    cert.profile_hash = profile_hash(profile);
    cert.profile = profile;
    cert.tol = tol;
    cert.pass = true;

    for (double r : radii) {
        const ModelPoint point = stage_profile(profile, r);
        RadiusVerdict v;
        v.r = r;
        v.stage = stage_at(profile, r);
        v.c = point.c().pair(0);
        v.stretch = stretch_jet(profile, r).v;

        if (v.stage == Stage::Unwind || v.stage == Stage::Rewind) {
            const DecompositionBound bound = decomposition_bound(point);
            v.max_eigenvalue = bound.max_eigenvalue();
            v.source = bound.worst_block;
            v.quasi_static = true;
        } else {
            v.max_eigenvalue = operator_spectrum(point, EvalMode::Exact).eigenvalues.back();
            v.source = "full operator";
        }
        v.pass = v.max_eigenvalue <= tol;
        cert.pass = cert.pass && v.pass;
        cert.verdicts.push_back(std::move(v));
    }

    cert.caveats = {
        "unwind/rewind radii use the constant-c curvature formulas with c frozen at each radius; "
        "the bracket defect [X_i, d/dr] of the varying frame is not modeled",
        "unwind/rewind holomorphic block uses its large-r limit; 2x2 blocks are exact",
        "stretch stage models the angle increase as v(r) = s(r) sinh(2r) with c = 0",
        "pointwise spectra do not see derivative discontinuities of the blend curves",
    };
    return cert;
}

PerturbationReport perturbation_demo(double delta, int n, double r, int samples, std::uint64_t seed, double tol) {
    if (!(delta >= 0.0)) throw DomainError("perturbation delta must be >= 0");
    const double c = 2.0 + delta;
    const std::vector<PlaneFrame> planes = sample_planes(n, samples, seed);

    PerturbationReport report;
    report.row = evaluate_row(n, r, StructureConstants::uniform(n, c), EvalMode::Exact, planes, tol,
                              kDefaultClusterTol);
    report.row.pass = false;

    const ModelPoint point(n, r, StructureConstants::uniform(n, c));
    const SymmetricMatrix block = mixed_block(point, {1, theta_index(n)}, {2, radial_index(n)}, EvalMode::Asymptotic);
    report.asymptotic_mixed_eig = eigen_sym(block).eigenvalues.back();

    report.positive_eigenvalue = report.row.max_op_eig > tol;
    report.negative_curvature = report.row.max_k < 0.0;
    report.row.pass = report.positive_eigenvalue && report.negative_curvature;
    return report;
}

}  // namespace curvop
