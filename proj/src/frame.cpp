#include "curvop/frame.hpp"

#include "curvop/errors.hpp"

#include <cmath>
#include <string>

namespace curvop {

FrameRole frame_role(int i, int n) {
    if (i < 1 || i > 2 * n) {
        throw DomainError("frame index " + std::to_string(i) + " outside 1.." + std::to_string(2 * n));
    }
    if (i == theta_index(n)) return FrameRole::Theta;
    if (i == radial_index(n)) return FrameRole::Radial;
    return FrameRole::Horizontal;
}

int holomorphic_partner(int i, int n) {
    if (n < 2 || i < 1 || i > 2 * n) {
        throw DomainError("frame index " + std::to_string(i) + " outside 1.." + std::to_string(2 * n));
    }
    return (i % 2 == 1) ? i + 1 : i - 1;
}

WarpProfile WarpProfile::cosh_sinh2() {
    WarpProfile p;
    p.kind_ = WarpKind::CoshSinh2;
    p.label_ = "cosh_sinh2";
    p.h_ = [](const Jet2& r) { return cosh(r); };
    p.v_ = [](const Jet2& r) { return sinh(2.0 * r); };
    return p;
}

WarpProfile WarpProfile::custom(std::string label, JetFn h, JetFn v) {
    WarpProfile p;
    p.kind_ = WarpKind::Custom;
    p.label_ = std::move(label);
    p.h_ = std::move(h);
    p.v_ = std::move(v);
    return p;
}

WarpProfile WarpProfile::custom_first_order(std::string label, SlopeFn h, SlopeFn v) {
    WarpProfile p;
    p.kind_ = WarpKind::Custom;
    p.label_ = std::move(label);
    p.h_slope_ = std::move(h);
    p.v_slope_ = std::move(v);
    return p;
}

namespace {

Jet2 differenced(const WarpProfile::SlopeFn& f, double r) {
    const double step = WarpProfile::kSecondDerivativeStep;
    const auto [value, slope] = f(r);
    const double ahead = f(r + step).second;
    const double behind = f(r - step).second;
    return {value, slope, (ahead - behind) / (2.0 * step)};
}

}  // namespace

WarpJet WarpProfile::eval(double r) const {
    if (kind_ == WarpKind::CoshSinh2) {
        const double ch = std::cosh(r), sh = std::sinh(r);
        const double s2 = std::sinh(2.0 * r), c2 = std::cosh(2.0 * r);
        return {ch, sh, ch, s2, 2.0 * c2, 4.0 * s2};
    }
    return eval_generic(r);
}

WarpJet WarpProfile::eval_generic(double r) const {
    Jet2 h, v;
    if (h_slope_) {
        h = differenced(h_slope_, r);
        v = differenced(v_slope_, r);
    } else {
        const Jet2 x = Jet2::variable(r);
        h = h_(x);
        v = v_(x);
    }
    return {h.v, h.d1, h.d2, v.v, v.d1, v.d2};
}

StructureConstants StructureConstants::uniform(int n, double value) {
    if (n < 2) throw DomainError("complex dimension must be >= 2");
    return StructureConstants(std::vector<double>(static_cast<std::size_t>(n - 1), value));
}

bool StructureConstants::within(double lo, double hi) const {
    for (double c : values_) {
        if (!(c >= lo && c <= hi)) return false;
    }
    return true;
}

ModelPoint::ModelPoint(int n, double r, StructureConstants c, WarpProfile warp)
    : n_(n), r_(r), c_(std::move(c)), warp_(std::move(warp)) {
    if (n_ < 2) throw DomainError("complex dimension n must be >= 2, got " + std::to_string(n_));
    if (!(r_ >= kRMin) || !std::isfinite(r_)) {
        throw DomainError("radius " + std::to_string(r_) + " below r_min = 1e-3");
    }
    if (c_.size() != static_cast<std::size_t>(n_ - 1)) {
        throw DomainError("expected " + std::to_string(n_ - 1) + " structure constants, got " +
                          std::to_string(c_.size()));
    }
}

ModelPoint ModelPoint::complex_hyperbolic(int n, double r) {
    return {n, r, StructureConstants::uniform(n, 2.0)};
}

ModelPoint ModelPoint::integrable(int n, double r) {
    return {n, r, StructureConstants::uniform(n, 0.0)};
}

}  // namespace curvop
