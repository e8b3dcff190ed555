#pragma once

#include "curvop/jet.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace curvop {

// Smallest admissible radius. v(0) = 0 collapses the theta direction.
inline constexpr double kRMin = 1e-3;

// Frame indices are 1-based throughout the public API, matching Y_1 .. Y_{2n}:
// 1..2n-2 horizontal, 2n-1 the theta direction, 2n the radial direction.
enum class FrameRole { Horizontal, Theta, Radial };

[[nodiscard]] FrameRole frame_role(int i, int n);
[[nodiscard]] constexpr int theta_index(int n) { return 2 * n - 1; }
[[nodiscard]] constexpr int radial_index(int n) { return 2 * n; }

// i+1 for odd i, i-1 for even i. Throws DomainError unless 1 <= i <= 2n.
[[nodiscard]] int holomorphic_partner(int i, int n);

struct WarpJet {
    double h = 0.0, dh = 0.0, d2h = 0.0;
    double v = 0.0, dv = 0.0, d2v = 0.0;

    [[nodiscard]] Jet2 h_jet() const { return {h, dh, d2h}; }
    [[nodiscard]] Jet2 v_jet() const { return {v, dv, d2v}; }
};

enum class WarpKind { CoshSinh2, Custom };

// Radial warp functions h(r) (horizontal scale) and v(r) (theta scale).
//
// Custom profiles are given as jet-valued functions, so derivatives come from
// truncated Taylor arithmetic rather than differencing. A profile built with
// custom_first_order() supplies only values and slopes; its second derivatives
// are central differences of the slopes (step kSecondDerivativeStep).
class WarpProfile {
public:
    using JetFn = std::function<Jet2(const Jet2&)>;
    using SlopeFn = std::function<std::pair<double, double>(double)>;

    static constexpr double kSecondDerivativeStep = 1e-5;

    // h = cosh(r), v = sinh(2r).
    static WarpProfile cosh_sinh2();
    static WarpProfile custom(std::string label, JetFn h, JetFn v);
    static WarpProfile custom_first_order(std::string label, SlopeFn h, SlopeFn v);

    [[nodiscard]] WarpKind kind() const { return kind_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] bool has_exact_second_derivatives() const { return !h_slope_; }

    // Closed forms for CoshSinh2, jet evaluation otherwise.
    [[nodiscard]] WarpJet eval(double r) const;
    // Always the generic route (jets or slope differencing); for CoshSinh2 this
    // is the independent path the closed forms are checked against.
    [[nodiscard]] WarpJet eval_generic(double r) const;

private:
    WarpProfile() = default;

    WarpKind kind_ = WarpKind::Custom;
    std::string label_;
    JetFn h_;
    JetFn v_;
    SlopeFn h_slope_;
    SlopeFn v_slope_;
};

[[nodiscard]] inline WarpJet eval_warp(const WarpProfile& profile, double r) { return profile.eval(r); }

// Structure constants c_1, c_3, ..., c_{2n-3}, stored densely: entry k is the
// constant of the holomorphic pair (2k+1, 2k+2) in 1-based frame indices.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(std::vector<double> values) : values_(std::move(values)) {}

    static StructureConstants uniform(int n, double value);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] double pair(std::size_t k) const { return values_.at(k); }
    // Constant of the pair containing horizontal frame index i (1-based).
    [[nodiscard]] double for_index(int i) const { return values_.at(static_cast<std::size_t>((i - 1) / 2)); }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }
    [[nodiscard]] bool within(double lo, double hi) const;

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    std::vector<double> values_;
};

// One evaluation site of the metric family h^2 c_{n-1} + v^2/4 dtheta^2 + dr^2.
class ModelPoint {
public:
    // Throws DomainError if n < 2, r < kRMin, or c has the wrong length.
    ModelPoint(int n, double r, StructureConstants c, WarpProfile warp = WarpProfile::cosh_sinh2());

    // c = 2 everywhere: the complex hyperbolic metric.
    static ModelPoint complex_hyperbolic(int n, double r);
    // c = 0 everywhere: the integrable model.
    static ModelPoint integrable(int n, double r);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int dim() const { return 2 * n_; }
    [[nodiscard]] double r() const { return r_; }
    [[nodiscard]] const StructureConstants& c() const { return c_; }
    [[nodiscard]] const WarpProfile& warp() const { return warp_; }
    [[nodiscard]] WarpJet jet() const { return warp_.eval(r_); }

private:
    int n_;
    double r_;
    StructureConstants c_;
    WarpProfile warp_;
};

}  // namespace curvop
