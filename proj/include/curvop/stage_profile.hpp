#pragma once

#include "curvop/frame.hpp"
#include "curvop/jet.hpp"

#include <array>
#include <cstdint>
#include <string>

#include "json.hpp"

namespace curvop {

enum class BlendShape { Smoothstep5, Linear };

[[nodiscard]] std::string to_string(BlendShape shape);
[[nodiscard]] BlendShape parse_blend_shape(const std::string& text);

// Stages of the tube construction along r.
enum class Stage {
    ComplexHyperbolic = 1,  // r < r1: c = 2
    Unwind = 2,             // [r1, r2): c decreases from 2 to 0
    Stretch = 3,            // [r2, r3]: c = 0, theta scale s(r) grows from 1 to d
    Rewind = 4,             // (r3, R): c increases from 0 to 2 on each arc
    Outer = 5,              // r >= R: c = 2
};

[[nodiscard]] std::string to_string(Stage stage);

// r-dependent parameters of the staged metric construction.
//
// During the stretch stage v(r) = s(r) sinh(2r). Past r3 the arc coordinate
// theta' = d theta is used, in which s is 1 again; at r3 all structure
// constants vanish and s has zero slope, so the reset does not change curvature.
struct StageProfile {
    int n = 3;
    double r1 = 3.0;
    double r2 = 8.0;
    double r3 = 14.0;
    double R = 19.0;
    int d = 3;             // branching degree, > 2
    double delta = 0.0;    // overshoot of c above 2 at the start of the unwind stage
    std::array<BlendShape, 3> shapes{BlendShape::Smoothstep5, BlendShape::Smoothstep5, BlendShape::Smoothstep5};
    double tail = 5.0;           // radii up to R + tail are admissible
    double overshoot_fraction = 0.2;  // share of the unwind stage spent rising to 2 + delta

    // Throws DomainError when the ordering or parameter constraints fail.
    void validate() const;
    [[nodiscard]] double r_max() const { return R + tail; }

    [[nodiscard]] static StageProfile from_json(const nlohmann::json& config);
    [[nodiscard]] nlohmann::json to_json() const;
};

[[nodiscard]] Stage stage_at(const StageProfile& profile, double r);
// Common structure constant c(r) of every pair, as a jet in r.
[[nodiscard]] Jet2 structure_jet(const StageProfile& profile, double r);
// Theta stretch factor s(r) as a jet in r.
[[nodiscard]] Jet2 stretch_jet(const StageProfile& profile, double r);

// Model point of the construction at radius r; DomainError outside [r_min, R + tail].
[[nodiscard]] ModelPoint stage_profile(const StageProfile& profile, double r);

// FNV-1a 64 of the canonical JSON serialization, as 16 hex digits.
[[nodiscard]] std::string profile_hash(const StageProfile& profile);

}  // namespace curvop
