#include "curvop/stage_profile.hpp"

#include "curvop/errors.hpp"

#include <cstdio>

namespace curvop {

std::string to_string(BlendShape shape) { return shape == BlendShape::Smoothstep5 ? "smoothstep5" : "linear"; }

BlendShape parse_blend_shape(const std::string& text) {
    if (text == "smoothstep5") return BlendShape::Smoothstep5;
    if (text == "linear") return BlendShape::Linear;
    throw DomainError("unknown blend shape '" + text + "' (expected smoothstep5 or linear)");
}

std::string to_string(Stage stage) {
    switch (stage) {
        case Stage::ComplexHyperbolic: return "complex_hyperbolic";
        case Stage::Unwind: return "unwind";
        case Stage::Stretch: return "stretch";
        case Stage::Rewind: return "rewind";
        case Stage::Outer: return "outer";
    }
    return "unknown";
}

void StageProfile::validate() const {
    if (n < 2) throw DomainError("profile: n must be >= 2");
    if (!(kRMin < r1 && r1 < r2 && r2 < r3 && r3 < R)) {
        throw DomainError("profile: need r_min < r1 < r2 < r3 < R");
    }
    if (d <= 2) throw DomainError("profile: branching degree d must exceed 2");
    if (!(delta >= 0.0)) throw DomainError("profile: delta must be >= 0");
    if (!(tail >= 0.0)) throw DomainError("profile: tail must be >= 0");
    if (!(overshoot_fraction > 0.0 && overshoot_fraction < 1.0)) {
        throw DomainError("profile: overshoot_fraction must lie in (0, 1)");
    }
}

namespace {

// Blend from 0 to 1 over t in [0, 1], clamped outside.
Jet2 blend(BlendShape shape, const Jet2& t) {
    if (t.v <= 0.0) return Jet2::constant(0.0);
    if (t.v >= 1.0) return Jet2::constant(1.0);
    if (shape == BlendShape::Linear) return t;
    const Jet2 t3 = t * t * t;
    return t3 * (10.0 + t * (-15.0 + 6.0 * t));
}

Jet2 unit_coordinate(double r, double from, double to) {
    const double len = to - from;
    return {(r - from) / len, 1.0 / len, 0.0};
}

}  // namespace

Stage stage_at(const StageProfile& p, double r) {
    if (r < p.r1) return Stage::ComplexHyperbolic;
    if (r < p.r2) return Stage::Unwind;
    if (r <= p.r3) return Stage::Stretch;
    if (r < p.R) return Stage::Rewind;
    return Stage::Outer;
}

Jet2 structure_jet(const StageProfile& p, double r) {
    switch (stage_at(p, r)) {
        case Stage::ComplexHyperbolic:
        case Stage::Outer:
            return Jet2::constant(2.0);
        case Stage::Stretch:
            return Jet2::constant(0.0);
        case Stage::Unwind: {
            const Jet2 t = unit_coordinate(r, p.r1, p.r2);
            const BlendShape shape = p.shapes[0];
            if (p.delta == 0.0) return 2.0 * (1.0 - blend(shape, t));
            // Rise to 2 + delta, then unwind to 0.
            const double f = p.overshoot_fraction;
            if (t.v < f) return 2.0 + p.delta * blend(shape, t / f);
            return (2.0 + p.delta) * (1.0 - blend(shape, (t - f) / (1.0 - f)));
        }
        case Stage::Rewind:
            return 2.0 * blend(p.shapes[2], unit_coordinate(r, p.r3, p.R));
    }
    return Jet2::constant(2.0);
}

Jet2 stretch_jet(const StageProfile& p, double r) {
    if (stage_at(p, r) != Stage::Stretch) return Jet2::constant(1.0);
    return 1.0 + (p.d - 1.0) * blend(p.shapes[1], unit_coordinate(r, p.r2, p.r3));
}

ModelPoint stage_profile(const StageProfile& p, double r) {
    p.validate();
    if (!(r >= kRMin && r <= p.r_max())) {
        throw DomainError("radius " + std::to_string(r) + " outside the profile range [1e-3, R + tail]");
    }
    const double c = structure_jet(p, r).v;
    const Jet2 s = stretch_jet(p, r);
    StructureConstants constants = StructureConstants::uniform(p.n, c);
    if (s.v == 1.0 && s.d1 == 0.0 && s.d2 == 0.0) return {p.n, r, std::move(constants)};

    // Freeze the stretch curve around this radius; s is evaluated as a jet.
    const StageProfile frozen = p;
    WarpProfile warp = WarpProfile::custom(
        "stretched", [](const Jet2& x) { return cosh(x); },
        [frozen](const Jet2& x) {
            const Jet2 sj = stretch_jet(frozen, x.v);
            // Chain rule: x is the seeded radius jet (x.d1 = 1 at the call site).
            const Jet2 s_of_x = compose(sj.v, sj.d1, sj.d2, x);
            return s_of_x * sinh(2.0 * x);
        });
    return {p.n, r, std::move(constants), std::move(warp)};
}

StageProfile StageProfile::from_json(const nlohmann::json& j) {
    StageProfile p;
    try {
        p.n = j.value("n", p.n);
        p.r1 = j.value("r1", p.r1);
        p.r2 = j.value("r2", p.r2);
        p.r3 = j.value("r3", p.r3);
        p.R = j.value("R", p.R);
        p.d = j.value("d", p.d);
        p.delta = j.value("delta", p.delta);
        p.tail = j.value("tail", p.tail);
        p.overshoot_fraction = j.value("overshoot_fraction", p.overshoot_fraction);
        if (j.contains("blend")) {
            const auto& b = j.at("blend");
            if (b.is_string()) {
                p.shapes.fill(parse_blend_shape(b.get<std::string>()));
            } else {
                p.shapes[0] = parse_blend_shape(b.value("unwind", std::string("smoothstep5")));
                p.shapes[1] = parse_blend_shape(b.value("stretch", std::string("smoothstep5")));
                p.shapes[2] = parse_blend_shape(b.value("rewind", std::string("smoothstep5")));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("profile config: ") + e.what());
    }
    p.validate();
    return p;
}

nlohmann::json StageProfile::to_json() const {
    return {
        {"n", n},
        {"r1", r1},
        {"r2", r2},
        {"r3", r3},
        {"R", R},
        {"d", d},
        {"delta", delta},
        {"tail", tail},
        {"overshoot_fraction", overshoot_fraction},
        {"blend",
         {{"unwind", to_string(shapes[0])}, {"stretch", to_string(shapes[1])}, {"rewind", to_string(shapes[2])}}},
    };
}

std::string profile_hash(const StageProfile& p) {
    const std::string text = p.to_json().dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace curvop
