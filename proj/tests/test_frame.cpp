#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvop/errors.hpp"
#include "curvop/frame.hpp"
#include "curvop/wedge_basis.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace curvop;

TEST_CASE("holomorphic partner") {
    CHECK(holomorphic_partner(1, 2) == 2);
    CHECK(holomorphic_partner(4, 3) == 3);
    for (int n = 2; n <= 6; ++n) {
        CHECK(holomorphic_partner(2 * n - 1, n) == 2 * n);
        for (int i = 1; i <= 2 * n; ++i) CHECK(holomorphic_partner(holomorphic_partner(i, n), n) == i);
    }
    CHECK_THROWS_AS((void)holomorphic_partner(0, 2), DomainError);
    CHECK_THROWS_AS((void)holomorphic_partner(5, 2), DomainError);
}

TEST_CASE("frame roles") {
    CHECK(frame_role(1, 3) == FrameRole::Horizontal);
    CHECK(frame_role(4, 3) == FrameRole::Horizontal);
    CHECK(frame_role(5, 3) == FrameRole::Theta);
    CHECK(frame_role(6, 3) == FrameRole::Radial);
}

TEST_CASE("wedge basis n=2 order") {
    const WedgeBasis b = build_wedge_basis(2);
    const std::vector<Bivector> expected{{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}};
    CHECK(b.elements() == expected);
    REQUIRE(b.mixed_blocks().size() == 2);
    CHECK(b.mixed_blocks()[0].family == BlockFamily::HorizontalVertical);
    CHECK(b.block_of(0) == 0);
    CHECK(b.block_of(1) == 0);
    CHECK(b.block_of(2) == 1);
    CHECK(b.block_of(5) == 2);
}

TEST_CASE("wedge basis n=3 first block") {
    const WedgeBasis b = build_wedge_basis(3);
    CHECK(b[0] == Bivector{1, 2});
    CHECK(b[1] == Bivector{3, 4});
    CHECK(b[2] == Bivector{5, 6});
    // blocks named in the n = 3 discussion
    CHECK_NOTHROW((void)b.find_block({1, 5}, {2, 6}));
    CHECK_NOTHROW((void)b.find_block({1, 6}, {2, 5}));
    CHECK_NOTHROW((void)b.find_block({1, 3}, {2, 4}));
    CHECK_NOTHROW((void)b.find_block({1, 4}, {2, 3}));
    CHECK(b.find_block({1, 3}, {2, 4}).family == BlockFamily::DoubleHorizontal);
    CHECK_THROWS_AS((void)b.find_block({1, 3}, {1, 4}), DomainError);
    CHECK_THROWS_AS((void)b.find_block({1, 2}, {3, 4}), DomainError);
}

TEST_CASE("wedge basis covers every pair once") {
    CHECK(build_wedge_basis(4).size() == 28);
    for (int n = 2; n <= 8; ++n) {
        const WedgeBasis b = build_wedge_basis(n);
        CHECK(b.size() == bivector_count(n));
        std::set<Bivector> seen(b.elements().begin(), b.elements().end());
        CHECK(seen.size() == b.size());
        for (const auto& e : b.elements()) CHECK(e.i < e.j);
        CHECK(b.mixed_blocks().size() == static_cast<std::size_t>(n * n - n));
        std::size_t covered = b.holomorphic_size();
        for (const auto& blk : b.mixed_blocks()) {
            CHECK(b[blk.offset] == blk.members[0]);
            CHECK(b[blk.offset + 1] == blk.members[1]);
            covered += 2;
        }
        CHECK(covered == b.size());
        for (std::size_t k = 0; k < b.size(); ++k) CHECK(b.position(b[k]) == k);
    }
    CHECK_THROWS_AS((void)build_wedge_basis(1), DomainError);
}

TEST_CASE("to_string bivector") { CHECK(to_string(Bivector{1, 2}) == "Y1^Y2"); }

TEST_CASE("cosh/sinh(2r) jet at 0 by series") {
    // r = 0 is below r_min for model points, but the warp itself is defined there.
    const WarpJet j = WarpProfile::cosh_sinh2().eval(0.0);
    CHECK(j.h == 1.0);
    CHECK(j.dh == 0.0);
    CHECK(j.d2h == 1.0);
    CHECK(j.v == 0.0);
    CHECK(j.dv == 2.0);
    CHECK(j.d2v == 0.0);
}

TEST_CASE("cosh/sinh(2r) jet against central differences at r=1") {
    const WarpProfile w = WarpProfile::cosh_sinh2();
    const double r = 1.0, s = 1e-5;
    const WarpJet j = w.eval(r), p = w.eval(r + s), m = w.eval(r - s);
    CHECK(std::abs(j.dh - (p.h - m.h) / (2 * s)) < 1e-8);
    CHECK(std::abs(j.dv - (p.v - m.v) / (2 * s)) < 1e-8);
    CHECK(std::abs(j.d2h - (p.dh - m.dh) / (2 * s)) < 1e-8);
    CHECK(std::abs(j.d2v - (p.dv - m.dv) / (2 * s)) < 1e-8);
}

TEST_CASE("cosh/sinh(2r) identities and generic path at random radii") {
    const WarpProfile w = WarpProfile::cosh_sinh2();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(kRMin, 10.0);
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    for (int k = 0; k < 200; ++k) {
        const double r = uni(rng);
        const WarpJet j = w.eval(r);
        CHECK(rel(j.d2v, 4 * j.v) < 1e-12);
        CHECK(rel(j.d2h, j.h) < 1e-12);
        CHECK(rel(j.v, 2 * j.h * j.dh) < 1e-12);
        CHECK(rel(j.h * j.h - j.dh * j.dh, 1.0) < 1e-12 * j.h * j.h);
        const WarpJet g = w.eval_generic(r);
        CHECK(rel(g.h, j.h) < 1e-12);
        CHECK(rel(g.dh, j.dh) < 1e-12);
        CHECK(rel(g.d2h, j.d2h) < 1e-12);
        CHECK(rel(g.v, j.v) < 1e-12);
        CHECK(rel(g.dv, j.dv) < 1e-12);
        CHECK(rel(g.d2v, j.d2v) < 1e-12);
    }
}

TEST_CASE("first-order custom profile differences its slopes") {
    const WarpProfile w = WarpProfile::custom_first_order(
        "cosh_sinh2_fd", [](double r) { return std::pair{std::cosh(r), std::sinh(r)}; },
        [](double r) { return std::pair{std::sinh(2 * r), 2 * std::cosh(2 * r)}; });
    CHECK_FALSE(w.has_exact_second_derivatives());
    const WarpProfile exact = WarpProfile::cosh_sinh2();
    for (double r : {0.3, 1.0, 2.5, 5.0}) {
        const WarpJet a = w.eval(r), b = exact.eval(r);
        CHECK(std::abs(a.d2h - b.d2h) < 1e-6 * std::max(1.0, b.d2h));
        CHECK(std::abs(a.d2v - b.d2v) < 1e-6 * std::max(1.0, b.d2v));
        CHECK(a.dh == doctest::Approx(b.dh));
    }
}

TEST_CASE("custom jet profile") {
    const WarpProfile w = WarpProfile::custom("exp", [](const Jet2& r) { return exp(r); },
                                              [](const Jet2& r) { return 2.0 * exp(2.0 * r); });
    CHECK(w.has_exact_second_derivatives());
    const WarpJet j = w.eval(0.5);
    CHECK(j.d2h == doctest::Approx(std::exp(0.5)).epsilon(1e-14));
    CHECK(j.d2v == doctest::Approx(8 * std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("model point validation") {
    CHECK_THROWS_AS(ModelPoint(1, 1.0, StructureConstants(std::vector<double>{})), DomainError);
    CHECK_THROWS_AS(ModelPoint(2, 1e-4, StructureConstants({2.0})), DomainError);
    CHECK_THROWS_AS(ModelPoint(3, 1.0, StructureConstants({2.0})), DomainError);
    const ModelPoint p = ModelPoint::complex_hyperbolic(4, 2.0);
    CHECK(p.dim() == 8);
    CHECK(p.c() == StructureConstants::uniform(4, 2.0));
    CHECK(p.c().for_index(5) == 2.0);
    CHECK(ModelPoint::integrable(3, 1.0).c().values() == std::vector<double>{0.0, 0.0});
}
