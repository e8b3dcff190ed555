#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvop/closed_form.hpp"
#include "curvop/errors.hpp"
#include "curvop/koszul.hpp"

#include <cmath>
#include <random>

using namespace curvop;

namespace {

ModelPoint random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nd(2, 4);
    std::uniform_real_distribution<double> rd(0.3, 8.0), cd(0.0, 2.0);
    const int n = nd(rng);
    std::vector<double> c(static_cast<std::size_t>(n - 1));
    for (double& x : c) x = cd(rng);
    return {n, rd(rng), StructureConstants(c)};
}

std::vector<StructureConstants> c_grid(int n, const std::vector<double>& values) {
    std::vector<StructureConstants> out;
    std::vector<std::size_t> digit(static_cast<std::size_t>(n - 1), 0);
    while (true) {
        std::vector<double> c;
        for (auto d : digit) c.push_back(values[d]);
        out.emplace_back(c);
        std::size_t k = 0;
        while (k < digit.size() && ++digit[k] == values.size()) digit[k++] = 0;
        if (k == digit.size()) return out;
    }
}

}  // namespace

TEST_CASE("bracket table") {
    const BracketTable b2 = bracket_table(ModelPoint(2, 1.0, StructureConstants({1.4})));
    CHECK(b2(1, 2, 3) == 1.4);
    CHECK(b2(2, 1, 3) == -1.4);
    int nonzero = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) nonzero += b2(a, b, c) != 0.0;
    CHECK(nonzero == 2);

    const BracketTable b3 = bracket_table(ModelPoint::complex_hyperbolic(3, 1.0));
    CHECK(b3(1, 2, 5) == 2.0);
    CHECK(b3(3, 4, 5) == 2.0);
    CHECK(b3(1, 3, 5) == 0.0);
    CHECK(b3(1, 6, 5) == 0.0);
}

TEST_CASE("connection examples") {
    const ModelPoint p(3, 1.4, StructureConstants({0.9, 1.6}));
    const ConnectionCoefficients g = connection(p);
    const int N = radial_index(3);
    for (int c = 1; c <= 6; ++c) CHECK(g.gamma(N, N, c).value == 0.0);
    const WarpJet j = p.jet();
    for (int i = 1; i <= 4; ++i) {
        // <nabla_{X_i} X_i, d/dr> = gamma(i,i,N) * |d/dr|^2
        CHECK(g.gamma(i, i, N).value == doctest::Approx(-j.h * j.dh).epsilon(1e-14));
    }
}

TEST_CASE("torsion-free and metric compatible at random points") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        const ModelPoint p = random_point(rng);
        const ConnectionCoefficients g = connection(p);
        CHECK(g.torsion_residual(bracket_table(p)) < 1e-12);
        CHECK(g.metric_residual() < 1e-11);
    }
}

TEST_CASE("oracle sign is pinned") {
    CHECK(std::abs(oracle_sign()) == 1.0);
    const CurvatureTensor t = oracle_tensor(ModelPoint::complex_hyperbolic(2, 1.0));
    CHECK(t(1, 2, 1, 2) == doctest::Approx(-4.0).epsilon(1e-12));
}

TEST_CASE("oracle tensor basic properties") {
    const CurvatureTensor t = oracle_tensor(ModelPoint(2, 1.0, StructureConstants({2.0})));
    CHECK(t.max_bianchi_residual() < 1e-10);
    CHECK(t(1, 2, 3, 4) == -t(2, 1, 3, 4));
    CHECK(compare_tensors(component_table(ModelPoint::complex_hyperbolic(2, 1.0)), t).max_abs_diff < 1e-10);
}

TEST_CASE("compare_tensors") {
    const CurvatureTensor a = component_table(ModelPoint(3, 2.0, StructureConstants({1.3, 0.7})));
    const TensorComparison same = compare_tensors(a, a);
    CHECK(same.max_abs_diff == 0.0);
    CHECK(same.worst == TensorIndex{1, 2, 1, 2});
    CHECK_THROWS_AS((void)compare_tensors(a, CurvatureTensor(4)), DomainError);

    CHECK(compare_tensors(a, oracle_tensor(ModelPoint(3, 2.0, StructureConstants({1.3, 0.7})))).max_abs_diff < 1e-9);

    const TensorComparison mixed = compare_tensors(oracle_tensor(ModelPoint(2, 1.0, StructureConstants({2.0}))),
                                                   component_table(ModelPoint(2, 1.0, StructureConstants({0.0}))));
    CHECK(mixed.max_abs_diff > 0.1);
    // worst tuple pairs a holomorphic horizontal pair with theta or r
    const TensorIndex w = mixed.worst;
    const bool holo_first = w.i == 1 && w.j == 2;
    CHECK((holo_first || (w.i == 1 && (w.j == 3 || w.j == 4))));
}

TEST_CASE("oracle equals closed form over the full grid") {
    const std::vector<double> values{0.0, 0.7, 1.3, 2.0};
    double worst = 0.0;
    for (int n : {2, 3, 4})
        for (double r : {0.5, 1.0, 2.0, 4.0, 8.0})
            for (const auto& c : c_grid(n, values)) {
                const ModelPoint p(n, r, c);
                worst = std::max(worst, compare_tensors(component_table(p), oracle_tensor(p)).max_abs_diff);
            }
    CHECK(worst < 1e-9);
}

TEST_CASE("oracle at c = 2 is r-independent") {
    const TensorComparison d = compare_tensors(oracle_tensor(ModelPoint::complex_hyperbolic(3, 0.7)),
                                               oracle_tensor(ModelPoint::complex_hyperbolic(3, 6.0)));
    CHECK(d.max_abs_diff < 1e-9);
}

TEST_CASE("oracle handles custom warps") {
    // jet route
    const WarpProfile jet = WarpProfile::custom("stretched", [](const Jet2& r) { return cosh(r); },
                                                [](const Jet2& r) { return (1.0 + 0.1 * r * r) * sinh(2.0 * r); });
    // slope route with differenced second derivatives
    const WarpProfile fd = WarpProfile::custom_first_order(
        "stretched_fd", [](double r) { return std::pair{std::cosh(r), std::sinh(r)}; },
        [](double r) {
            return std::pair{(1 + 0.1 * r * r) * std::sinh(2 * r),
                             0.2 * r * std::sinh(2 * r) + (1 + 0.1 * r * r) * 2 * std::cosh(2 * r)};
        });
    for (double r : {0.6, 1.5, 3.0}) {
        const ModelPoint a(3, r, StructureConstants({1.1, 0.4}), jet);
        CHECK(compare_tensors(component_table(a), oracle_tensor(a)).max_abs_diff < 1e-9);
        const ModelPoint b(3, r, StructureConstants({1.1, 0.4}), fd);
        CHECK(compare_tensors(component_table(b), oracle_tensor(b)).max_abs_diff < 1e-9);
        CHECK(compare_tensors(component_table(a), component_table(b)).max_abs_diff < 1e-6);
    }
}
