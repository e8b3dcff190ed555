#include "curvop/koszul.hpp"

#include "curvop/errors.hpp"

#include <algorithm>
#include <cmath>

namespace curvop {

namespace {

Dual operator+(Dual a, Dual b) { return {a.value + b.value, a.slope + b.slope}; }
Dual operator-(Dual a, Dual b) { return {a.value - b.value, a.slope - b.slope}; }
Dual operator*(Dual a, Dual b) { return {a.value * b.value, a.slope * b.value + a.value * b.slope}; }
Dual operator*(double s, Dual a) { return {s * a.value, s * a.slope}; }
Dual operator/(Dual a, Dual b) {
    return {a.value / b.value, (a.slope * b.value - a.value * b.slope) / (b.value * b.value)};
}

// <X_a, X_a> as a jet in r.
std::vector<Jet2> metric_jets(const ModelPoint& point) {
    const WarpJet w = point.jet();
    const Jet2 h = w.h_jet();
    const Jet2 v = w.v_jet();
    std::vector<Jet2> g(static_cast<std::size_t>(point.dim()), h * h);
    g[static_cast<std::size_t>(theta_index(point.n()) - 1)] = 0.25 * (v * v);
    g[static_cast<std::size_t>(radial_index(point.n()) - 1)] = Jet2::constant(1.0);
    return g;
}

}  // namespace

BracketTable bracket_table(const ModelPoint& point) {
    BracketTable table(point.dim());
    const int theta = theta_index(point.n());
    for (int i = 1; i < theta - 1; i += 2) {
        table.set_antisymmetric(i, i + 1, theta, point.c().for_index(i));
    }
    return table;
}

double ConnectionCoefficients::torsion_residual(const BracketTable& brackets) const {
    double worst = 0.0;
    for (int a = 1; a <= dim_; ++a)
        for (int b = 1; b <= dim_; ++b)
            for (int c = 1; c <= dim_; ++c) {
                const double x = gamma(a, b, c).value, y = gamma(b, a, c).value, z = brackets(a, b, c);
                const double scale = std::max({1.0, std::abs(x), std::abs(y), std::abs(z)});
                worst = std::max(worst, std::abs(x - y - z) / scale);
            }
    return worst;
}

double ConnectionCoefficients::metric_residual() const {
    // Only X_{dim} = d/dr differentiates the r-dependent inner products.
    double worst = 0.0;
    for (int a = 1; a <= dim_; ++a)
        for (int b = 1; b <= dim_; ++b)
            for (int c = 1; c <= dim_; ++c) {
                const Dual lhs = metric_derivative(a, b, c);
                const Dual x = gamma(a, b, c) * metric(c), y = gamma(a, c, b) * metric(b);
                const double scale = std::max({1.0, std::abs(lhs.value), std::abs(x.value), std::abs(y.value)});
                const double slope_scale = std::max({1.0, std::abs(lhs.slope), std::abs(x.slope), std::abs(y.slope)});
                worst = std::max({worst, std::abs(lhs.value - x.value - y.value) / scale,
                                  std::abs(lhs.slope - x.slope - y.slope) / slope_scale});
            }
    return worst;
}

ConnectionCoefficients connection(const ModelPoint& point) {
    const int dim = point.dim();
    const BracketTable brackets = bracket_table(point);
    const std::vector<Jet2> g = metric_jets(point);

    const ConnectionCoefficients metric_only(dim, g, {});
    auto metric = [&](int a) { return metric_only.metric(a); };
    auto derivative = [&](int a, int b, int c) { return metric_only.metric_derivative(a, b, c); };
    // <[X_a, X_b], X_c>
    auto bracket = [&](int a, int b, int c) { return brackets(a, b, c) * metric(c); };

    std::vector<Dual> gamma(static_cast<std::size_t>(dim * dim * dim));
    for (int a = 1; a <= dim; ++a)
        for (int b = 1; b <= dim; ++b)
            for (int c = 1; c <= dim; ++c) {
                // Koszul: 2<nabla_a X_b, X_c> = X_a<X_b,X_c> + X_b<X_a,X_c> - X_c<X_a,X_b>
                //         + <[X_a,X_b],X_c> - <[X_a,X_c],X_b> - <[X_b,X_c],X_a>
                const Dual lowered = 0.5 * (derivative(a, b, c) + derivative(b, a, c) - derivative(c, a, b) +
                                            bracket(a, b, c) - bracket(a, c, b) - bracket(b, c, a));
                gamma[static_cast<std::size_t>(((a - 1) * dim + (b - 1)) * dim + (c - 1))] = lowered / metric(c);
            }

    return {dim, g, std::move(gamma)};
}

namespace {

// Textbook-convention <R(Y_a,Y_b)Y_c,Y_d> in the orthonormal frame.
CurvatureTensor raw_tensor(const ModelPoint& point) {
    const int dim = point.dim();
    const int horizontal = dim - 2;
    const BracketTable brackets = bracket_table(point);
    const ConnectionCoefficients conn = connection(point);

    CurvatureTensor out(dim);
    std::vector<double> norm(static_cast<std::size_t>(dim + 1));
    for (int a = 1; a <= dim; ++a) norm[static_cast<std::size_t>(a)] = std::sqrt(conn.metric(a).value);

    // J Y_i = Y_{i+1} for odd horizontal i; <Y_x, J Y_z> = jm(x, z).
    auto jm = [&](int x, int z) {
        if (x > horizontal || z > horizontal || holomorphic_partner(z, point.n()) != x) return 0.0;
        return (z % 2 == 1) ? 1.0 : -1.0;
    };
    auto delta = [](int x, int z) { return x == z ? 1.0 : 0.0; };
    const double h2 = point.jet().h * point.jet().h;

    for (int a = 1; a <= dim; ++a) {
        for (int b = a + 1; b <= dim; ++b) {
            for (int c = 1; c <= dim; ++c) {
                for (int d = c + 1; d <= dim; ++d) {
                    if (out.pair_index(a, b) > out.pair_index(c, d)) continue;
                    // R^d_{abc} = X_a(G^d_bc) - X_b(G^d_ac) + G^e_bc G^d_ae - G^e_ac G^d_be - [X_a,X_b]^e G^d_ec
                    double r = 0.0;
                    if (a == dim) r += conn.gamma(b, c, d).slope;
                    if (b == dim) r -= conn.gamma(a, c, d).slope;
                    for (int e = 1; e <= dim; ++e) {
                        r += conn.gamma(b, c, e).value * conn.gamma(a, e, d).value -
                             conn.gamma(a, c, e).value * conn.gamma(b, e, d).value -
                             brackets(a, b, e) * conn.gamma(e, c, d).value;
                    }
                    double value = r * conn.metric(d).value /
                                   (norm[static_cast<std::size_t>(a)] * norm[static_cast<std::size_t>(b)] *
                                    norm[static_cast<std::size_t>(c)] * norm[static_cast<std::size_t>(d)]);

                    if (a <= horizontal && b <= horizontal && c <= horizontal && d <= horizontal) {
                        // Base of constant holomorphic curvature -4, scaled by 1/h^2.
                        const double base = delta(a, c) * delta(b, d) - delta(a, d) * delta(b, c) +
                                            jm(a, c) * jm(b, d) - jm(a, d) * jm(b, c) + 2.0 * jm(a, b) * jm(c, d);
                        value += base / h2;
                    }
                    out.set(a, b, c, d, value);
                }
            }
        }
    }
    return out;
}

}  // namespace

double oracle_sign() {
    static const double sign = [] {
        const double k = raw_tensor(ModelPoint::complex_hyperbolic(2, 1.0))(1, 2, 1, 2);
        if (std::abs(std::abs(k) - 4.0) > 1e-9) {
            throw NumericError("oracle reference curvature K(Y1,Y2) has magnitude " + std::to_string(std::abs(k)) +
                               ", expected 4");
        }
        return k < 0.0 ? 1.0 : -1.0;
    }();
    return sign;
}

CurvatureTensor oracle_tensor(const ModelPoint& point) {
    const double sign = oracle_sign();
    const CurvatureTensor raw = raw_tensor(point);
    CurvatureTensor out(raw.dim());
    raw.for_each_canonical([&](const TensorIndex& t, double value) { out.set(t.i, t.j, t.k, t.l, sign * value); });
    return out;
}

TensorComparison compare_tensors(const CurvatureTensor& a, const CurvatureTensor& b) {
    if (a.dim() != b.dim()) {
        throw DomainError("cannot compare tensors of dimension " + std::to_string(a.dim()) + " and " +
                          std::to_string(b.dim()));
    }
    TensorComparison result;
    bool first = true;
    a.for_each_canonical([&](const TensorIndex& t, double value) {
        const double diff = std::abs(value - b(t.i, t.j, t.k, t.l));
        if (first || diff > result.max_abs_diff) {
            result.max_abs_diff = diff;
            result.worst = t;
            first = false;
        }
    });
    return result;
}

}  // namespace curvop
