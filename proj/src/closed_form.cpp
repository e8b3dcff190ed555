#include "curvop/closed_form.hpp"

#include "curvop/errors.hpp"

#include <cmath>
#include <string>

namespace curvop {

namespace {

// Per-point scalar coefficients of the component families.
struct Coefficients {
    double totally_real;      // R_{ijij}
    double radial;            // R_{iNiN}
    double theta_radial;      // R_{TNTN}
    double theta_base;        // R_{iTiT} without the c^2 term
    double theta_c2;          // coefficient of c_i^2 in R_{iTiT}
    double holo_base;         // R_{i,i+1,i,i+1} without the c^2 term
    double holo_c2;           // coefficient of c_i^2 in R_{i,i+1,i,i+1}
    double vertical_c;        // coefficient of c_i in R_{i,i+1,T,N}
    double cross_base;        // R_{i,i+1,k,k+1} without the c_i c_k term
    double cross_cc;          // coefficient of c_i c_k
};

Coefficients exact_coefficients(const WarpJet& w) {
    const double h2 = w.h * w.h;
    const double h4 = h2 * h2;
    const double v2 = w.v * w.v;
    const double slope = w.dh / w.h;
    Coefficients k{};
    k.totally_real = -1.0 / h2 - slope * slope;
    k.radial = -w.d2h / w.h;
    k.theta_radial = -w.d2v / w.v;
    k.theta_base = -(w.dh * w.dv) / (w.h * w.v);
    k.theta_c2 = v2 / (16.0 * h4);
    k.holo_base = -slope * slope - 4.0 / h2;
    k.holo_c2 = -3.0 * v2 / (16.0 * h4);
    k.vertical_c = -(w.v / (2.0 * h2)) * (w.dv / w.v - slope);
    k.cross_base = -2.0 / h2;
    k.cross_cc = -v2 / (8.0 * h4);
    return k;
}

Coefficients asymptotic_coefficients() {
    Coefficients k{};
    k.totally_real = -1.0;
    k.radial = -1.0;
    k.theta_radial = -4.0;
    k.theta_base = -2.0;
    k.theta_c2 = 0.25;
    k.holo_base = -1.0;
    k.holo_c2 = -0.75;
    k.vertical_c = -1.0;
    k.cross_base = 0.0;
    k.cross_cc = -0.5;
    return k;
}

CurvatureTensor fill(int n, const StructureConstants& c, const Coefficients& k) {
    const int dim = 2 * n;
    const int horizontal = dim - 2;
    const int T = theta_index(n);
    const int N = radial_index(n);
    CurvatureTensor R(dim);

    for (int i = 1; i <= horizontal; ++i) {
        const double ci = c.for_index(i);
        for (int j = i + 1; j <= horizontal; ++j) {
            if (j != holomorphic_partner(i, n)) R.set(i, j, i, j, k.totally_real);
        }
        R.set(i, T, i, T, k.theta_base + k.theta_c2 * ci * ci);
        R.set(i, N, i, N, k.radial);
    }
    R.set(T, N, T, N, k.theta_radial);

    for (int i = 1; i < horizontal; i += 2) {
        const double ci = c.for_index(i);
        R.set(i, i + 1, i, i + 1, k.holo_base + k.holo_c2 * ci * ci);

        const double a = k.vertical_c * ci;
        R.set(i, i + 1, T, N, a);
        R.set(i, T, i + 1, N, 0.5 * a);
        R.set(i, N, i + 1, T, -0.5 * a);

        for (int kk = i + 2; kk < horizontal; kk += 2) {
            const double b = k.cross_base + k.cross_cc * ci * c.for_index(kk);
            R.set(i, i + 1, kk, kk + 1, b);
            R.set(i, kk, i + 1, kk + 1, 0.5 * b);
            R.set(i, kk + 1, i + 1, kk, -0.5 * b);
        }
    }
    return R;
}

}  // namespace

CurvatureTensor component_table(const ModelPoint& point) {
    return fill(point.n(), point.c(), exact_coefficients(point.jet()));
}

CurvatureTensor asymptotic_component_table(int n, const StructureConstants& c) {
    if (n < 2) throw DomainError("complex dimension n must be >= 2");
    if (c.size() != static_cast<std::size_t>(n - 1)) {
        throw DomainError("expected " + std::to_string(n - 1) + " structure constants");
    }
    return fill(n, c, asymptotic_coefficients());
}

double sectional_curvature(const CurvatureTensor& tensor, std::span<const double> u, std::span<const double> w) {
    const auto dim = static_cast<std::size_t>(tensor.dim());
    if (u.size() != dim || w.size() != dim) {
        throw DomainError("plane vectors must have " + std::to_string(dim) + " frame coordinates");
    }
    double uu = 0.0, uw = 0.0, ww = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
        uu += u[a] * u[a];
        uw += u[a] * w[a];
        ww += w[a] * w[a];
    }
    if (uu * ww - uw * uw < kDegeneratePlaneGram) {
        throw DegeneratePlaneError("vectors do not span a 2-plane (Gram determinant below 1e-12)");
    }

    std::vector<double> e1(dim), e2(dim);
    const double nu = std::sqrt(uu);
    for (std::size_t a = 0; a < dim; ++a) e1[a] = u[a] / nu;
    double proj = 0.0;
    for (std::size_t a = 0; a < dim; ++a) proj += e1[a] * w[a];
    double norm2 = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
        e2[a] = w[a] - proj * e1[a];
        norm2 += e2[a] * e2[a];
    }
    const double nw = std::sqrt(norm2);
    for (double& x : e2) x /= nw;

    // K = B^T R B with B the coordinates of e1 ^ e2 on lexicographic pairs.
    std::vector<double> b(tensor.pair_count());
    for (std::size_t p = 0; p < b.size(); ++p) {
        const auto& pr = tensor.pair_at(p);
        const auto i = static_cast<std::size_t>(pr.i - 1), j = static_cast<std::size_t>(pr.j - 1);
        b[p] = e1[i] * e2[j] - e1[j] * e2[i];
    }
    double k = 0.0;
    for (std::size_t p = 0; p < b.size(); ++p) {
        if (b[p] == 0.0) continue;
        for (std::size_t q = 0; q < b.size(); ++q) k += b[p] * tensor.at_pairs(p, q) * b[q];
    }
    return k;
}

}  // namespace curvop
