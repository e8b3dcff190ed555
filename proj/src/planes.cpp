#include "curvop/planes.hpp"

#include "curvop/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace curvop {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void normalize(std::vector<double>& a) {
    const double n = std::sqrt(dot(a, a));
    for (double& x : a) x /= n;
}

// Two passes of classical Gram-Schmidt; returns false if w collapses onto u.
bool orthonormalize(PlaneFrame& f) {
    normalize(f.u);
    for (int pass = 0; pass < 2; ++pass) {
        const double p = dot(f.u, f.w);
        for (std::size_t a = 0; a < f.w.size(); ++a) f.w[a] -= p * f.u[a];
    }
    const double n = std::sqrt(dot(f.w, f.w));
    if (!(n > 1e-8)) return false;
    for (double& x : f.w) x /= n;
    return true;
}

}  // namespace

std::vector<PlaneFrame> sample_planes(int n, int count, std::uint64_t seed) {
    if (n < 2) throw DomainError("sample_planes needs n >= 2");
    if (count < 1) throw DomainError("sample_planes needs count >= 1");
    const auto dim = static_cast<std::size_t>(2 * n);
    const auto total = static_cast<std::size_t>(count);

    std::vector<PlaneFrame> planes;
    planes.reserve(total);
    if (total >= dim * (dim - 1) / 2) {
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) {
                PlaneFrame f{std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
                f.u[i] = 1.0;
                f.w[j] = 1.0;
                planes.push_back(std::move(f));
            }
        }
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (planes.size() < total) {
        PlaneFrame f{std::vector<double>(dim), std::vector<double>(dim)};
        for (double& x : f.u) x = gauss(rng);
        for (double& x : f.w) x = gauss(rng);
        if (orthonormalize(f)) planes.push_back(std::move(f));
    }
    return planes;
}

PlaneCurvature::PlaneCurvature(const CurvatureTensor& tensor) : dim_(tensor.dim()) {
    for (std::size_t p = 0; p < tensor.pair_count(); ++p) pairs_.push_back(tensor.pair_at(p));
    rows_.resize(pairs_.size());
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
        for (std::size_t q = p; q < pairs_.size(); ++q) {
            const double v = tensor.at_pairs(p, q);
            if (v == 0.0) continue;
            entries_.push_back({p, q, p == q ? v : 2.0 * v});
            rows_[p].emplace_back(q, v);
            if (q != p) rows_[q].emplace_back(p, v);
        }
    }
}

void PlaneCurvature::bivector(const PlaneFrame& f, std::vector<double>& b) const {
    b.resize(pairs_.size());
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
        const auto i = static_cast<std::size_t>(pairs_[p].i - 1), j = static_cast<std::size_t>(pairs_[p].j - 1);
        b[p] = f.u[i] * f.w[j] - f.u[j] * f.w[i];
    }
}

double PlaneCurvature::operator()(const PlaneFrame& plane) const {
    thread_local std::vector<double> b;
    bivector(plane, b);
    double k = 0.0;
    for (const Entry& e : entries_) k += e.value * b[e.p] * b[e.q];
    return k;
}

void PlaneCurvature::gradient(const PlaneFrame& plane, std::vector<double>& grad_u,
                              std::vector<double>& grad_w) const {
    thread_local std::vector<double> b;
    bivector(plane, b);
    const auto dim = static_cast<std::size_t>(dim_);
    // G_ij = (R b)_{(i,j)}, antisymmetric; dK/du = 2 G w, dK/dw = -2 G u.
    std::vector<double> g(dim * dim, 0.0);
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
        double s = 0.0;
        for (const auto& [q, v] : rows_[p]) s += v * b[q];
        const auto i = static_cast<std::size_t>(pairs_[p].i - 1), j = static_cast<std::size_t>(pairs_[p].j - 1);
        g[i * dim + j] = s;
        g[j * dim + i] = -s;
    }
    grad_u.assign(dim, 0.0);
    grad_w.assign(dim, 0.0);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t c = 0; c < dim; ++c) {
            grad_u[a] += 2.0 * g[a * dim + c] * plane.w[c];
            grad_w[a] -= 2.0 * g[a * dim + c] * plane.u[c];
        }
    }
}

namespace {

// Projected gradient steps maximizing direction * K; returns the refined value.
double refine(const PlaneCurvature& curvature, PlaneFrame& plane, double direction, int steps) {
    double best = direction * curvature(plane);
    double eta = 0.02;
    std::vector<double> gu, gw;
    for (int step = 0; step < steps; ++step) {
        curvature.gradient(plane, gu, gw);
        // Tangent directions of the Grassmannian: components orthogonal to the plane.
        for (auto* g : {&gu, &gw}) {
            const double pu = dot(*g, plane.u), pw = dot(*g, plane.w);
            for (std::size_t a = 0; a < g->size(); ++a) (*g)[a] -= pu * plane.u[a] + pw * plane.w[a];
        }
        PlaneFrame trial = plane;
        for (std::size_t a = 0; a < trial.u.size(); ++a) {
            trial.u[a] += eta * direction * gu[a];
            trial.w[a] += eta * direction * gw[a];
        }
        if (!orthonormalize(trial)) {
            eta *= 0.5;
            continue;
        }
        const double value = direction * curvature(trial);
        if (value > best) {
            best = value;
            plane = std::move(trial);
            eta *= 1.5;
        } else {
            eta *= 0.5;
        }
    }
    return direction * best;
}

}  // namespace

CurvatureRange sectional_extremes(const CurvatureTensor& tensor, std::span<const PlaneFrame> planes,
                                  const PlaneSearchOptions& options) {
    if (planes.empty()) throw DomainError("sectional_extremes needs at least one plane");
    const PlaneCurvature curvature(tensor);

    std::vector<double> k(planes.size());
    for (std::size_t s = 0; s < planes.size(); ++s) k[s] = curvature(planes[s]);

    std::vector<std::size_t> order(planes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return k[a] < k[b]; });

    CurvatureRange range;
    range.min_k = k[order.front()];
    range.argmin = planes[order.front()];
    range.max_k = k[order.back()];
    range.argmax = planes[order.back()];

    const auto starts = std::min<std::size_t>(static_cast<std::size_t>(std::max(options.refine_starts, 0)), order.size());
    for (std::size_t s = 0; s < starts; ++s) {
        PlaneFrame low = planes[order[s]];
        const double lo = refine(curvature, low, -1.0, options.refine_steps);
        if (lo < range.min_k) {
            range.min_k = lo;
            range.argmin = std::move(low);
        }
        PlaneFrame high = planes[order[order.size() - 1 - s]];
        const double hi = refine(curvature, high, 1.0, options.refine_steps);
        if (hi > range.max_k) {
            range.max_k = hi;
            range.argmax = std::move(high);
        }
    }
    return range;
}

}  // namespace curvop
