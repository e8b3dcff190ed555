#include "curvop/operator.hpp"

#include "curvop/closed_form.hpp"
#include "curvop/errors.hpp"

#include <algorithm>
#include <cmath>

namespace curvop {

std::string to_string(EvalMode mode) { return mode == EvalMode::Exact ? "exact" : "asymptotic"; }

EvalMode parse_eval_mode(const std::string& text) {
    if (text == "exact") return EvalMode::Exact;
    if (text == "asymptotic") return EvalMode::Asymptotic;
    throw DomainError("unknown mode '" + text + "' (expected exact or asymptotic)");
}

CurvatureTensor curvature_for(const ModelPoint& point, EvalMode mode) {
    if (mode == EvalMode::Exact) return component_table(point);
    if (point.warp().kind() != WarpKind::CoshSinh2) {
        throw DomainError("asymptotic mode is defined only for the cosh/sinh(2r) warp");
    }
    return asymptotic_component_table(point.n(), point.c());
}

SymmetricMatrix assemble_operator(const CurvatureTensor& tensor, const WedgeBasis& basis) {
    if (tensor.dim() != 2 * basis.n()) {
        throw DomainError("tensor dimension " + std::to_string(tensor.dim()) + " does not match basis for n = " +
                          std::to_string(basis.n()));
    }
    const std::size_t m = basis.size();
    std::vector<std::size_t> lex(m);
    for (std::size_t p = 0; p < m; ++p) lex[p] = tensor.pair_index(basis[p].i, basis[p].j);

    SymmetricMatrix op(m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p; q < m; ++q) op.set(p, q, tensor.at_pairs(lex[p], lex[q]));
    return op;
}

double max_cross_block(const SymmetricMatrix& op, const WedgeBasis& basis) {
    double worst = 0.0;
    for (std::size_t p = 0; p < op.order(); ++p)
        for (std::size_t q = p + 1; q < op.order(); ++q)
            if (basis.block_of(p) != basis.block_of(q)) worst = std::max(worst, std::abs(op(p, q)));
    return worst;
}

namespace {

std::vector<std::size_t> holomorphic_positions(const WedgeBasis& basis) {
    std::vector<std::size_t> idx(basis.holomorphic_size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    return idx;
}

}  // namespace

SymmetricMatrix holomorphic_block(const ModelPoint& point, EvalMode mode) {
    const WedgeBasis basis = build_wedge_basis(point.n());
    return assemble_operator(curvature_for(point, mode), basis).principal(holomorphic_positions(basis));
}

SymmetricMatrix mixed_block(const ModelPoint& point, const Bivector& a, const Bivector& b, EvalMode mode) {
    const WedgeBasis basis = build_wedge_basis(point.n());
    const MixedBlock& block = basis.find_block(a, b);
    const CurvatureTensor tensor = curvature_for(point, mode);
    const auto& [x, y] = block.members;
    SymmetricMatrix m(2);
    m.set(0, 0, tensor(x.i, x.j, x.i, x.j));
    m.set(0, 1, tensor(x.i, x.j, y.i, y.j));
    m.set(1, 1, tensor(y.i, y.j, y.i, y.j));
    return m;
}

double det_holomorphic_closed_form(const StructureConstants& c) {
    const std::size_t count = c.size();
    if (count > 30) throw DomainError("closed-form determinant enumerates 2^(n-1) subsets; n too large");
    double total = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
        double term = 1.0;
        int k = 0;
        for (std::size_t bit = 0; bit < count; ++bit) {
            if (mask & (std::size_t{1} << bit)) {
                term *= c.pair(bit) * c.pair(bit);
                ++k;
            }
        }
        total += 4.0 * (k + 1) / std::pow(4.0, k) * term;
    }
    return total;
}

double determinant(const SymmetricMatrix& matrix) {
    const std::size_t m = matrix.order();
    std::vector<double> a(m * m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) a[r * m + c] = matrix(r, c);

    double det = 1.0;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(a[r * m + col]) > std::abs(a[pivot * m + col])) pivot = r;
        if (a[pivot * m + col] == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t c = 0; c < m; ++c) std::swap(a[pivot * m + c], a[col * m + c]);
            det = -det;
        }
        const double d = a[col * m + col];
        det *= d;
        for (std::size_t r = col + 1; r < m; ++r) {
            const double f = a[r * m + col] / d;
            for (std::size_t c = col; c < m; ++c) a[r * m + c] -= f * a[col * m + c];
        }
    }
    return det;
}

std::vector<double> leading_principal_minors(const SymmetricMatrix& matrix) {
    std::vector<double> minors;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < matrix.order(); ++k) {
        idx.push_back(k);
        minors.push_back(determinant(matrix.principal(idx)));
    }
    return minors;
}

std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::NegativeDefinite: return "negative definite";
        case Definiteness::NegativeSemidefinite: return "negative semidefinite";
        case Definiteness::Indefinite: return "indefinite";
        case Definiteness::PositiveSemidefinite: return "positive semidefinite";
        case Definiteness::PositiveDefinite: return "positive definite";
    }
    return "unknown";
}

DefinitenessReport definiteness(const SymmetricMatrix& matrix, double tol) {
    DefinitenessReport report;
    if (matrix.order() == 0) {
        report.classification = Definiteness::NegativeSemidefinite;
        return report;
    }
    const EigenDecomposition eig = eigen_sym(matrix);
    report.min_eigenvalue = eig.eigenvalues.front();
    report.max_eigenvalue = eig.eigenvalues.back();
    report.margin = -report.max_eigenvalue;
    if (report.max_eigenvalue < -tol) {
        report.classification = Definiteness::NegativeDefinite;
    } else if (report.max_eigenvalue <= tol) {
        report.classification = Definiteness::NegativeSemidefinite;
    } else if (report.min_eigenvalue > tol) {
        report.classification = Definiteness::PositiveDefinite;
    } else if (report.min_eigenvalue >= -tol) {
        report.classification = Definiteness::PositiveSemidefinite;
    } else {
        report.classification = Definiteness::Indefinite;
    }
    return report;
}

DecompositionBound decomposition_bound(const ModelPoint& point) {
    const WedgeBasis basis = build_wedge_basis(point.n());
    DecompositionBound bound;

    const SymmetricMatrix holo = holomorphic_block(point, EvalMode::Asymptotic);
    bound.holomorphic_max = eigen_sym(holo).eigenvalues.back();
    bound.worst_block = "holomorphic";

    const CurvatureTensor exact = component_table(point);
    bound.mixed_max = -std::numeric_limits<double>::infinity();
    std::string worst_mixed;
    for (const MixedBlock& block : basis.mixed_blocks()) {
        const auto& [x, y] = block.members;
        const double a = exact(x.i, x.j, x.i, x.j);
        const double b = exact(x.i, x.j, y.i, y.j);
        const double d = exact(y.i, y.j, y.i, y.j);
        // Larger root of the 2x2 characteristic polynomial.
        const double top = 0.5 * (a + d) + std::sqrt(0.25 * (a - d) * (a - d) + b * b);
        if (top > bound.mixed_max) {
            bound.mixed_max = top;
            worst_mixed = to_string(x) + "," + to_string(y);
        }
    }
    if (bound.mixed_max > bound.holomorphic_max) bound.worst_block = worst_mixed;
    return bound;
}

EigenDecomposition operator_spectrum(const ModelPoint& point, EvalMode mode, double tol) {
    const WedgeBasis basis = build_wedge_basis(point.n());
    return eigen_sym(assemble_operator(curvature_for(point, mode), basis), tol);
}

}  // namespace curvop
