#pragma once

#include "curvop/curvature_tensor.hpp"
#include "curvop/eigen.hpp"
#include "curvop/frame.hpp"
#include "curvop/symmetric_matrix.hpp"
#include "curvop/wedge_basis.hpp"

#include <string>
#include <vector>

namespace curvop {

enum class EvalMode { Exact, Asymptotic };

[[nodiscard]] std::string to_string(EvalMode mode);
// "exact" or "asymptotic"; DomainError otherwise.
[[nodiscard]] EvalMode parse_eval_mode(const std::string& text);

// Exact tensor, or its formal large-r limit (requires the cosh/sinh(2r) warp).
[[nodiscard]] CurvatureTensor curvature_for(const ModelPoint& point, EvalMode mode);

// Matrix of the curvature operator in the ordered basis: entry (p, q) is
// R_{ijkl} for basis[p] = (i,j), basis[q] = (k,l).
[[nodiscard]] SymmetricMatrix assemble_operator(const CurvatureTensor& tensor, const WedgeBasis& basis);

// Largest |entry| coupling two different blocks of the basis descriptor.
[[nodiscard]] double max_cross_block(const SymmetricMatrix& op, const WedgeBasis& basis);

// n x n block on the holomorphic bivectors (Y1^Y2, Y3^Y4, ..., Y_{2n-1}^Y_{2n}).
[[nodiscard]] SymmetricMatrix holomorphic_block(const ModelPoint& point, EvalMode mode);

// 2 x 2 block spanned by the bivectors a, b; DomainError unless {a, b} is one
// of the basis' two-element blocks.
[[nodiscard]] SymmetricMatrix mixed_block(const ModelPoint& point, const Bivector& a, const Bivector& b,
                                          EvalMode mode);

// det(-H_n) as the subset polynomial in the c_i^2: a term with k factors
// carries the coefficient 4(k+1)/4^k.
[[nodiscard]] double det_holomorphic_closed_form(const StructureConstants& c);

// Gaussian elimination with partial pivoting.
[[nodiscard]] double determinant(const SymmetricMatrix& matrix);
[[nodiscard]] std::vector<double> leading_principal_minors(const SymmetricMatrix& matrix);

enum class Definiteness {
    NegativeDefinite,
    NegativeSemidefinite,
    Indefinite,
    PositiveSemidefinite,
    PositiveDefinite,
};

[[nodiscard]] std::string to_string(Definiteness d);

struct DefinitenessReport {
    Definiteness classification = Definiteness::Indefinite;
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    // Distance of the largest eigenvalue below zero (negative when it is positive).
    double margin = 0.0;
};

// Classification from the extreme eigenvalues with a +-tol band around zero.
// Zero-within-tol spectra classify as negative semidefinite.
[[nodiscard]] DefinitenessReport definiteness(const SymmetricMatrix& matrix, double tol);

// Largest operator eigenvalue from the block decomposition used for large r:
// asymptotic holomorphic block together with the exact 2 x 2 blocks.
struct DecompositionBound {
    double holomorphic_max = 0.0;
    double mixed_max = 0.0;
    std::string worst_block;  // "holomorphic" or the two bivectors of the worst 2x2 block

    [[nodiscard]] double max_eigenvalue() const { return std::max(holomorphic_max, mixed_max); }
};

[[nodiscard]] DecompositionBound decomposition_bound(const ModelPoint& point);

// Eigenvalues of the full operator at the point, ascending.
[[nodiscard]] EigenDecomposition operator_spectrum(const ModelPoint& point, EvalMode mode,
                                                   double tol = kDefaultEigenTol);

}  // namespace curvop
