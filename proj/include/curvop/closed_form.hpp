#pragma once

#include "curvop/curvature_tensor.hpp"
#include "curvop/frame.hpp"

#include <span>
#include <vector>

namespace curvop {

// Exact curvature of the warped metric at `point` in the orthonormal frame
// Y_i = X_i / h, Y_{2n-1} = 2 dtheta / v, Y_{2n} = dr.
//
// Sign convention: R_{ijij} is the sectional curvature of span(Y_i, Y_j).
// Nonzero families (i, k odd horizontal pair leaders, k != i; j horizontal,
// not in i's pair; T = 2n-1, N = 2n):
//
//   R_{ijij}         = -1/h^2 - (h'/h)^2
//   R_{i,i+1,i,i+1}  = -(h'/h)^2 - 4/h^2 - 3 c_i^2 v^2 / (16 h^4)
//   R_{iTiT}         = -h'v'/(hv) + c_i^2 v^2 / (16 h^4)
//   R_{iNiN}         = -h''/h
//   R_{TNTN}         = -v''/v
//   R_{i,i+1,T,N}    = 2 R_{i,T,i+1,N} = -2 R_{i,N,i+1,T} = -c_i v/(2h^2) (ln v/h)'
//   R_{i,i+1,k,k+1}  = 2 R_{i,k,i+1,k+1} = -2 R_{i,k+1,i+1,k} = -2/h^2 - c_i c_k v^2/(8 h^4)
[[nodiscard]] CurvatureTensor component_table(const ModelPoint& point);

// Formal large-r limit of component_table for h = cosh, v = sinh(2r):
// tanh -> 1, sech -> 0, v/(2h^2) -> 1. Entries are rationals times c-monomials.
[[nodiscard]] CurvatureTensor asymptotic_component_table(int n, const StructureConstants& c);

// Gram determinant below which a pair of vectors is rejected as degenerate.
inline constexpr double kDegeneratePlaneGram = 1e-12;

// K(span(u, w)) for u, w in frame coordinates. Throws DegeneratePlaneError for
// (near-)dependent inputs and DomainError on a size mismatch.
[[nodiscard]] double sectional_curvature(const CurvatureTensor& tensor, std::span<const double> u,
                                         std::span<const double> w);

}  // namespace curvop
