#pragma once

#include "curvop/certificate.hpp"
#include "curvop/curvature_tensor.hpp"
#include "curvop/eigen.hpp"
#include "curvop/koszul.hpp"
#include "curvop/pinching.hpp"
#include "curvop/symmetric_matrix.hpp"
#include "curvop/sweep.hpp"
#include "curvop/wedge_basis.hpp"

#include <ostream>
#include <string>

#include "json.hpp"

namespace curvop {

// Shortest decimal that round-trips to the same double.
[[nodiscard]] std::string format_number(double value);

// Canonical tuples with a nonzero stored value: "i,j,k,l,value".
void write_tensor_csv(std::ostream& out, const CurvatureTensor& tensor);
[[nodiscard]] nlohmann::json tensor_json(const CurvatureTensor& tensor);

// Header row of bivector labels, then one row per basis element.
void write_matrix_csv(std::ostream& out, const SymmetricMatrix& matrix, const WedgeBasis& basis);
[[nodiscard]] nlohmann::json matrix_json(const SymmetricMatrix& matrix, const WedgeBasis& basis);

[[nodiscard]] nlohmann::json spectrum_json(const Spectrum& spectrum);
[[nodiscard]] nlohmann::json point_json(const ModelPoint& point);
[[nodiscard]] nlohmann::json comparison_json(const ModelPoint& point, const TensorComparison& comparison);
[[nodiscard]] nlohmann::json row_json(const ReportRow& row);
[[nodiscard]] nlohmann::json certificate_json(const Certificate& cert);
[[nodiscard]] nlohmann::json pinching_json(const PinchingResult& result, double eps);

}  // namespace curvop
