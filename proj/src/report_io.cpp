#include "curvop/report_io.hpp"

#include <charconv>
#include <cmath>

namespace curvop {

std::string format_number(double value) {
    if (value == 0.0) return "0";  // folds -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, res.ptr};
}

void write_tensor_csv(std::ostream& out, const CurvatureTensor& tensor) {
    out << "i,j,k,l,value\n";
    tensor.for_each_canonical([&](const TensorIndex& t, double v) {
        if (v == 0.0) return;
        out << t.i << ',' << t.j << ',' << t.k << ',' << t.l << ',' << format_number(v) << '\n';
    });
}

nlohmann::json tensor_json(const CurvatureTensor& tensor) {
    nlohmann::json components = nlohmann::json::array();
    tensor.for_each_canonical([&](const TensorIndex& t, double v) {
        if (v == 0.0) return;
        components.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"l", t.l}, {"value", v}});
    });
    return {{"dim", tensor.dim()}, {"components", components}};
}

void write_matrix_csv(std::ostream& out, const SymmetricMatrix& matrix, const WedgeBasis& basis) {
    out << "basis";
    for (const auto& b : basis.elements()) out << ',' << to_string(b);
    out << '\n';
    for (std::size_t r = 0; r < matrix.order(); ++r) {
        out << to_string(basis[r]);
        for (std::size_t c = 0; c < matrix.order(); ++c) out << ',' << format_number(matrix(r, c));
        out << '\n';
    }
}

nlohmann::json matrix_json(const SymmetricMatrix& matrix, const WedgeBasis& basis) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& b : basis.elements()) labels.push_back(to_string(b));
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < matrix.order(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < matrix.order(); ++c) row.push_back(matrix(r, c));
        rows.push_back(row);
    }
    return {{"basis", labels}, {"matrix", rows}};
}

nlohmann::json spectrum_json(const Spectrum& spectrum) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : spectrum.entries) out.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
    return out;
}

nlohmann::json point_json(const ModelPoint& point) {
    return {{"n", point.n()}, {"r", point.r()}, {"c", point.c().values()}, {"warp", point.warp().label()}};
}

nlohmann::json comparison_json(const ModelPoint& point, const TensorComparison& comparison) {
    const auto& t = comparison.worst;
    return {{"point", point_json(point)},
            {"max_diff", comparison.max_abs_diff},
            {"worst_tuple", {t.i, t.j, t.k, t.l}}};
}

nlohmann::json row_json(const ReportRow& row) {
    return {{"n", row.n},
            {"r", row.r},
            {"c", row.c},
            {"mode", to_string(row.mode)},
            {"max_op_eig", row.max_op_eig},
            {"min_K", row.min_k},
            {"max_K", row.max_k},
            {"spectrum", spectrum_json(row.spectrum)},
            {"op_nonpositive", row.op_nonpositive},
            {"pass", row.pass}};
}

nlohmann::json certificate_json(const Certificate& cert) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : cert.verdicts) {
        verdicts.push_back({{"r", v.r},
                            {"stage", to_string(v.stage)},
                            {"c", v.c},
                            {"stretch", v.stretch},
                            {"max_eigenvalue", v.max_eigenvalue},
                            {"source", v.source},
                            {"quasi_static", v.quasi_static},
                            {"pass", v.pass}});
    }
    nlohmann::json out = {{"profile_hash", cert.profile_hash},
                          {"profile", cert.profile.to_json()},
                          {"tol", cert.tol},
                          {"verdict", cert.pass ? "PASS" : "FAIL"},
                          {"caveats", cert.caveats},
                          {"radii", verdicts}};
    if (const RadiusVerdict* w = cert.worst()) {
        out["worst"] = {{"r", w->r}, {"stage", to_string(w->stage)}, {"max_eigenvalue", w->max_eigenvalue},
                        {"source", w->source}};
    }
    return out;
}

nlohmann::json pinching_json(const PinchingResult& result, double eps) {
    nlohmann::json scans = nlohmann::json::array();
    for (const auto& s : result.scans) {
        scans.push_back({{"r", s.r}, {"min_K", s.min_k}, {"max_K", s.max_k}, {"inside", s.inside}});
    }
    nlohmann::json out = {{"eps", eps}, {"scans", scans}};
    out["r_est"] = result.r_est ? nlohmann::json(*result.r_est) : nlohmann::json(nullptr);
    return out;
}

}  // namespace curvop
