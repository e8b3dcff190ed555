#pragma once

#include "curvop/eigen.hpp"
#include "curvop/operator.hpp"
#include "curvop/planes.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace curvop {

// How structure constants are chosen for each n of a sweep.
struct CSampling {
    enum class Kind { Explicit, Grid, Random };

    Kind kind = Kind::Explicit;
    // Explicit: one value per pair, or a single value broadcast to every pair.
    std::vector<double> values{2.0};
    // Grid and Random: range of each constant.
    double lo = 0.0;
    double hi = 2.0;
    int points = 3;          // Grid: values per pair
    int count = 8;           // Random: vectors per n
    std::uint64_t seed = 1;  // Random

    [[nodiscard]] std::vector<StructureConstants> enumerate(int n) const;
};

struct SweepGrid {
    std::vector<int> ns;
    std::vector<double> rs;
    CSampling c;
    EvalMode mode = EvalMode::Exact;
    int plane_samples = 256;
    std::uint64_t seed = 1;  // plane sampling
    double tol = 1e-9;       // nonpositivity threshold on the largest operator eigenvalue
    double cluster_tol = kDefaultClusterTol;
    int threads = 1;
};

struct ReportRow {
    int n = 0;
    double r = 0.0;
    std::vector<double> c;
    EvalMode mode = EvalMode::Exact;
    double max_op_eig = 0.0;
    double min_k = 0.0;
    double max_k = 0.0;
    Spectrum spectrum;
    bool op_nonpositive = false;  // max_op_eig <= tol
    bool pass = false;
};

// Evaluates one grid point.
[[nodiscard]] ReportRow evaluate_row(int n, double r, const StructureConstants& c, EvalMode mode,
                                     const std::vector<PlaneFrame>& planes, double tol, double cluster_tol);

// One row per (n, r, c) in grid order: n outermost, then r, then c.
// Rows are independent and may be computed on `threads` workers; the output
// order does not depend on the thread count.
[[nodiscard]] std::vector<ReportRow> sweep(const SweepGrid& grid);

// CSV: n, r, c1, c3, ..., max_op_eig, min_K, max_K, spectrum, pass.
// c columns are padded to the largest n among the rows. Throws IoError when
// the stream fails.
void write_sweep_csv(std::ostream& out, const std::vector<ReportRow>& rows);

// "value:mult" pairs joined by ';'.
[[nodiscard]] std::string format_spectrum(const Spectrum& spectrum);

}  // namespace curvop
