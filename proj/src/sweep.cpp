#include "curvop/sweep.hpp"

#include "curvop/closed_form.hpp"
#include "curvop/errors.hpp"
#include "curvop/planes.hpp"
#include "curvop/report_io.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <mutex>
#include <thread>

namespace curvop {

std::vector<StructureConstants> CSampling::enumerate(int n) const {
    const auto pairs = static_cast<std::size_t>(n - 1);
    switch (kind) {
        case Kind::Explicit: {
            if (values.size() == 1) return {StructureConstants(std::vector<double>(pairs, values.front()))};
            if (values.size() != pairs) {
                throw DomainError("explicit c has " + std::to_string(values.size()) + " entries; n = " +
                                  std::to_string(n) + " needs " + std::to_string(pairs) + " (or 1 to broadcast)");
            }
            return {StructureConstants(values)};
        }
        case Kind::Grid: {
            if (points < 1) throw DomainError("c grid needs points >= 1");
            std::vector<StructureConstants> out;
            std::vector<int> digit(pairs, 0);
            while (true) {
                std::vector<double> c(pairs);
                for (std::size_t k = 0; k < pairs; ++k) {
                    c[k] = points == 1 ? lo : lo + (hi - lo) * digit[k] / (points - 1);
                }
                out.emplace_back(std::move(c));
                std::size_t k = 0;
                while (k < pairs && ++digit[k] == points) digit[k++] = 0;
                if (k == pairs) break;
            }
            return out;
        }
        case Kind::Random: {
            if (count < 0) throw DomainError("c random count must be >= 0");
            std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
            std::uniform_real_distribution<double> uni(lo, hi);
            std::vector<StructureConstants> out;
            for (int s = 0; s < count; ++s) {
                std::vector<double> c(pairs);
                for (double& x : c) x = uni(rng);
                out.emplace_back(std::move(c));
            }
            return out;
        }
    }
    return {};
}

ReportRow evaluate_row(int n, double r, const StructureConstants& c, EvalMode mode,
                       const std::vector<PlaneFrame>& planes, double tol, double cluster_tol) {
    const ModelPoint point(n, r, c);
    const CurvatureTensor tensor = curvature_for(point, mode);
    const EigenDecomposition eig = eigen_sym(assemble_operator(tensor, build_wedge_basis(n)));

    ReportRow row;
    row.n = n;
    row.r = r;
    row.c = c.values();
    row.mode = mode;
    row.max_op_eig = eig.eigenvalues.back();
    row.spectrum = cluster_spectrum(eig.eigenvalues, cluster_tol);
    const CurvatureRange range = sectional_extremes(tensor, planes);
    row.min_k = range.min_k;
    row.max_k = range.max_k;
    row.op_nonpositive = row.max_op_eig <= tol;
    row.pass = row.op_nonpositive;
    return row;
}

std::vector<ReportRow> sweep(const SweepGrid& grid) {
    struct Task {
        int n;
        double r;
        StructureConstants c;
    };
    std::vector<Task> tasks;
    for (int n : grid.ns) {
        const auto cs = grid.c.enumerate(n);
        for (double r : grid.rs)
            for (const auto& c : cs) tasks.push_back({n, r, c});
    }

    std::vector<std::vector<PlaneFrame>> planes_by_n;
    std::vector<int> distinct_n;
    for (int n : grid.ns) {
        if (std::find(distinct_n.begin(), distinct_n.end(), n) == distinct_n.end()) {
            distinct_n.push_back(n);
            planes_by_n.push_back(sample_planes(n, grid.plane_samples, grid.seed));
        }
    }
    auto planes_for = [&](int n) -> const std::vector<PlaneFrame>& {
        return planes_by_n[static_cast<std::size_t>(std::find(distinct_n.begin(), distinct_n.end(), n) -
                                                    distinct_n.begin())];
    };

    std::vector<ReportRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            try {
                const Task& t = tasks[k];
                rows[k] = evaluate_row(t.n, t.r, t.c, grid.mode, planes_for(t.n), grid.tol, grid.cluster_tol);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, grid.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string format_spectrum(const Spectrum& spectrum) {
    std::string s;
    for (const auto& e : spectrum.entries) {
        if (!s.empty()) s += ';';
        s += format_number(e.value) + ":" + std::to_string(e.multiplicity);
    }
    return s;
}

void write_sweep_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    std::size_t c_columns = 0;
    for (const auto& row : rows) c_columns = std::max(c_columns, row.c.size());

    std::size_t written = 0;
    auto check = [&] {
        if (!out) throw IoError("sweep CSV emission failed", written);
    };
    out << "n,r";
    for (std::size_t k = 0; k < c_columns; ++k) out << ",c" << (2 * k + 1);
    out << ",max_op_eig,min_K,max_K,spectrum,pass\n";
    check();
    for (const auto& row : rows) {
        out << row.n << ',' << format_number(row.r);
        for (std::size_t k = 0; k < c_columns; ++k) {
            out << ',';
            if (k < row.c.size()) out << format_number(row.c[k]);
        }
        out << ',' << format_number(row.max_op_eig) << ',' << format_number(row.min_k) << ','
            << format_number(row.max_k) << ',' << format_spectrum(row.spectrum) << ','
            << (row.pass ? "true" : "false") << '\n';
        check();
        ++written;
    }
    out.flush();
    check();
}

}  // namespace curvop
