#include "cli_app.hpp"

#include "curvop/certificate.hpp"
#include "curvop/closed_form.hpp"
#include "curvop/errors.hpp"
#include "curvop/koszul.hpp"
#include "curvop/operator.hpp"
#include "curvop/pinching.hpp"
#include "curvop/report_io.hpp"
#include "curvop/stage_profile.hpp"
#include "curvop/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace curvop::cli {

namespace {

using nlohmann::json;

struct Common {
    std::vector<int> n{2};
    std::vector<double> r{2.0};
    std::vector<double> c{2.0};
    std::string mode = "exact";
    double tol = 1e-9;
    std::uint64_t seed = 1;
    int samples = 4096;
    std::string out;
    std::string format;  // empty: the verb default
};

// Writes to --out through a ".partial" file renamed on success, so an
// interrupted run leaves the marker file instead of a truncated report.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {
        if (!path_.empty()) {
            file_.open(path_ + ".partial", std::ios::binary | std::ios::trunc);
            if (!file_) throw IoError("cannot open " + path_ + ".partial for writing", 0);
        }
    }

    std::ostream& stream() { return path_.empty() ? fallback_ : file_; }

    void commit() {
        if (path_.empty()) return;
        file_.close();
        if (!file_) throw IoError("failed writing " + path_ + ".partial", 0);
        std::filesystem::rename(path_ + ".partial", path_);
    }

private:
    std::string path_;
    std::ostream& fallback_;
    std::ofstream file_;
};

void add_point_options(CLI::App* app, Common& o) {
    app->add_option("--n", o.n, "complex dimension(s), comma separated")->delimiter(',');
    app->add_option("--r", o.r, "radius/radii, comma separated")->delimiter(',');
    app->add_option("--c", o.c, "structure constants c1,c3,...; one value is broadcast")->delimiter(',');
    app->add_option("--mode", o.mode, "exact | asymptotic")->check(CLI::IsMember({"exact", "asymptotic"}));
}

void add_output_options(CLI::App* app, Common& o, const std::string& default_format) {
    app->add_option("--out", o.out, "output file (default stdout)");
    app->add_option("--format", o.format, "csv | json (default " + default_format + ")")
        ->check(CLI::IsMember({"csv", "json"}));
}

StructureConstants constants_for(const Common& o, int n) {
    CSampling s;
    s.values = o.c;
    return s.enumerate(n).front();
}

ModelPoint single_point(const Common& o) {
    if (o.n.size() != 1 || o.r.size() != 1) throw DomainError("this command takes a single --n and --r");
    return {o.n.front(), o.r.front(), constants_for(o, o.n.front())};
}

void emit_json(const Common& o, std::ostream& out, const json& doc) {
    Sink sink(o.out, out);
    sink.stream() << doc.dump(2) << '\n';
    sink.commit();
}

// --- verbs ---------------------------------------------------------------

int cmd_tensor(const Common& o, std::ostream& out) {
    const ModelPoint p = single_point(o);
    const CurvatureTensor t = curvature_for(p, parse_eval_mode(o.mode));
    Sink sink(o.out, out);
    if (o.format == "json") {
        json doc = tensor_json(t);
        doc["point"] = point_json(p);
        doc["mode"] = o.mode;
        sink.stream() << doc.dump(2) << '\n';
    } else {
        write_tensor_csv(sink.stream(), t);
    }
    sink.commit();
    return kExitPass;
}

int cmd_operator(const Common& o, std::ostream& out) {
    const ModelPoint p = single_point(o);
    const WedgeBasis basis = build_wedge_basis(p.n());
    const SymmetricMatrix op = assemble_operator(curvature_for(p, parse_eval_mode(o.mode)), basis);
    Sink sink(o.out, out);
    if (o.format == "json") {
        json doc = matrix_json(op, basis);
        doc["point"] = point_json(p);
        doc["mode"] = o.mode;
        sink.stream() << doc.dump(2) << '\n';
    } else {
        write_matrix_csv(sink.stream(), op, basis);
    }
    sink.commit();
    return kExitPass;
}

int cmd_eigen(const Common& o, double cluster_tol, std::ostream& out) {
    const ModelPoint p = single_point(o);
    const EigenDecomposition eig = operator_spectrum(p, parse_eval_mode(o.mode));
    const Spectrum spectrum = cluster_spectrum(eig.eigenvalues, cluster_tol);
    Sink sink(o.out, out);
    if (o.format == "json") {
        sink.stream() << json{{"point", point_json(p)},
                              {"mode", o.mode},
                              {"eigenvalues", eig.eigenvalues},
                              {"spectrum", spectrum_json(spectrum)},
                              {"residual", eig.residual}}
                             .dump(2)
                      << '\n';
    } else {
        sink.stream() << "value,multiplicity\n";
        for (const auto& e : spectrum.entries) sink.stream() << format_number(e.value) << ',' << e.multiplicity << '\n';
    }
    sink.commit();
    return kExitPass;
}

int cmd_verify_oracle(const Common& o, bool grid, std::ostream& out) {
    json results = json::array();
    bool pass = true;
    auto check = [&](const ModelPoint& p) {
        const TensorComparison cmp = compare_tensors(component_table(p), oracle_tensor(p));
        json doc = comparison_json(p, cmp);
        doc["pass"] = cmp.max_abs_diff < o.tol;
        pass = pass && cmp.max_abs_diff < o.tol;
        results.push_back(doc);
    };
    if (grid) {
        const std::vector<double> values{0.0, 0.7, 1.3, 2.0};
        for (int n : {2, 3, 4}) {
            std::vector<StructureConstants> cs;
            // all combinations of the four values
            std::vector<std::size_t> digit(static_cast<std::size_t>(n - 1), 0);
            while (true) {
                std::vector<double> c;
                for (auto d : digit) c.push_back(values[d]);
                cs.emplace_back(c);
                std::size_t k = 0;
                while (k < digit.size() && ++digit[k] == values.size()) digit[k++] = 0;
                if (k == digit.size()) break;
            }
            for (double r : {0.5, 1.0, 2.0, 4.0, 8.0})
                for (const auto& c : cs) check(ModelPoint(n, r, c));
        }
    } else {
        for (int n : o.n)
            for (double r : o.r) check(ModelPoint(n, r, constants_for(o, n)));
    }
    emit_json(o, out, results.size() == 1 ? results.front() : json{{"points", results}, {"pass", pass}});
    return pass ? kExitPass : kExitViolation;
}

int cmd_verify_thm13(const Common& o, double cluster_tol, std::ostream& out) {
    json results = json::array();
    bool pass = true;
    for (int n : o.n) {
        for (double r : o.r) {
            const ModelPoint p = ModelPoint::complex_hyperbolic(n, r);
            const WedgeBasis basis = build_wedge_basis(n);
            const EigenDecomposition eig = eigen_sym(assemble_operator(component_table(p), basis));
            const Spectrum s = cluster_spectrum(eig.eigenvalues, cluster_tol);

            const int n2 = n * n;
            const std::vector<std::pair<double, int>> expected{{-(2.0 * n + 2.0), 1}, {-2.0, n2 - 1}, {0.0, n2 - n}};
            bool ok = s.entries.size() == expected.size();
            for (std::size_t k = 0; ok && k < expected.size(); ++k) {
                ok = std::abs(s.entries[k].value - expected[k].first) <= cluster_tol * std::max(1.0, std::abs(expected[k].first)) &&
                     s.entries[k].multiplicity == expected[k].second;
            }
            // Eigenvector of the lowest eigenvalue against the sum of holomorphic bivectors.
            const auto v = eig.vector(0);
            double dot = 0.0;
            for (std::size_t k = 0; k < basis.holomorphic_size(); ++k) dot += v[k];
            const double cosine = std::abs(dot) / std::sqrt(static_cast<double>(n));
            ok = ok && cosine >= 1.0 - 1e-8;
            pass = pass && ok;
            results.push_back({{"n", n}, {"r", r}, {"spectrum", spectrum_json(s)}, {"cosine", cosine}, {"pass", ok}});
        }
    }
    emit_json(o, out, {{"checks", results}, {"pass", pass}});
    return pass ? kExitPass : kExitViolation;
}

int cmd_verify_det(const Common& o, int n_max, std::ostream& out) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> uni(0.0, 2.0);
    double worst = 0.0;
    for (int n = 2; n <= n_max; ++n) {
        for (int s = 0; s < o.samples; ++s) {
            std::vector<double> c(static_cast<std::size_t>(n - 1));
            for (double& x : c) x = uni(rng);
            const ModelPoint p(n, 1.0, StructureConstants(c));
            const double numeric = determinant(holomorphic_block(p, EvalMode::Asymptotic).negated());
            const double closed = det_holomorphic_closed_form(p.c());
            worst = std::max(worst, std::abs(numeric - closed) / std::abs(closed));
        }
    }
    const bool pass = worst <= o.tol;
    json at_two = json::array();
    for (int n = 2; n <= n_max; ++n) {
        at_two.push_back({{"n", n},
                          {"det_minus_H", det_holomorphic_closed_form(StructureConstants::uniform(n, 2.0))},
                          {"eigenvalue_product", std::pow(2.0, n - 1) * (2.0 * n + 2.0)}});
    }
    emit_json(o, out,
              {{"n_max", n_max},
               {"samples_per_n", o.samples},
               {"seed", o.seed},
               {"max_relative_error", worst},
               {"tol", o.tol},
               {"pass", pass},
               {"c_equal_2", at_two},
               {"note", "det(-H_n) at c = 2 is 2^(n-1) (2n+2), not 0; values do not lie in [0, 4]"}});
    return pass ? kExitPass : kExitViolation;
}

int cmd_verify_blocks(const Common& o, int r_samples, std::ostream& out) {
    const std::vector<double> grid{0.0, 0.5, 1.0, 1.5, 2.0};
    double worst_hv = -1e300, worst_dh = -1e300, worst_cross = 0.0;
    for (int k = 0; k < r_samples; ++k) {
        const double r = kRMin + (10.0 - kRMin) * k / (r_samples - 1);
        for (double ci : grid) {
            for (double ck : grid) {
                const ModelPoint p(3, r, StructureConstants({ci, ck}));
                const SymmetricMatrix hv = mixed_block(p, {1, 5}, {2, 6}, EvalMode::Exact);
                const SymmetricMatrix dh = mixed_block(p, {1, 3}, {2, 4}, EvalMode::Exact);
                worst_hv = std::max(worst_hv, eigen_sym(hv).eigenvalues.back());
                worst_dh = std::max(worst_dh, eigen_sym(dh).eigenvalues.back());
                worst_cross = std::max(worst_cross, max_cross_block(assemble_operator(component_table(p),
                                                                                      build_wedge_basis(3)),
                                                                    build_wedge_basis(3)));
            }
        }
    }
    const bool pass = worst_hv <= 1e-12 && worst_dh <= 1e-12 && worst_cross == 0.0;
    emit_json(o, out,
              {{"horizontal_vertical_max_eig", worst_hv},
               {"double_horizontal_max_eig", worst_dh},
               {"max_cross_block", worst_cross},
               {"r_samples", r_samples},
               {"pass", pass}});
    return pass ? kExitPass : kExitViolation;
}

int cmd_verify_definiteness(const Common& o, std::ostream& out) {
    const ModelPoint p = single_point(o);
    const EvalMode mode = parse_eval_mode(o.mode);
    const SymmetricMatrix h = holomorphic_block(p, EvalMode::Asymptotic);
    const DefinitenessReport hd = definiteness(h, o.tol);
    const DefinitenessReport full = definiteness(
        assemble_operator(curvature_for(p, mode), build_wedge_basis(p.n())), o.tol);
    const DecompositionBound bound = decomposition_bound(p);
    const bool pass = hd.classification == Definiteness::NegativeDefinite && bound.max_eigenvalue() <= o.tol;
    emit_json(o, out,
              {{"point", point_json(p)},
               {"holomorphic_block", {{"classification", to_string(hd.classification)},
                                      {"max_eigenvalue", hd.max_eigenvalue},
                                      {"leading_minors_of_minus_H", leading_principal_minors(h.negated())}}},
               {"operator", {{"mode", o.mode},
                             {"classification", to_string(full.classification)},
                             {"min_eigenvalue", full.min_eigenvalue},
                             {"max_eigenvalue", full.max_eigenvalue}}},
               {"decomposition_max_eigenvalue", bound.max_eigenvalue()},
               {"decomposition_worst_block", bound.worst_block},
               {"pass", pass}});
    return pass ? kExitPass : kExitViolation;
}

CSampling parse_c_sampling(const Common& o, const std::string& grid, int random_count, double lo, double hi) {
    CSampling s;
    if (!grid.empty()) {
        s.kind = CSampling::Kind::Grid;
        double glo = 0, ghi = 0;
        int points = 0;
        if (std::sscanf(grid.c_str(), "%lf:%lf:%d", &glo, &ghi, &points) != 3) {
            throw DomainError("--c-grid expects lo:hi:points");
        }
        s.lo = glo;
        s.hi = ghi;
        s.points = points;
    } else if (random_count > 0) {
        s.kind = CSampling::Kind::Random;
        s.count = random_count;
        s.lo = lo;
        s.hi = hi;
        s.seed = o.seed;
    } else {
        s.values = o.c;
    }
    return s;
}

int cmd_sweep(const Common& o, const SweepGrid& base, std::ostream& out) {
    const std::vector<ReportRow> rows = sweep(base);
    Sink sink(o.out, out);
    if (o.format == "json") {
        json doc = json::array();
        for (const auto& row : rows) doc.push_back(row_json(row));
        sink.stream() << doc.dump(2) << '\n';
        if (!sink.stream()) throw IoError("sweep JSON emission failed", 0);
    } else {
        write_sweep_csv(sink.stream(), rows);
    }
    sink.commit();
    bool pass = true;
    for (const auto& row : rows) pass = pass && row.pass;
    return pass ? kExitPass : kExitViolation;
}

int cmd_pinch(const Common& o, const CRange& range, double eps, const PinchingOptions& options, std::ostream& out) {
    if (o.n.size() != 1) throw DomainError("pinch takes a single --n");
    const PinchingResult result = pinching_radius(o.n.front(), range, eps, o.samples, o.seed, options);
    json doc = pinching_json(result, eps);
    doc["n"] = o.n.front();
    doc["c_range"] = {{"lo", range.lo}, {"hi", range.hi}, {"points", range.points}};
    doc["samples"] = o.samples;
    doc["seed"] = o.seed;
    emit_json(o, out, doc);
    return result.r_est ? kExitPass : kExitViolation;
}

int cmd_pipeline(const Common& o, const std::string& config, bool certify, int r_samples, double tol,
                 std::ostream& out) {
    StageProfile profile;
    if (!config.empty()) {
        std::ifstream in(config);
        if (!in) throw DomainError("cannot read config " + config);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw DomainError("config " + config + ": " + e.what());
        }
        profile = StageProfile::from_json(j);
    }
    profile.validate();

    if (certify) {
        const Certificate cert = certify_nonpositive(profile, r_samples, tol);
        emit_json(o, out, certificate_json(cert));
        return cert.pass ? kExitPass : kExitViolation;
    }

    Sink sink(o.out, out);
    auto& s = sink.stream();
    s << "r,stage,c,dc,d2c,s\n";
    for (int k = 0; k < r_samples; ++k) {
        const double r = kRMin + (profile.r_max() - kRMin) * k / (r_samples - 1);
        const Jet2 c = structure_jet(profile, r);
        s << format_number(r) << ',' << to_string(stage_at(profile, r)) << ',' << format_number(c.v) << ','
          << format_number(c.d1) << ',' << format_number(c.d2) << ',' << format_number(stretch_jet(profile, r).v)
          << '\n';
    }
    sink.commit();
    return kExitPass;
}

int cmd_perturb(const Common& o, double delta, std::ostream& out) {
    if (o.n.size() != 1 || o.r.size() != 1) throw DomainError("perturb takes a single --n and --r");
    const PerturbationReport rep = perturbation_demo(delta, o.n.front(), o.r.front(), o.samples, o.seed, o.tol);
    json doc = row_json(rep.row);
    doc["delta"] = delta;
    doc["asymptotic_mixed_eigenvalue"] = rep.asymptotic_mixed_eig;
    doc["positive_eigenvalue"] = rep.positive_eigenvalue;
    doc["negative_curvature"] = rep.negative_curvature;
    emit_json(o, out, doc);
    return rep.row.pass ? kExitPass : kExitViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curvature operator toolkit for the warped complex hyperbolic metric family"};
    app.require_subcommand(1);

    Common o;
    double cluster_tol = kDefaultClusterTol;

    auto* tensor = app.add_subcommand("tensor", "curvature tensor components");
    add_point_options(tensor, o);
    add_output_options(tensor, o, "csv");

    auto* op = app.add_subcommand("operator", "curvature operator matrix in the ordered bivector basis");
    add_point_options(op, o);
    add_output_options(op, o, "csv");

    auto* eigen = app.add_subcommand("eigen", "operator spectrum");
    add_point_options(eigen, o);
    add_output_options(eigen, o, "json");
    eigen->add_option("--cluster-tol", cluster_tol);

    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);

    bool oracle_grid = false;
    auto* v_oracle = verify->add_subcommand("oracle", "closed form against the Koszul recomputation");
    add_point_options(v_oracle, o);
    v_oracle->add_option("--tol", o.tol);
    v_oracle->add_flag("--grid", oracle_grid, "full grid n in {2,3,4}, r in {0.5,...,8}, c in {0,0.7,1.3,2}");
    v_oracle->add_option("--out", o.out);

    auto* v_thm = verify->add_subcommand("thm13", "spectrum of the c = 2 operator");
    v_thm->add_option("--n", o.n)->delimiter(',');
    v_thm->add_option("--r", o.r)->delimiter(',');
    v_thm->add_option("--cluster-tol", cluster_tol);
    v_thm->add_option("--out", o.out);

    int det_n_max = 8;
    auto* v_det = verify->add_subcommand("det", "closed-form determinant of -H_n against elimination");
    v_det->add_option("--n-max", det_n_max);
    v_det->add_option("--samples", o.samples);
    v_det->add_option("--seed", o.seed);
    v_det->add_option("--tol", o.tol);
    v_det->add_option("--out", o.out);

    int block_r_samples = 50;
    auto* v_blocks = verify->add_subcommand("blocks", "exact 2x2 block nonpositivity and block structure");
    v_blocks->add_option("--r-samples", block_r_samples)->check(CLI::Range(2, 100000));
    v_blocks->add_option("--out", o.out);

    auto* v_def = verify->add_subcommand("definiteness", "holomorphic block and operator definiteness");
    add_point_options(v_def, o);
    v_def->add_option("--tol", o.tol);
    v_def->add_option("--out", o.out);

    SweepGrid grid;
    std::string c_grid;
    int c_random = 0;
    double c_lo = 0.0, c_hi = 2.0;
    auto* sw = app.add_subcommand("sweep", "grid sweep over n, r and structure constants");
    add_point_options(sw, o);
    add_output_options(sw, o, "csv");
    sw->add_option("--c-grid", c_grid, "lo:hi:points per structure constant");
    sw->add_option("--c-random", c_random, "number of seeded random c vectors per n");
    sw->add_option("--c-lo", c_lo);
    sw->add_option("--c-hi", c_hi);
    sw->add_option("--tol", o.tol);
    sw->add_option("--seed", o.seed);
    sw->add_option("--samples", grid.plane_samples, "planes sampled per row");
    sw->add_option("--threads", grid.threads);

    CRange range;
    double eps = 0.25;
    PinchingOptions pinch_options;
    auto* pinch = app.add_subcommand("pinch", "pinching radius estimate");
    pinch->add_option("--n", o.n)->delimiter(',');
    pinch->add_option("--c-lo", range.lo);
    pinch->add_option("--c-hi", range.hi);
    pinch->add_option("--c-points", range.points);
    pinch->add_option("--eps", eps);
    pinch->add_option("--samples", o.samples);
    pinch->add_option("--seed", o.seed);
    pinch->add_option("--r-hi", pinch_options.r_hi);
    pinch->add_option("--r-step", pinch_options.r_step);
    pinch->add_option("--out", o.out);

    std::string config;
    bool certify = false;
    int r_samples = 200;
    double pipeline_tol = 1e-8;
    auto* pipe = app.add_subcommand("pipeline", "staged profile table or nonpositivity certificate");
    pipe->add_option("--config", config, "JSON profile config");
    pipe->add_flag("--certify", certify);
    pipe->add_option("--r-samples", r_samples)->check(CLI::Range(10, 1000000));
    pipe->add_option("--tol", pipeline_tol);
    pipe->add_option("--out", o.out);

    double delta = 0.1;
    auto* perturb = app.add_subcommand("perturb", "structure constants pushed to 2 + delta");
    perturb->add_option("--delta", delta);
    perturb->add_option("--n", o.n)->delimiter(',');
    perturb->add_option("--r", o.r)->delimiter(',');
    perturb->add_option("--samples", o.samples);
    perturb->add_option("--seed", o.seed);
    perturb->add_option("--tol", o.tol);
    perturb->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*tensor) return cmd_tensor(o, out);
        if (*op) return cmd_operator(o, out);
        if (o.format.empty()) o.format = *eigen ? "json" : "csv";
        if (*eigen) return cmd_eigen(o, cluster_tol, out);
        if (*v_oracle) return cmd_verify_oracle(o, oracle_grid, out);
        if (*v_thm) {
            if (v_thm->count("--n") == 0) o.n = {2, 3, 4, 5, 6};
            if (v_thm->count("--r") == 0) o.r = {0.5, 2.0, 7.0};
            return cmd_verify_thm13(o, cluster_tol == kDefaultClusterTol ? 1e-7 : cluster_tol, out);
        }
        if (*v_det) {
            if (v_det->count("--samples") == 0) o.samples = 100;
            if (v_det->count("--tol") == 0) o.tol = 1e-10;
            return cmd_verify_det(o, det_n_max, out);
        }
        if (*v_blocks) return cmd_verify_blocks(o, block_r_samples, out);
        if (*v_def) return cmd_verify_definiteness(o, out);
        if (*sw) {
            grid.ns = o.n;
            grid.rs = o.r;
            grid.c = parse_c_sampling(o, c_grid, c_random, c_lo, c_hi);
            grid.mode = parse_eval_mode(o.mode);
            grid.seed = o.seed;
            grid.tol = o.tol;
            return cmd_sweep(o, grid, out);
        }
        if (*pinch) {
            if (pinch->count("--n") == 0) o.n = {3};
            if (pinch->count("--c-hi") == 0) range.hi = range.lo;
            return cmd_pinch(o, range, eps, pinch_options, out);
        }
        if (*pipe) return cmd_pipeline(o, config, certify, r_samples, pipeline_tol, out);
        if (*perturb) {
            if (perturb->count("--n") == 0) o.n = {3};
            if (perturb->count("--r") == 0) o.r = {6.0};
            return cmd_perturb(o, delta, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << " (" << e.rows_written() << " rows written; partial output left in place)\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace curvop::cli
