// Command-line front end over the rhgen C API.
//
//   rhgen generate  -n N (-k K | --disk-constant C | --radius R) [-g G | --alpha A] ...
//   rhgen dynamic   ... --steps S --move-fraction F
//   rhgen validate  ... --runs 100
//   rhgen bench     --nodes 1e4,1e5 --degrees 2,8,32

#include <rhgen/rhgen.h>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitFlags = 2,
    kExitCalibration = 3,
    kExitIo = 4,
};

struct GraphDeleter {
    void operator()(rhgen_graph* g) const noexcept { rhgen_graph_free(g); }
};
using GraphPtr = std::unique_ptr<rhgen_graph, GraphDeleter>;

struct DynamicDeleter {
    void operator()(rhgen_dynamic* d) const noexcept { rhgen_dynamic_free(d); }
};
using DynamicPtr = std::unique_ptr<rhgen_dynamic, DynamicDeleter>;

/// Library failure carrying the status it came from.
struct ApiFailure {
    rhgen_status status;
    std::string message;
};

void check(rhgen_status status, const char* what) {
    if (status != RHGEN_OK) throw ApiFailure{status, std::string(what) + ": " + rhgen_last_error()};
}

int exit_code_for(rhgen_status status) {
    switch (status) {
    case RHGEN_OK:
        return kExitOk;
    case RHGEN_ERR_INVALID_ARGUMENT:
        return kExitFlags;
    case RHGEN_ERR_CALIBRATION:
        return kExitCalibration;
    case RHGEN_ERR_IO:
        return kExitIo;
    case RHGEN_ERR_RESOURCE_LIMIT:
    case RHGEN_ERR_INTERNAL:
        break;
    }
    return kExitFailure;
}

struct FlagError {
    std::string message;
};

/// Flags shared by every subcommand that generates graphs.
struct ModelFlags {
    std::uint64_t nodes = 0;
    double avg_degree = 0.0;
    double disk_constant = 0.0;
    double radius = 0.0;
    double gamma = 3.0;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    int threads = 0;
    double slab_ratio = 0.9;
    std::uint32_t slab_count = 0;
    double memory_cap_gib = 4.0;

    CLI::Option* avg_degree_opt = nullptr;
    CLI::Option* disk_constant_opt = nullptr;
    CLI::Option* radius_opt = nullptr;
    CLI::Option* gamma_opt = nullptr;
    CLI::Option* alpha_opt = nullptr;
    CLI::Option* threads_opt = nullptr;

    void attach(CLI::App& app, bool require_nodes = true) {
        auto* n = app.add_option("-n,--nodes", nodes, "number of vertices");
        if (require_nodes) n->required();
        avg_degree_opt = app.add_option("-k,--avg-degree", avg_degree, "target average degree");
        disk_constant_opt = app.add_option("--disk-constant", disk_constant, "C in R = 2 ln n + C");
        radius_opt = app.add_option("--radius", radius, "disk radius R");
        gamma_opt = app.add_option("-g,--gamma", gamma, "power-law exponent (> 2)")->capture_default_str();
        alpha_opt = app.add_option("--alpha", alpha, "dispersion alpha (overrides --gamma)");
        app.add_option("--seed", seed, "random seed")->capture_default_str();
        threads_opt = app.add_option("--threads", threads, "worker threads (env HYPERGEN_THREADS)");
        app.add_option("--slab-ratio", slab_ratio, "width ratio of successive slabs")->capture_default_str();
        app.add_option("--slab-count", slab_count, "number of slabs (default ceil(log2 n))");
        app.add_option("--memory-cap", memory_cap_gib, "edge memory cap in GiB")->capture_default_str();
    }

    rhgen_generate_options options(bool need_density = true) const {
        rhgen_generate_options o;
        rhgen_generate_options_init(&o);
        o.nodes = nodes;
        const int chosen = (avg_degree_opt->count() > 0) + (disk_constant_opt->count() > 0) + (radius_opt->count() > 0);
        if (need_density && chosen != 1)
            throw FlagError{"exactly one of --avg-degree, --disk-constant, --radius is required"};
        if (alpha_opt->count() > 0 && gamma_opt->count() > 0)
            throw FlagError{"--gamma and --alpha are mutually exclusive"};
        if (radius_opt->count() > 0) {
            o.mode = RHGEN_BY_RADIUS;
            o.radius = radius;
        } else if (disk_constant_opt->count() > 0) {
            o.mode = RHGEN_BY_DISK_CONSTANT;
            o.disk_constant = disk_constant;
        } else {
            o.mode = RHGEN_BY_AVG_DEGREE;
            o.avg_degree = avg_degree;
        }
        o.gamma = gamma;
        if (alpha_opt->count() > 0) {
            if (!(alpha > 0.0)) throw FlagError{"--alpha must be positive"};
            o.alpha = alpha;
        }
        o.seed = seed;
        o.threads = threads;
        if (threads_opt->count() == 0) {
            if (const char* env = std::getenv("HYPERGEN_THREADS")) {
                try {
                    o.threads = std::stoi(env);
                } catch (const std::exception&) {
                    throw FlagError{"HYPERGEN_THREADS must be an integer"};
                }
            }
        }
        if (o.threads < 0) throw FlagError{"--threads must be >= 0"};
        o.slab_ratio = slab_ratio;
        o.slab_count = slab_count;
        o.memory_cap_bytes = static_cast<std::uint64_t>(memory_cap_gib * static_cast<double>(1ULL << 30));
        return o;
    }
};

void print_summary(const rhgen_graph* g, const rhgen_timings& t) {
    const auto n = rhgen_graph_node_count(g);
    const auto m = rhgen_graph_edge_count(g);
    std::printf("n=%llu\nm=%llu\nR=%.17g\nalpha=%.17g\navg_degree=%.6f\n", static_cast<unsigned long long>(n),
                static_cast<unsigned long long>(m), rhgen_graph_radius(g), rhgen_graph_alpha(g),
                n ? 2.0 * static_cast<double>(m) / static_cast<double>(n) : 0.0);
    std::printf("time_calibration=%.6f\ntime_positions=%.6f\ntime_index=%.6f\ntime_edges=%.6f\ntime_assembly=%.6f\n"
                "time_total=%.6f\n",
                t.calibration, t.positions, t.index, t.edges, t.assembly,
                t.calibration + t.positions + t.index + t.edges + t.assembly);
}

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
    std::istringstream in(text);
    double lo = 0.0, hi = 0.0;
    char comma = 0;
    if (!(in >> lo >> comma >> hi) || comma != ',' || !(lo <= hi))
        throw FlagError{std::string(flag) + " expects 'min,max' with min <= max"};
    return {lo, hi};
}

// ---- generate ---------------------------------------------------------------

struct GenerateCommand {
    ModelFlags model;
    std::string output;
    std::string coords_out;
    std::string format = "el";
    bool canonical = false;
    bool count_only = false;

    void attach(CLI::App& app) {
        model.attach(app);
        app.add_option("-o,--output", output, "edge list output path");
        app.add_option("--coords-out", coords_out, "coordinate output path ('id phi r')");
        app.add_option("--format", format, "edge list format")->check(CLI::IsMember({"el", "csv"}))->capture_default_str();
        app.add_flag("--canonical", canonical, "sort edge lines lexicographically");
        app.add_flag("--count-only", count_only, "stream edges without assembling the graph");
    }

    int run() const {
        const auto options = model.options();
        rhgen_timings t{};
        if (count_only) {
            std::uint64_t m = 0;
            check(rhgen_count_edges(&options, &m, &t), "count");
            std::printf("n=%llu\nm=%llu\navg_degree=%.6f\ntime_edges=%.6f\n",
                        static_cast<unsigned long long>(options.nodes), static_cast<unsigned long long>(m),
                        2.0 * static_cast<double>(m) / static_cast<double>(options.nodes), t.edges);
            return kExitOk;
        }
        rhgen_graph* raw = nullptr;
        check(rhgen_generate(&options, &raw, &t), "generate");
        GraphPtr graph(raw);
        if (!output.empty())
            check(rhgen_write_edge_list(graph.get(), output.c_str(),
                                        format == "csv" ? RHGEN_FORMAT_CSV : RHGEN_FORMAT_EDGE_LIST, canonical),
                  "write edges");
        if (!coords_out.empty()) check(rhgen_write_coordinates(graph.get(), coords_out.c_str()), "write coordinates");
        print_summary(graph.get(), t);
        return kExitOk;
    }
};

// ---- dynamic ----------------------------------------------------------------

struct DynamicCommand {
    ModelFlags model;
    std::uint64_t steps = 1;
    double move_fraction = 1.0;
    std::string tau_phi_range = "-1,1";
    std::string tau_r_range = "-10,1";
    std::string delta_prefix;
    std::string snapshot_prefix;

    void attach(CLI::App& app) {
        model.attach(app);
        app.add_option("--steps", steps, "number of movement steps")->capture_default_str();
        app.add_option("--move-fraction", move_fraction, "fraction of vertices moved per step")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        app.add_option("--tau-phi-range", tau_phi_range, "angular step range 'min,max'")->capture_default_str();
        app.add_option("--tau-r-range", tau_r_range, "radial step range 'min,max'")->capture_default_str();
        app.add_option("--delta-out", delta_prefix, "write PREFIX.<step>.delta ('+ u v' / '- u v') per step");
        app.add_option("--snapshot-out", snapshot_prefix, "write PREFIX.<step>.el and PREFIX.<step>.coords per step");
    }

    int run() const {
        const auto options = model.options();
        rhgen_dynamic_options dyn;
        rhgen_dynamic_options_init(&dyn);
        dyn.move_fraction = move_fraction;
        std::tie(dyn.tau_phi_min, dyn.tau_phi_max) = parse_range(tau_phi_range, "--tau-phi-range");
        std::tie(dyn.tau_r_min, dyn.tau_r_max) = parse_range(tau_r_range, "--tau-r-range");
        dyn.seed = options.seed;
        dyn.threads = options.threads;

        rhgen_graph* raw = nullptr;
        rhgen_timings t{};
        check(rhgen_generate(&options, &raw, &t), "generate");
        GraphPtr graph(raw);
        const double alpha = rhgen_graph_alpha(graph.get());
        const double radius = rhgen_graph_radius(graph.get());

        rhgen_dynamic* dyn_raw = nullptr;
        check(rhgen_dynamic_create(graph.get(), &dyn, &dyn_raw), "dynamic");
        DynamicPtr model_handle(dyn_raw);

        std::printf("step,inserted,deleted,m,seconds,ks_radial_p\n");
        for (std::uint64_t s = 1; s <= steps; ++s) {
            std::size_t ins = 0, del = 0;
            const auto start = std::chrono::steady_clock::now();
            check(rhgen_dynamic_step(model_handle.get(), &ins, &del), "step");
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

            rhgen_graph* snap_raw = nullptr;
            check(rhgen_dynamic_snapshot(model_handle.get(), &snap_raw), "snapshot");
            GraphPtr snap(snap_raw);
            double stat = 0.0, p = 1.0;
            check(rhgen_ks_radial(rhgen_graph_points(snap.get()), rhgen_graph_node_count(snap.get()), alpha, radius,
                                  &stat, &p),
                  "ks");
            std::printf("%llu,%zu,%zu,%llu,%.6f,%.6g\n", static_cast<unsigned long long>(s), ins, del,
                        static_cast<unsigned long long>(rhgen_graph_edge_count(snap.get())), secs, p);

            if (!delta_prefix.empty()) {
                const rhgen_edge *inserted = nullptr, *deleted = nullptr;
                check(rhgen_dynamic_last_delta(model_handle.get(), &inserted, &ins, &deleted, &del), "delta");
                const auto path = delta_prefix + "." + std::to_string(s) + ".delta";
                check(rhgen_write_delta(inserted, ins, deleted, del, path.c_str()), "write delta");
            }
            if (!snapshot_prefix.empty()) {
                const auto base = snapshot_prefix + "." + std::to_string(s);
                check(rhgen_write_edge_list(snap.get(), (base + ".el").c_str(), RHGEN_FORMAT_EDGE_LIST, 1),
                      "write snapshot");
                check(rhgen_write_coordinates(snap.get(), (base + ".coords").c_str()), "write snapshot coordinates");
            }
        }
        return kExitOk;
    }
};

// ---- validate ---------------------------------------------------------------

struct Sample {
    std::vector<double> values;
    double mean() const {
        double s = 0.0;
        for (double v : values) s += v;
        return values.empty() ? 0.0 : s / static_cast<double>(values.size());
    }
    double stderr_of_mean() const {
        if (values.size() < 2) return 0.0;
        const double mu = mean();
        double sq = 0.0;
        for (double v : values) sq += (v - mu) * (v - mu);
        return std::sqrt(sq / static_cast<double>(values.size() - 1) / static_cast<double>(values.size()));
    }
};

struct ValidateCommand {
    ModelFlags model;
    std::uint32_t runs = 100;
    std::uint32_t k_min = 10;
    double max_z = 3.0;
    std::string csv_out;

    void attach(CLI::App& app) {
        model.attach(app);
        app.add_option("--runs", runs, "runs per implementation")->capture_default_str();
        app.add_option("--kmin", k_min, "minimum degree for the exponent estimate")->capture_default_str();
        app.add_option("--max-z", max_z, "allowed difference in combined standard errors")->capture_default_str();
        app.add_option("--csv", csv_out, "per-run metric rows");
    }

    int run() const {
        auto options = model.options();
        const char* names[] = {"avg_deg", "cc", "assort", "degeneracy", "lcc_size", "lcc_diam"};
        Sample slab[6], oracle[6];
        std::FILE* csv = nullptr;
        if (!csv_out.empty()) {
            csv = std::fopen(csv_out.c_str(), "w");
            if (!csv) throw ApiFailure{RHGEN_ERR_IO, "cannot open '" + csv_out + "'"};
            char header[256];
            check(rhgen_format_metrics_csv(nullptr, 1, header, sizeof header, nullptr), "format");
            std::fprintf(csv, "impl,run,%s\n", header);
        }
        std::unique_ptr<std::FILE, int (*)(std::FILE*)> csv_guard(csv, &std::fclose);

        bool exact = true;
        for (std::uint32_t run = 0; run < runs; ++run) {
            options.seed = model.seed + run;
            rhgen_graph* raw = nullptr;
            check(rhgen_generate(&options, &raw, nullptr), "generate");
            GraphPtr fast(raw);
            check(rhgen_generate_oracle(&options, 0, &raw), "oracle");
            GraphPtr reference(raw);

            if (run == 0) {
                // exact equivalence on shared positions
                check(rhgen_oracle_from_graph(fast.get(), 0, &raw), "oracle");
                GraphPtr shared(raw);
                int equal = 0;
                check(rhgen_graph_same_edges(fast.get(), shared.get(), &equal), "compare");
                exact = equal != 0;
            }

            for (int impl = 0; impl < 2; ++impl) {
                rhgen_metrics m{};
                check(rhgen_compute_metrics(impl == 0 ? fast.get() : reference.get(), k_min, &m), "metrics");
                auto* dest = impl == 0 ? slab : oracle;
                const double values[] = {m.avg_deg, m.cc, m.assort, static_cast<double>(m.degeneracy),
                                         static_cast<double>(m.lcc_size), static_cast<double>(m.lcc_diam)};
                for (int i = 0; i < 6; ++i) dest[i].values.push_back(values[i]);
                if (csv) {
                    char row[512];
                    check(rhgen_format_metrics_csv(&m, 0, row, sizeof row, nullptr), "format");
                    std::fprintf(csv, "%s,%u,%s\n", impl == 0 ? "slab" : "oracle", run, row);
                }
            }
        }

        bool ok = exact;
        std::printf("shared_positions_exact=%s\n", exact ? "yes" : "no");
        std::printf("metric,slab_mean,slab_se,oracle_mean,oracle_se,z,verdict\n");
        for (int i = 0; i < 6; ++i) {
            const double se = std::hypot(slab[i].stderr_of_mean(), oracle[i].stderr_of_mean());
            const double diff = std::abs(slab[i].mean() - oracle[i].mean());
            const double z = se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : INFINITY);
            const bool pass = z < max_z;
            ok = ok && pass;
            std::printf("%s,%.6g,%.3g,%.6g,%.3g,%.3f,%s\n", names[i], slab[i].mean(), slab[i].stderr_of_mean(),
                        oracle[i].mean(), oracle[i].stderr_of_mean(), z, pass ? "match" : "MISMATCH");
        }
        return ok ? kExitOk : kExitFailure;
    }
};

// ---- bench ------------------------------------------------------------------

struct BenchCommand {
    std::vector<double> nodes{1e4, 1e5, 1e6};
    std::vector<double> degrees{2, 8, 32};
    double gamma = 3.0;
    std::uint32_t repeats = 1;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string output;

    void attach(CLI::App& app) {
        app.add_option("--nodes", nodes, "vertex counts")->delimiter(',')->capture_default_str();
        app.add_option("--degrees", degrees, "average degrees")->delimiter(',')->capture_default_str();
        app.add_option("-g,--gamma", gamma, "power-law exponent")->capture_default_str();
        app.add_option("--repeats", repeats, "runs per grid point")->capture_default_str();
        app.add_option("--seed", seed, "first seed")->capture_default_str();
        app.add_option("--threads", threads, "worker threads");
        app.add_option("-o,--output", output, "CSV output (default stdout)");
    }

    int run() const {
        std::FILE* out = stdout;
        std::unique_ptr<std::FILE, int (*)(std::FILE*)> guard(nullptr, &std::fclose);
        if (!output.empty()) {
            out = std::fopen(output.c_str(), "w");
            if (!out) throw ApiFailure{RHGEN_ERR_IO, "cannot open '" + output + "'"};
            guard.reset(out);
        }
        std::fprintf(out, "n,k,seed,m,calibration,positions,index,edges,assembly,total\n");
        std::vector<double> ns, ms, ts;
        for (double n : nodes) {
            for (double k : degrees) {
                for (std::uint32_t rep = 0; rep < repeats; ++rep) {
                    rhgen_generate_options o;
                    rhgen_generate_options_init(&o);
                    o.nodes = static_cast<std::uint64_t>(n);
                    o.avg_degree = k;
                    o.gamma = gamma;
                    o.seed = seed + rep;
                    o.threads = threads;
                    rhgen_graph* raw = nullptr;
                    rhgen_timings t{};
                    check(rhgen_generate(&o, &raw, &t), "generate");
                    GraphPtr g(raw);
                    const double total = t.calibration + t.positions + t.index + t.edges + t.assembly;
                    const auto m = rhgen_graph_edge_count(g.get());
                    std::fprintf(out, "%llu,%g,%llu,%llu,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                                 static_cast<unsigned long long>(o.nodes), k, static_cast<unsigned long long>(o.seed),
                                 static_cast<unsigned long long>(m), t.calibration, t.positions, t.index, t.edges,
                                 t.assembly, total);
                    std::fflush(out);
                    ns.push_back(n);
                    ms.push_back(static_cast<double>(m));
                    ts.push_back(total);
                }
            }
        }
        if (ns.size() >= 3) {
            double coef[3] = {};
            double r2 = 0.0;
            check(rhgen_fit_runtime(ns.data(), ms.data(), ts.data(), ns.size(), coef, &r2), "fit");
            std::vector<double> design;
            for (double n : ns) {
                design.push_back(n * n);
                design.push_back(1.0);
            }
            double qcoef[2] = {};
            double qr2 = 0.0;
            check(rhgen_least_squares(design.data(), ns.size(), 2, ts.data(), qcoef, &qr2), "fit");
            std::fprintf(stderr, "fit: T = %.4g * n ln n + %.4g * m + %.4g  (R^2 = %.4f)\n", coef[0], coef[1], coef[2],
                         r2);
            std::fprintf(stderr, "quadratic: T = %.4g * n^2 + %.4g  (R^2 = %.4f)\n", qcoef[0], qcoef[1], qr2);
        }
        return kExitOk;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Threshold random hyperbolic graph generator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", rhgen_version());

    GenerateCommand generate;
    DynamicCommand dynamic;
    ValidateCommand validate;
    BenchCommand bench;
    auto* gen_cmd = app.add_subcommand("generate", "generate a static graph");
    generate.attach(*gen_cmd);
    auto* dyn_cmd = app.add_subcommand("dynamic", "generate a graph and apply movement steps");
    dynamic.attach(*dyn_cmd);
    auto* val_cmd = app.add_subcommand("validate", "compare network metrics against the quadratic reference");
    validate.attach(*val_cmd);
    auto* bench_cmd = app.add_subcommand("bench", "phase timings over an (n, k) grid with a runtime fit");
    bench.attach(*bench_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitFlags;
    }

    try {
        if (gen_cmd->parsed()) return generate.run();
        if (dyn_cmd->parsed()) return dynamic.run();
        if (val_cmd->parsed()) return validate.run();
        if (bench_cmd->parsed()) return bench.run();
    } catch (const FlagError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitFlags;
    } catch (const ApiFailure& e) {
        std::cerr << "error: " << e.message << "\n";
        return exit_code_for(e.status);
    }
    return kExitFlags;
}
