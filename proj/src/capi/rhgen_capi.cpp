#include "rhgen/rhgen.h"

#include "core/analysis.hpp"
#include "core/dynamics.hpp"
#include "core/error.hpp"
#include "core/generator.hpp"
#include "core/io.hpp"
#include "core/parameters.hpp"
#include "core/reference_oracle.hpp"
#include "core/stats.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>

struct rhgen_graph {
    rhgen::Graph graph;
};

struct rhgen_dynamic {
    rhgen::DynamicGraph model;
    rhgen::EdgeDelta last;
};

static_assert(sizeof(rhgen_point) == sizeof(rhgen::PolarPoint) && offsetof(rhgen_point, r) == offsetof(rhgen::PolarPoint, r));
static_assert(sizeof(rhgen_edge) == sizeof(rhgen::Edge) && offsetof(rhgen_edge, v) == offsetof(rhgen::Edge, v));

namespace {

thread_local std::string last_error;

rhgen_status to_status(rhgen::ErrorCode code) {
    switch (code) {
    case rhgen::ErrorCode::InvalidArgument:
        return RHGEN_ERR_INVALID_ARGUMENT;
    case rhgen::ErrorCode::Calibration:
        return RHGEN_ERR_CALIBRATION;
    case rhgen::ErrorCode::Io:
        return RHGEN_ERR_IO;
    case rhgen::ErrorCode::ResourceLimit:
        return RHGEN_ERR_RESOURCE_LIMIT;
    }
    return RHGEN_ERR_INTERNAL;
}

rhgen_status set_error(rhgen_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
rhgen_status guarded(Fn&& fn) {
    try {
        fn();
        return RHGEN_OK;
    } catch (const rhgen::Error& e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(RHGEN_ERR_RESOURCE_LIMIT, "out of memory");
    } catch (const std::exception& e) {
        return set_error(RHGEN_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(RHGEN_ERR_INTERNAL, "unknown error");
    }
}

#define RHGEN_REQUIRE(cond, what)                                                                                      \
    do {                                                                                                               \
        if (!(cond)) return set_error(RHGEN_ERR_INVALID_ARGUMENT, what);                                               \
    } while (0)

rhgen::GeneratorOptions to_generator_options(const rhgen_generate_options& o) {
    rhgen::GeneratorOptions g;
    g.seed = o.seed;
    g.threads = o.threads;
    g.slab_ratio = o.slab_ratio;
    if (o.slab_count > 0) g.slab_count = o.slab_count;
    g.memory_cap_bytes = o.memory_cap_bytes;
    return g;
}

struct Resolved {
    double alpha;
    double radius;
    double calibration_seconds;
};

Resolved resolve(const rhgen_generate_options& o) {
    const auto start = std::chrono::steady_clock::now();
    const double alpha = o.alpha > 0.0 ? o.alpha : rhgen::alpha_from_gamma(o.gamma);
    double radius = 0.0;
    switch (o.mode) {
    case RHGEN_BY_AVG_DEGREE:
        radius = rhgen::get_target_radius(o.nodes, o.avg_degree, alpha);
        break;
    case RHGEN_BY_DISK_CONSTANT:
        radius = rhgen::radius_from_disk_constant(o.nodes, o.disk_constant);
        break;
    case RHGEN_BY_RADIUS:
        radius = o.radius;
        break;
    default:
        rhgen::fail(rhgen::ErrorCode::InvalidArgument, "unknown radius mode");
    }
    if (!(radius >= 0.0) || !std::isfinite(radius))
        rhgen::fail(rhgen::ErrorCode::InvalidArgument, "disk radius must be finite and >= 0");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {alpha, radius, seconds};
}

void copy_timings(const rhgen::PhaseTimings& t, double calibration, rhgen_timings* out) {
    if (!out) return;
    out->calibration = calibration;
    out->positions = t.positions;
    out->index = t.index;
    out->edges = t.edges;
    out->assembly = t.assembly;
}

rhgen_status write_string(const std::string& s, char* buffer, size_t size, size_t* required) {
    if (required) *required = s.size() + 1;
    if (!buffer || size < s.size() + 1) return set_error(RHGEN_ERR_RESOURCE_LIMIT, "buffer too small");
    std::memcpy(buffer, s.c_str(), s.size() + 1);
    return RHGEN_OK;
}

rhgen::MetricReport to_report(const rhgen_metrics& m) {
    return {m.n, m.m, m.avg_deg, m.cc, m.assort, m.degeneracy, m.lcc_size, m.lcc_diam, m.gamma_hat};
}

} // namespace

extern "C" {

const char* rhgen_version(void) { return "0.1.0"; }

const char* rhgen_last_error(void) { return last_error.c_str(); }

const char* rhgen_status_string(rhgen_status status) {
    switch (status) {
    case RHGEN_OK:
        return "ok";
    case RHGEN_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case RHGEN_ERR_CALIBRATION:
        return "calibration failure";
    case RHGEN_ERR_IO:
        return "i/o error";
    case RHGEN_ERR_RESOURCE_LIMIT:
        return "resource limit";
    case RHGEN_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

rhgen_status rhgen_alpha_from_gamma(double gamma, double* alpha) {
    RHGEN_REQUIRE(alpha, "alpha output is NULL");
    return guarded([&] { *alpha = rhgen::alpha_from_gamma(gamma); });
}

double rhgen_expected_avg_degree(double n, double alpha, double radius) {
    return rhgen::expected_avg_degree(n, alpha, radius);
}

rhgen_status rhgen_target_radius(uint64_t n, double avg_degree, double alpha, double* radius) {
    RHGEN_REQUIRE(radius, "radius output is NULL");
    return guarded([&] { *radius = rhgen::get_target_radius(n, avg_degree, alpha); });
}

void rhgen_generate_options_init(rhgen_generate_options* options) {
    if (!options) return;
    const rhgen::GeneratorOptions defaults;
    *options = rhgen_generate_options{};
    options->mode = RHGEN_BY_AVG_DEGREE;
    options->gamma = 3.0;
    options->slab_ratio = defaults.slab_ratio;
    options->memory_cap_bytes = defaults.memory_cap_bytes;
}

rhgen_status rhgen_generate(const rhgen_generate_options* options, rhgen_graph** graph, rhgen_timings* timings) {
    RHGEN_REQUIRE(options && graph, "options and graph output must not be NULL");
    *graph = nullptr;
    return guarded([&] {
        const auto resolved = resolve(*options);
        rhgen::PhaseTimings t;
        auto g = rhgen::generate_with_radius(options->nodes, resolved.radius, resolved.alpha,
                                             to_generator_options(*options), &t);
        copy_timings(t, resolved.calibration_seconds, timings);
        *graph = new rhgen_graph{std::move(g)};
    });
}

rhgen_status rhgen_generate_from_points(const rhgen_point* points, size_t count, double radius, double alpha,
                                        const rhgen_generate_options* options, rhgen_graph** graph) {
    RHGEN_REQUIRE(graph && (points || count == 0), "points and graph output must not be NULL");
    *graph = nullptr;
    return guarded([&] {
        rhgen_generate_options defaults;
        rhgen_generate_options_init(&defaults);
        const auto& o = options ? *options : defaults;
        std::vector<rhgen::PolarPoint> positions(count);
        for (size_t i = 0; i < count; ++i) positions[i] = {points[i].phi, points[i].r};
        auto g = rhgen::generate_from_positions(std::move(positions), radius, alpha, to_generator_options(o));
        *graph = new rhgen_graph{std::move(g)};
    });
}

rhgen_status rhgen_count_edges(const rhgen_generate_options* options, uint64_t* edges, rhgen_timings* timings) {
    RHGEN_REQUIRE(options && edges, "options and edge output must not be NULL");
    return guarded([&] {
        using Clock = std::chrono::steady_clock;
        const auto resolved = resolve(*options);
        const auto go = to_generator_options(*options);
        rhgen::PhaseTimings t;
        auto start = Clock::now();
        const auto positions =
            rhgen::generate_positions(options->nodes, resolved.alpha, resolved.radius, go.seed, go.threads);
        t.positions = std::chrono::duration<double>(Clock::now() - start).count();
        start = Clock::now();
        const auto index = rhgen::SlabIndex::build(
            std::span<const rhgen::PolarPoint>(positions),
            rhgen::compute_boundaries(resolved.radius, options->nodes, go.slab_ratio, go.slab_count), go.threads);
        t.index = std::chrono::duration<double>(Clock::now() - start).count();
        start = Clock::now();
        *edges = rhgen::stream_threshold_edges(index, resolved.radius, go.threads,
                                               [](std::size_t, std::span<const rhgen::Edge>) {});
        t.edges = std::chrono::duration<double>(Clock::now() - start).count();
        copy_timings(t, resolved.calibration_seconds, timings);
    });
}

rhgen_status rhgen_oracle_from_graph(const rhgen_graph* source, int force, rhgen_graph** graph) {
    RHGEN_REQUIRE(source && graph, "source and graph output must not be NULL");
    RHGEN_REQUIRE(source->graph.coords.size() == source->graph.n, "source graph has no coordinates");
    *graph = nullptr;
    return guarded([&] {
        auto g = rhgen::generate_quadratic(source->graph.coords, source->graph.radius, source->graph.alpha, force != 0);
        *graph = new rhgen_graph{std::move(g)};
    });
}

rhgen_status rhgen_generate_oracle(const rhgen_generate_options* options, int force, rhgen_graph** graph) {
    RHGEN_REQUIRE(options && graph, "options and graph output must not be NULL");
    *graph = nullptr;
    return guarded([&] {
        const auto resolved = resolve(*options);
        auto g = rhgen::generate_oracle(options->nodes, resolved.radius, resolved.alpha, options->seed, force != 0,
                                        options->threads);
        *graph = new rhgen_graph{std::move(g)};
    });
}

void rhgen_graph_free(rhgen_graph* graph) { delete graph; }

uint64_t rhgen_graph_node_count(const rhgen_graph* graph) { return graph ? graph->graph.n : 0; }

uint64_t rhgen_graph_edge_count(const rhgen_graph* graph) { return graph ? graph->graph.edges.size() : 0; }

double rhgen_graph_radius(const rhgen_graph* graph) { return graph ? graph->graph.radius : 0.0; }

double rhgen_graph_alpha(const rhgen_graph* graph) { return graph ? graph->graph.alpha : 0.0; }

const rhgen_edge* rhgen_graph_edges(const rhgen_graph* graph) {
    if (!graph || graph->graph.edges.empty()) return nullptr;
    return reinterpret_cast<const rhgen_edge*>(graph->graph.edges.data());
}

const rhgen_point* rhgen_graph_points(const rhgen_graph* graph) {
    if (!graph || graph->graph.coords.empty()) return nullptr;
    return reinterpret_cast<const rhgen_point*>(graph->graph.coords.data());
}

rhgen_status rhgen_graph_same_edges(const rhgen_graph* a, const rhgen_graph* b, int* equal) {
    RHGEN_REQUIRE(a && b && equal, "arguments must not be NULL");
    return guarded([&] { *equal = rhgen::same_edge_set(a->graph.edges, b->graph.edges) ? 1 : 0; });
}

rhgen_status rhgen_write_edge_list(const rhgen_graph* graph, const char* path, rhgen_edge_format format,
                                   int canonical) {
    RHGEN_REQUIRE(graph && path, "graph and path must not be NULL");
    return guarded([&] {
        rhgen::io::write_edge_list(path, graph->graph.edges,
                                   format == RHGEN_FORMAT_CSV ? rhgen::io::EdgeFormat::Csv
                                                              : rhgen::io::EdgeFormat::EdgeList,
                                   canonical != 0);
    });
}

rhgen_status rhgen_write_coordinates(const rhgen_graph* graph, const char* path) {
    RHGEN_REQUIRE(graph && path, "graph and path must not be NULL");
    return guarded([&] { rhgen::io::write_coordinates(path, graph->graph.coords); });
}

rhgen_status rhgen_read_graph(const char* edges_path, const char* coords_path, rhgen_graph** graph) {
    RHGEN_REQUIRE(edges_path && graph, "edge path and graph output must not be NULL");
    *graph = nullptr;
    return guarded([&] {
        rhgen::Graph g;
        g.edges = rhgen::io::read_edge_list(edges_path);
        std::uint64_t n = 0;
        for (const auto& e : g.edges) n = std::max<std::uint64_t>(n, std::uint64_t{e.v} + 1);
        if (coords_path) {
            g.coords = rhgen::io::read_coordinates(coords_path);
            if (g.coords.size() < n)
                rhgen::fail(rhgen::ErrorCode::Io, "edge list references vertices missing from the coordinate file");
            n = g.coords.size();
            for (const auto& p : g.coords) g.radius = std::max(g.radius, p.r);
        }
        g.n = n;
        *graph = new rhgen_graph{std::move(g)};
    });
}

rhgen_status rhgen_write_delta(const rhgen_edge* inserted, size_t n_inserted, const rhgen_edge* deleted,
                               size_t n_deleted, const char* path) {
    RHGEN_REQUIRE(path && (inserted || n_inserted == 0) && (deleted || n_deleted == 0), "invalid delta arguments");
    return guarded([&] {
        std::FILE* f = std::fopen(path, "wb");
        if (!f) rhgen::fail(rhgen::ErrorCode::Io, std::string("cannot open '") + path + "' for writing");
        bool ok = true;
        for (size_t i = 0; i < n_inserted && ok; ++i) ok = std::fprintf(f, "+ %u %u\n", inserted[i].u, inserted[i].v) > 0;
        for (size_t i = 0; i < n_deleted && ok; ++i) ok = std::fprintf(f, "- %u %u\n", deleted[i].u, deleted[i].v) > 0;
        if (std::fclose(f) != 0 || !ok) rhgen::fail(rhgen::ErrorCode::Io, std::string("write to '") + path + "' failed");
    });
}

rhgen_status rhgen_compute_metrics(const rhgen_graph* graph, uint32_t k_min, rhgen_metrics* metrics) {
    RHGEN_REQUIRE(graph && metrics, "graph and metrics must not be NULL");
    return guarded([&] {
        const auto r = rhgen::compute_metrics(graph->graph, k_min == 0 ? 10 : k_min);
        *metrics = {r.n, r.m, r.avg_deg, r.cc, r.assort, r.degeneracy, r.lcc_size, r.lcc_diam, r.gamma_hat};
    });
}

rhgen_status rhgen_format_metrics_kv(const rhgen_metrics* metrics, char* buffer, size_t size, size_t* required) {
    RHGEN_REQUIRE(metrics, "metrics must not be NULL");
    return write_string(rhgen::format_key_value(to_report(*metrics)), buffer, size, required);
}

rhgen_status rhgen_format_metrics_csv(const rhgen_metrics* metrics, int header, char* buffer, size_t size,
                                      size_t* required) {
    RHGEN_REQUIRE(metrics || header, "metrics must not be NULL");
    return write_string(header ? rhgen::metrics_csv_header() : rhgen::format_csv_row(to_report(*metrics)), buffer,
                        size, required);
}

rhgen_status rhgen_ks_radial(const rhgen_point* points, size_t count, double alpha, double radius, double* statistic,
                             double* p_value) {
    RHGEN_REQUIRE(points && count > 0 && statistic && p_value, "invalid KS arguments");
    return guarded([&] {
        std::vector<double> radii(count);
        for (size_t i = 0; i < count; ++i) radii[i] = points[i].r;
        const auto result =
            rhgen::stats::ks_test(radii, [&](double r) { return rhgen::radial_cdf(r, alpha, radius); });
        *statistic = result.statistic;
        *p_value = result.p_value;
    });
}

rhgen_status rhgen_fit_runtime(const double* n, const double* m, const double* seconds, size_t count,
                               double coefficients[3], double* r_squared) {
    RHGEN_REQUIRE(n && m && seconds && coefficients && r_squared && count >= 3, "need at least 3 observations");
    return guarded([&] {
        std::vector<std::vector<double>> design(count);
        for (size_t i = 0; i < count; ++i) design[i] = {n[i] * std::log(n[i]), m[i], 1.0};
        const auto fit = rhgen::stats::least_squares(design, std::span<const double>(seconds, count));
        std::copy(fit.coefficients.begin(), fit.coefficients.end(), coefficients);
        *r_squared = fit.r_squared;
    });
}

rhgen_status rhgen_least_squares(const double* design, size_t rows, size_t cols, const double* y,
                                 double* coefficients, double* r_squared) {
    RHGEN_REQUIRE(design && y && coefficients && r_squared && rows >= cols && cols > 0, "invalid least-squares input");
    return guarded([&] {
        std::vector<std::vector<double>> rows_v(rows);
        for (size_t i = 0; i < rows; ++i) rows_v[i].assign(design + i * cols, design + (i + 1) * cols);
        const auto fit = rhgen::stats::least_squares(rows_v, std::span<const double>(y, rows));
        std::copy(fit.coefficients.begin(), fit.coefficients.end(), coefficients);
        *r_squared = fit.r_squared;
    });
}

void rhgen_dynamic_options_init(rhgen_dynamic_options* options) {
    if (!options) return;
    const rhgen::MovementOptions d;
    *options = {d.move_fraction, d.tau_phi_min, d.tau_phi_max, d.tau_r_min, d.tau_r_max, d.seed, d.threads};
}

rhgen_status rhgen_dynamic_create(const rhgen_graph* graph, const rhgen_dynamic_options* options,
                                  rhgen_dynamic** dynamic) {
    RHGEN_REQUIRE(graph && dynamic, "graph and dynamic output must not be NULL");
    *dynamic = nullptr;
    return guarded([&] {
        rhgen::MovementOptions o;
        if (options) {
            o.move_fraction = options->move_fraction;
            o.tau_phi_min = options->tau_phi_min;
            o.tau_phi_max = options->tau_phi_max;
            o.tau_r_min = options->tau_r_min;
            o.tau_r_max = options->tau_r_max;
            o.seed = options->seed;
            o.threads = options->threads;
        }
        *dynamic = new rhgen_dynamic{rhgen::DynamicGraph(graph->graph, o), {}};
    });
}

void rhgen_dynamic_free(rhgen_dynamic* dynamic) { delete dynamic; }

rhgen_status rhgen_dynamic_step(rhgen_dynamic* dynamic, size_t* n_inserted, size_t* n_deleted) {
    RHGEN_REQUIRE(dynamic, "dynamic must not be NULL");
    return guarded([&] {
        dynamic->last = dynamic->model.step();
        if (n_inserted) *n_inserted = dynamic->last.inserted.size();
        if (n_deleted) *n_deleted = dynamic->last.deleted.size();
    });
}

rhgen_status rhgen_dynamic_last_delta(const rhgen_dynamic* dynamic, const rhgen_edge** inserted, size_t* n_inserted,
                                      const rhgen_edge** deleted, size_t* n_deleted) {
    RHGEN_REQUIRE(dynamic && inserted && n_inserted && deleted && n_deleted, "arguments must not be NULL");
    *inserted = reinterpret_cast<const rhgen_edge*>(dynamic->last.inserted.data());
    *n_inserted = dynamic->last.inserted.size();
    *deleted = reinterpret_cast<const rhgen_edge*>(dynamic->last.deleted.data());
    *n_deleted = dynamic->last.deleted.size();
    return RHGEN_OK;
}

rhgen_status rhgen_dynamic_snapshot(const rhgen_dynamic* dynamic, rhgen_graph** graph) {
    RHGEN_REQUIRE(dynamic && graph, "dynamic and graph output must not be NULL");
    *graph = nullptr;
    return guarded([&] { *graph = new rhgen_graph{dynamic->model.snapshot()}; });
}

} // extern "C"
