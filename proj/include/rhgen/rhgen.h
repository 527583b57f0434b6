/*
 * rhgen: threshold random hyperbolic graph generator, C interface.
 *
 * All objects are opaque handles created by rhgen_*_create / generate calls
 * and released with the matching *_free function. Every fallible call
 * returns an rhgen_status; on failure rhgen_last_error() describes the cause
 * (the message is thread-local and valid until the next failing call on the
 * same thread).
 */
#ifndef RHGEN_RHGEN_H
#define RHGEN_RHGEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(RHGEN_BUILDING_LIBRARY)
#define RHGEN_API __attribute__((visibility("default")))
#else
#define RHGEN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rhgen_status {
    RHGEN_OK = 0,
    RHGEN_ERR_INVALID_ARGUMENT = 1,
    RHGEN_ERR_CALIBRATION = 2,
    RHGEN_ERR_IO = 3,
    RHGEN_ERR_RESOURCE_LIMIT = 4,
    RHGEN_ERR_INTERNAL = 5
} rhgen_status;

typedef struct rhgen_graph rhgen_graph;
typedef struct rhgen_dynamic rhgen_dynamic;

typedef struct rhgen_point {
    double phi;
    double r;
} rhgen_point;

typedef struct rhgen_edge {
    uint32_t u;
    uint32_t v;
} rhgen_edge;

/* How the disk radius is chosen. */
typedef enum rhgen_radius_mode {
    RHGEN_BY_AVG_DEGREE = 0,   /* calibrate R from avg_degree */
    RHGEN_BY_DISK_CONSTANT = 1, /* R = 2 ln n + disk_constant */
    RHGEN_BY_RADIUS = 2        /* R = radius */
} rhgen_radius_mode;

typedef enum rhgen_edge_format {
    RHGEN_FORMAT_EDGE_LIST = 0, /* "u v" */
    RHGEN_FORMAT_CSV = 1        /* "u,v" with header */
} rhgen_edge_format;

typedef struct rhgen_generate_options {
    uint64_t nodes;
    rhgen_radius_mode mode;
    double avg_degree;
    double disk_constant;
    double radius;
    /* gamma is used unless alpha > 0 is given, in which case alpha wins. */
    double gamma;
    double alpha;
    uint64_t seed;
    int threads;          /* 0: library default */
    double slab_ratio;    /* default 0.9 */
    uint32_t slab_count;  /* 0: ceil(log2 n) */
    uint64_t memory_cap_bytes;
} rhgen_generate_options;

typedef struct rhgen_timings {
    double calibration;
    double positions;
    double index;
    double edges;
    double assembly;
} rhgen_timings;

typedef struct rhgen_metrics {
    uint64_t n;
    uint64_t m;
    double avg_deg;
    double cc;
    double assort;
    uint32_t degeneracy;
    uint64_t lcc_size;
    uint32_t lcc_diam;
    double gamma_hat; /* NaN when the degree tail is too thin */
} rhgen_metrics;

typedef struct rhgen_dynamic_options {
    double move_fraction; /* default 1.0 */
    double tau_phi_min;   /* default -1 */
    double tau_phi_max;   /* default 1 */
    double tau_r_min;     /* default -10 */
    double tau_r_max;     /* default 1 */
    uint64_t seed;
    int threads;
} rhgen_dynamic_options;

/* ---- errors and version ------------------------------------------------ */

RHGEN_API const char* rhgen_version(void);
RHGEN_API const char* rhgen_last_error(void);
RHGEN_API const char* rhgen_status_string(rhgen_status status);

/* ---- parameters --------------------------------------------------------- */

RHGEN_API rhgen_status rhgen_alpha_from_gamma(double gamma, double* alpha);
RHGEN_API double rhgen_expected_avg_degree(double n, double alpha, double radius);
RHGEN_API rhgen_status rhgen_target_radius(uint64_t n, double avg_degree, double alpha, double* radius);

/* ---- static generation -------------------------------------------------- */

RHGEN_API void rhgen_generate_options_init(rhgen_generate_options* options);

/* Samples positions and builds the threshold graph. timings may be NULL. */
RHGEN_API rhgen_status rhgen_generate(const rhgen_generate_options* options, rhgen_graph** graph,
                                      rhgen_timings* timings);

/* Threshold graph on caller-supplied positions (slab index path). */
RHGEN_API rhgen_status rhgen_generate_from_points(const rhgen_point* points, size_t count, double radius,
                                                  double alpha, const rhgen_generate_options* options,
                                                  rhgen_graph** graph);

/* Counts threshold edges without materializing them. */
RHGEN_API rhgen_status rhgen_count_edges(const rhgen_generate_options* options, uint64_t* edges,
                                         rhgen_timings* timings);

/* Quadratic all-pairs reference on the positions of an existing graph. */
RHGEN_API rhgen_status rhgen_oracle_from_graph(const rhgen_graph* source, int force, rhgen_graph** graph);

/* Independent reference generator: own position sampler + all-pairs test. */
RHGEN_API rhgen_status rhgen_generate_oracle(const rhgen_generate_options* options, int force,
                                             rhgen_graph** graph);

/* ---- graph access ------------------------------------------------------- */

RHGEN_API void rhgen_graph_free(rhgen_graph* graph);
RHGEN_API uint64_t rhgen_graph_node_count(const rhgen_graph* graph);
RHGEN_API uint64_t rhgen_graph_edge_count(const rhgen_graph* graph);
RHGEN_API double rhgen_graph_radius(const rhgen_graph* graph);
RHGEN_API double rhgen_graph_alpha(const rhgen_graph* graph);
/* Borrowed views; valid until the graph is freed. Points are NULL for graphs read from bare edge lists. */
RHGEN_API const rhgen_edge* rhgen_graph_edges(const rhgen_graph* graph);
RHGEN_API const rhgen_point* rhgen_graph_points(const rhgen_graph* graph);
RHGEN_API rhgen_status rhgen_graph_same_edges(const rhgen_graph* a, const rhgen_graph* b, int* equal);

/* ---- file formats ------------------------------------------------------- */

RHGEN_API rhgen_status rhgen_write_edge_list(const rhgen_graph* graph, const char* path, rhgen_edge_format format,
                                             int canonical);
RHGEN_API rhgen_status rhgen_write_coordinates(const rhgen_graph* graph, const char* path);
/* coords_path may be NULL; then n = max id + 1 and the graph has no points. */
RHGEN_API rhgen_status rhgen_read_graph(const char* edges_path, const char* coords_path, rhgen_graph** graph);
RHGEN_API rhgen_status rhgen_write_delta(const rhgen_edge* inserted, size_t n_inserted, const rhgen_edge* deleted,
                                         size_t n_deleted, const char* path);

/* ---- analysis ----------------------------------------------------------- */

RHGEN_API rhgen_status rhgen_compute_metrics(const rhgen_graph* graph, uint32_t k_min, rhgen_metrics* metrics);

/* Formats into buffer (NUL-terminated). *required receives the needed size
 * including the terminator; returns RHGEN_ERR_RESOURCE_LIMIT when too small. */
RHGEN_API rhgen_status rhgen_format_metrics_kv(const rhgen_metrics* metrics, char* buffer, size_t size,
                                               size_t* required);
RHGEN_API rhgen_status rhgen_format_metrics_csv(const rhgen_metrics* metrics, int header, char* buffer, size_t size,
                                                size_t* required);

/* Kolmogorov-Smirnov test of radii against the model's radial CDF. */
RHGEN_API rhgen_status rhgen_ks_radial(const rhgen_point* points, size_t count, double alpha, double radius,
                                       double* statistic, double* p_value);

/* Least-squares fit t = a * n log n + b * m + c; coefficients = {a, b, c}. */
RHGEN_API rhgen_status rhgen_fit_runtime(const double* n, const double* m, const double* seconds, size_t count,
                                         double coefficients[3], double* r_squared);

/* General least squares: design is row-major rows x cols; coefficients has cols entries. */
RHGEN_API rhgen_status rhgen_least_squares(const double* design, size_t rows, size_t cols, const double* y,
                                           double* coefficients, double* r_squared);

/* ---- dynamic model ------------------------------------------------------ */

RHGEN_API void rhgen_dynamic_options_init(rhgen_dynamic_options* options);
/* Copies the graph; the source handle stays owned by the caller. */
RHGEN_API rhgen_status rhgen_dynamic_create(const rhgen_graph* graph, const rhgen_dynamic_options* options,
                                            rhgen_dynamic** dynamic);
RHGEN_API void rhgen_dynamic_free(rhgen_dynamic* dynamic);
/* One movement step; the delta stays readable until the next step. */
RHGEN_API rhgen_status rhgen_dynamic_step(rhgen_dynamic* dynamic, size_t* n_inserted, size_t* n_deleted);
RHGEN_API rhgen_status rhgen_dynamic_last_delta(const rhgen_dynamic* dynamic, const rhgen_edge** inserted,
                                                size_t* n_inserted, const rhgen_edge** deleted, size_t* n_deleted);
RHGEN_API rhgen_status rhgen_dynamic_snapshot(const rhgen_dynamic* dynamic, rhgen_graph** graph);

#ifdef __cplusplus
}
#endif

#endif /* RHGEN_RHGEN_H */
