#ifndef FRECHET_C_H
#define FRECHET_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    FRECHET_OK = 0,
    FRECHET_E_INPUT = 1,
    FRECHET_E_PRECONDITION = 2,
    FRECHET_E_IO = 3,
    FRECHET_E_INTERNAL = 4
} frechet_status;

typedef enum {
    FRECHET_MODE_EXACT = 0,
    FRECHET_MODE_APPROX = 1,
    FRECHET_MODE_DISCRETE = 2,
    FRECHET_MODE_DISCRETE_APPROX = 3
} frechet_mode;

typedef struct frechet_curve frechet_curve;

/* zero for mu1..omega selects the default schedule */
typedef struct {
    double eps;
    int mu1, mu2, mu3, omega;
    double sample_c;
    uint64_t seed;
    int deterministic_fallback;
} frechet_params;

typedef struct {
    uint64_t wavefront_cells;
    uint64_t preprocess_cells;
    uint64_t cover_work;
    uint64_t cover_queries;
    uint64_t surrogate_tests;
    uint64_t samples_drawn;
    uint64_t fallbacks_triggered;
    uint64_t reach_calls;
    uint64_t decision_calls;
} frechet_counters;

typedef struct {
    double value;
    double lower;
    double upper;
    double ratio_bound; /* 1 for the exact modes */
    int decisions;
    frechet_counters counters;
} frechet_result;

void frechet_params_default(frechet_params* p);

/* message of the last failure on this thread */
const char* frechet_last_error(void);

frechet_status frechet_curve_new(int dim, const double* xs, size_t npoints, frechet_curve** out);
frechet_status frechet_curve_read_csv(const char* path, frechet_curve** out);
frechet_status frechet_curve_write_csv(const frechet_curve* c, const char* path);
/* kind: walk | zigzag | circle | perturbed-copy (base required for the last) */
frechet_status frechet_curve_generate(const char* kind, int n, uint64_t seed, double param,
                                      const frechet_curve* base, int dim, frechet_curve** out);
void frechet_curve_free(frechet_curve* c);
int frechet_curve_size(const frechet_curve* c);
int frechet_curve_dim(const frechet_curve* c);
const double* frechet_curve_data(const frechet_curve* c);

frechet_status frechet_mode_parse(const char* s, frechet_mode* out);

/* answer: 1 yes, 0 no; counters may be NULL */
frechet_status frechet_decide(const frechet_curve* a, const frechet_curve* b, frechet_mode mode, double delta,
                              const frechet_params* p, int* answer, frechet_counters* counters);
frechet_status frechet_compute(const frechet_curve* a, const frechet_curve* b, frechet_mode mode,
                               const frechet_params* p, frechet_result* out);

/* audited ratio bound for the given parameters (continuous or discrete) */
frechet_status frechet_ratio_bound(const frechet_params* p, int discrete, int m, double* out);

/* strings returned below are released with frechet_string_free */
frechet_status frechet_free_space_svg(const frechet_curve* a, const frechet_curve* b, double delta, char** svg);
frechet_status frechet_bench_json(const char* modes, const int* sizes, int nsizes, int reps, uint64_t seed,
                                  double eps, char** json);
void frechet_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
