/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface to the random-triangle library.
 *
 * Every fallible call returns an rtri_status; on failure a description is
 * available from rtri_last_error() on the calling thread. Objects behind
 * opaque handles are owned by the caller and released with the matching
 * *_destroy function. Strings returned by accessors stay valid until the
 * owning handle is destroyed.
 */
#ifndef RTRI_RTRI_H
#define RTRI_RTRI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#    if defined(RTRI_BUILDING_LIBRARY)
#        define RTRI_API __declspec(dllexport)
#    else
#        define RTRI_API __declspec(dllimport)
#    endif
#else
#    define RTRI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rtri_status
{
    RTRI_OK = 0,
    RTRI_E_INVALID_ARGUMENT = 1,
    RTRI_E_NON_FINITE = 2,
    RTRI_E_DOMAIN = 3,
    RTRI_E_DEGENERATE_REGION = 4,
    RTRI_E_UNKNOWN_NAME = 5,
    RTRI_E_WORK_LIMIT = 6,
    RTRI_E_INTERNAL = 99
} rtri_status;

RTRI_API const char* rtri_version(void);
/* Message for the most recent failure on this thread ("" if none). */
RTRI_API const char* rtri_last_error(void);
RTRI_API const char* rtri_status_name(rtri_status status);

/*-------------------------------------------------------------------------*/
/* Geometry */

typedef struct rtri_point2
{
    double x, y;
} rtri_point2;

typedef struct rtri_point3
{
    double x, y, z;
} rtri_point3;

typedef enum rtri_orientation
{
    RTRI_CCW = 1,
    RTRI_CW = -1,
    RTRI_COLLINEAR = 0
} rtri_orientation;

RTRI_API rtri_status rtri_signed_area(rtri_point2 p1, rtri_point2 p2,
                                      rtri_point2 p3, double* out);
RTRI_API rtri_status rtri_triangle_area(rtri_point2 p1, rtri_point2 p2,
                                        rtri_point2 p3, double* out);
RTRI_API rtri_status rtri_orientation_of(rtri_point2 p1, rtri_point2 p2,
                                         rtri_point2 p3,
                                         rtri_orientation* out);
RTRI_API rtri_status rtri_signed_volume_tetra(rtri_point3 p1, rtri_point3 p2,
                                              rtri_point3 p3, rtri_point3 p4,
                                              double* out);

/*-------------------------------------------------------------------------*/
/* Exact rationals */

typedef struct rtri_rational rtri_rational;

RTRI_API void rtri_rational_destroy(rtri_rational* r);
/* "p/q" in lowest terms */
RTRI_API const char* rtri_rational_str(const rtri_rational* r);
RTRI_API double rtri_rational_to_double(const rtri_rational* r);
/* 1 if equal, 0 otherwise */
RTRI_API int rtri_rational_equal(const rtri_rational* a,
                                 const rtri_rational* b);

/*-------------------------------------------------------------------------*/
/* Region catalog and nested quadrature */

typedef struct rtri_quad_config
{
    double rel_tol;
    int max_depth;
    int inner_analytic;
} rtri_quad_config;

/* rel_tol = 1e-4, max_depth = 12, inner_analytic = 1 */
RTRI_API rtri_quad_config rtri_quad_config_default(void);

typedef struct rtri_region_result
{
    double value;
    double est_error;
    uint64_t evaluations;
    int budget_exhausted;
} rtri_region_result;

typedef enum rtri_catalog_kind
{
    RTRI_CATALOG_RECTANGLE = 0,          /* I1..I5 */
    RTRI_CATALOG_SQUARE = 1,             /* I1..I10, requires a == b */
    RTRI_CATALOG_NORMALIZER = 2,         /* J1..J5 */
    RTRI_CATALOG_SQUARE_NORMALIZER = 3   /* J1..J10, requires a == b */
} rtri_catalog_kind;

typedef struct rtri_catalog rtri_catalog;

RTRI_API rtri_status rtri_catalog_create(rtri_catalog_kind kind, double a,
                                         double b, rtri_catalog** out);
RTRI_API void rtri_catalog_destroy(rtri_catalog* catalog);
RTRI_API size_t rtri_catalog_size(const rtri_catalog* catalog);
RTRI_API const char* rtri_catalog_name(const rtri_catalog* catalog,
                                       size_t index);
RTRI_API int rtri_catalog_sign(const rtri_catalog* catalog, size_t index);
/* Nonzero if the 6-vector (x1,y1,x2,y2,x3,y3) lies in region `index` */
RTRI_API int rtri_catalog_contains(const rtri_catalog* catalog, size_t index,
                                   const double point[6]);
RTRI_API rtri_status rtri_catalog_integrate(const rtri_catalog* catalog,
                                            size_t index,
                                            const rtri_quad_config* cfg,
                                            rtri_region_result* out);
/* Fills out[0..size) in catalog order; threads = 0 uses all cores. */
RTRI_API rtri_status rtri_catalog_integrate_all(const rtri_catalog* catalog,
                                                const rtri_quad_config* cfg,
                                                unsigned threads,
                                                rtri_region_result* out);

typedef struct rtri_area_ratio
{
    double value;
    double numerator;
    double denominator;
    double est_error;
    int budget_exhausted;
} rtri_area_ratio;

RTRI_API rtri_status rtri_expected_area_interior(double a, double b,
                                                 const rtri_quad_config* cfg,
                                                 unsigned threads,
                                                 rtri_area_ratio* out);
RTRI_API rtri_status rtri_expected_area_square(double a,
                                               const rtri_quad_config* cfg,
                                               unsigned threads,
                                               rtri_area_ratio* out);
/* Names: I1..I10, J1..J10, I15, J15, II, JJ, RESULT */
RTRI_API rtri_status rtri_exact_reference(const char* name, double a,
                                          double b, rtri_rational** out);

/*-------------------------------------------------------------------------*/
/* Square frame */

RTRI_API rtri_status rtri_frame_point(double t, rtri_point2* out);
/* side_case: 1 bottom, 2 right, 3 top, 4 left */
RTRI_API rtri_status rtri_frame_side_case(int side_case, double x1,
                                          const rtri_quad_config* cfg,
                                          double* out);
RTRI_API rtri_status rtri_frame_side_case_closed_form(int side_case,
                                                      double x1, double* out);
RTRI_API rtri_status rtri_frame_sum(double x1, const rtri_quad_config* cfg,
                                    double* out);

typedef struct rtri_frame_result
{
    double value;
    double numerator;
    double est_error;
} rtri_frame_result;

/* p1_side: 1..4, the side hosting the first vertex */
RTRI_API rtri_status rtri_expected_area_frame(const rtri_quad_config* cfg,
                                              int p1_side,
                                              rtri_frame_result* out);

/*-------------------------------------------------------------------------*/
/* Midpoint lattice */

RTRI_API rtri_status rtri_lattice_point(int n, size_t index,
                                        rtri_rational** x,
                                        rtri_rational** y);
/* work_cap = 0 uses the default (1e8 ordered triples) */
RTRI_API rtri_status rtri_lattice_mean_area(int n, uint64_t work_cap,
                                            int symmetric, unsigned threads,
                                            rtri_rational** out);

/*-------------------------------------------------------------------------*/
/* Monte Carlo */

typedef enum rtri_mc_kind
{
    RTRI_MC_INTERIOR = 0, /* triangle in [0,a] x [0,b] */
    RTRI_MC_FRAME = 1,    /* triangle on the unit-square boundary */
    RTRI_MC_TETRA = 2     /* tetrahedron in the cube of side a */
} rtri_mc_kind;

typedef struct rtri_mc_problem
{
    rtri_mc_kind kind;
    double a;
    double b;
} rtri_mc_problem;

typedef struct rtri_estimate
{
    double mean;
    double variance;
    double std_error;
    double ci95_low;
    double ci95_high;
    uint64_t n;
    uint64_t seed;
    uint32_t chunks;
} rtri_estimate;

RTRI_API rtri_status rtri_mc_estimate(const rtri_mc_problem* problem,
                                      uint64_t n, uint64_t seed,
                                      uint32_t chunks, unsigned threads,
                                      rtri_estimate* out);

/*-------------------------------------------------------------------------*/
/* Acceptance report */

typedef struct rtri_report rtri_report;

typedef struct rtri_criterion
{
    int id;
    const char* criterion;
    const char* expected;
    const char* actual;
    const char* tolerance;
    int pass;
    double seconds;
} rtri_criterion;

RTRI_API rtri_status rtri_acceptance_run(unsigned threads, uint64_t seed,
                                         rtri_report** out);
RTRI_API void rtri_report_destroy(rtri_report* report);
RTRI_API size_t rtri_report_size(const rtri_report* report);
RTRI_API rtri_status rtri_report_entry(const rtri_report* report,
                                       size_t index, rtri_criterion* out);
RTRI_API double rtri_report_ratio_22_45(const rtri_report* report);
RTRI_API int rtri_report_all_pass(const rtri_report* report);

#ifdef __cplusplus
}
#endif

#endif /* RTRI_RTRI_H */
