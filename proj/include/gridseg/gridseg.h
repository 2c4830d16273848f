/* gridseg: tiles visited by a line segment on a rectangular grid.
 *
 * The grid is the set of lines x = k*a, y = m*b (k, m integers), a, b > 0.
 * A tile is an open a-by-b cell; a segment visits a tile when it meets the
 * tile's interior.  The library answers the direct question (maximum tiles
 * visitable with a given length), the inverse question (infimum length needed
 * to visit a given count), the average over uniformly random placements, and
 * the probability of maximal coverage on the unit square grid, each backed by
 * brute-force and Monte Carlo oracles.
 *
 * All functions return a status code (GRIDSEG_OK on success) and write results
 * through out-pointers.  Inputs are never mutated; every function is
 * thread-safe.  Samplers are immutable after creation.
 */

#ifndef GRIDSEG_H
#define GRIDSEG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define GRIDSEG_OK 0
#define GRIDSEG_ERR_DOMAIN 1     /* argument outside the documented domain */
#define GRIDSEG_ERR_INFEASIBLE 2 /* no segment satisfies the requested constraints */
#define GRIDSEG_ERR_NULL 3       /* required pointer argument is NULL */
#define GRIDSEG_ERR_INTERNAL 4   /* construction or verification failed unexpectedly */

/* Human-readable name for a status code. Never returns NULL. */
const char* gridseg_strerror(int code);

/* Library version string, e.g. "1.0.0". */
const char* gridseg_version(void);

typedef struct {
  double x1, y1;
  double x2, y2;
} gridseg_segment;

/* Discrete bounding rectangle: smallest grid-aligned rectangle containing a
 * segment. (left, bottom) is its lower-left corner; i and j are its width and
 * height in tile units (either may be 0 for segments lying on a grid line). */
typedef struct {
  double left, bottom;
  long long i, j;
} gridseg_rect;

typedef struct {
  long long tiles; /* maximum number of visited tiles */
  long long i, j;  /* bounding-rectangle dims attaining it */
  gridseg_segment witness; /* verified placement attaining the count */
} gridseg_solve_result;

typedef struct {
  double inf_length; /* infimum length (not attained) */
  long long i, j;    /* optimal bounding-rectangle dims */
  double rounding_residual; /* distance from the real-valued optimum, in [0, 1/2] */
} gridseg_inverse_result;

/* ---- geometry ---- */

/* Bounding rectangle of a segment on the (a, b) grid. a, b > 0. */
int gridseg_bounding_rect(double a, double b, const gridseg_segment* seg,
                          gridseg_rect* out);

/* 1 if some grid point strictly inside the segment's bounding rectangle lies
 * on the closed segment, else 0. Incidence is decided by an exact predicate
 * with relative tolerance 1e-12. */
int gridseg_hits_interior_grid_point(double a, double b,
                                     const gridseg_segment* seg, int* out);

/* Exact count of tiles whose open interior the segment meets.  Segments lying
 * on a grid line visit 0 tiles; a zero-length segment inside a tile visits 1. */
int gridseg_count_visited_tiles(double a, double b, const gridseg_segment* seg,
                                long long* out);

/* Transversal crossings of horizontal (h) and vertical (v) grid lines.
 * Endpoint touches and collinear overlaps count as zero crossings. */
int gridseg_crossing_count(double a, double b, const gridseg_segment* seg,
                           long long* h, long long* v);

/* 1 if a segment of length at most len can have bounding-rectangle dims
 * (i, j), i.e. len^2 > (i-2)^2 a^2 + (j-2)^2 b^2 strictly; else 0.
 * Requires i, j >= 2. */
int gridseg_pair_feasible(double a, double b, double len, long long i,
                          long long j, int* out);

/* ---- direct and inverse solvers ---- */

/* The canonical optimal dims (i, j) with i + j - 1 = tiles that minimize the
 * required length. tiles >= 3. */
int gridseg_optimal_pair(double a, double b, long long tiles, long long* i,
                         long long* j);

/* The two parallel lines j = slope*i + offset bounding the optimal pair set:
 * every optimal pair lies strictly below the upper line and on or above the
 * lower line. */
int gridseg_optimal_pair_lines(double a, double b, double* slope,
                               double* upper_offset, double* lower_offset);

/* Maximum tiles visitable by a segment of length len, with the optimal dims
 * and a verified witness placement. len > 0. Within ~1e-9 of the bound for
 * the count, large-spacing grids can leave no placement that realizes the
 * dims under the 1e-12 tolerances; this then returns
 * GRIDSEG_ERR_INFEASIBLE while gridseg_max_tiles_count still answers. */
int gridseg_max_tiles(double a, double b, double len, gridseg_solve_result* out);

/* The count alone, no witness construction. len > 0. */
int gridseg_max_tiles_count(double a, double b, double len, long long* out);

/* The attaining dims alone, no witness construction. len > 0. */
int gridseg_max_tiles_pair(double a, double b, double len, long long* i,
                           long long* j);

/* Infimum length needed to visit at least `tiles` tiles (0 for tiles <= 3,
 * since arbitrarily short segments near a grid point visit 3). tiles >= 1. */
int gridseg_min_length(double a, double b, long long tiles,
                       gridseg_inverse_result* out);

/* Unit-square-grid specializations (a = b = 1). */
int gridseg_max_tiles_unit_square(double len, gridseg_solve_result* out);
int gridseg_min_length_unit_square(long long tiles, double* out);

/* Integer sequences on the unit square grid, in exact integer arithmetic:
 * funti(n): maximum tiles for integer length n (n >= 1);
 * funli(t): minimum integer length visiting at least t tiles (t >= 1). */
int gridseg_funti(unsigned long long n, unsigned long long* out);
int gridseg_funli(unsigned long long tiles, unsigned long long* out);

/* A segment of length exactly len whose bounding rectangle has dims (i, j)
 * and which hits no interior grid point, verified before returning.
 * Requires i, j >= 2 and (i-2)^2 a^2 + (j-2)^2 b^2 < len^2 <= i^2 a^2 + j^2 b^2. */
int gridseg_place_witness(double a, double b, long long i, long long j,
                          double len, gridseg_segment* out);

/* Limit of tiles/length for long segments: sqrt(1/a^2 + 1/b^2). */
int gridseg_asymptotic_slope(double a, double b, double* out);

/* Half-open interval (low, high] of lengths visiting exactly `tiles` tiles at
 * most on the unit square grid. tiles >= 3. */
int gridseg_length_interval(long long tiles, double* low, double* high);

/* ---- closed-form probabilities (uniformly random placement) ---- */

/* Expected visited tiles: 2*len/pi * (1/a + 1/b) + 1. len > 0. */
int gridseg_avg_tiles(double a, double b, double len, double* out);

/* Length whose expected visited tiles equals avg. avg > 1. */
int gridseg_avg_tiles_inverse(double a, double b, double avg, double* out);

/* Antiderivative of arccos on [0, 1]: z*arccos(z) - sqrt(1-z^2) + 1. */
int gridseg_helper_f(double z, double* out);

/* Quarter-plane overlap term used by the maximal-coverage probability.
 * Requires x > 0 and 0 <= u, v <= 2x. */
int gridseg_helper_g(double x, double u, double v, double* out);

/* Pr[bounding-rectangle width >= n] for a random segment of length len
 * (gridseg_tail_prob_j: the height analogue). n >= 1, len > 0. */
int gridseg_tail_prob_i(double a, double b, double len, long long n, double* out);
int gridseg_tail_prob_j(double a, double b, double len, long long n, double* out);

/* Probability that a random segment of length len on the unit square grid
 * visits the maximum possible number of tiles. len > 0. */
int gridseg_prob_max(double len, double* out);

/* Largest length at which the unit-square maximum is still `tiles`;
 * the maximum jumps just above it. tiles >= 3. */
int gridseg_breakpoint(long long tiles, double* out);

/* Ratio of expected crossings to the straight-comparison upper bound for
 * aspect ratio r = a/b: 2(1+r)/(pi*sqrt(1+r^2)). Symmetric under r -> 1/r. */
int gridseg_asymptotic_ratio(double r, double* out);

/* Limits of the maximal-coverage probability at breakpoints:
 * tiles*prob -> odd_limit (odd) or even_limit (even); limsup of
 * len*prob is limsup_scaled. */
int gridseg_peak_limits(double* odd_limit, double* even_limit,
                        double* limsup_scaled);

/* Diagnostic: tiles * prob_max(breakpoint(tiles)). tiles >= 3. */
int gridseg_prob_max_peak_scaled(long long tiles, double* out);

/* ---- Monte Carlo oracle ---- */

typedef struct {
  double a, b;
  double len;
  unsigned long long samples; /* >= 1 */
  unsigned long long seed;
  unsigned int chunks; /* >= 1; independent substreams, merged in index order */
} gridseg_sampler_config;

typedef struct {
  double mean;
  double std_error;
  unsigned long long n;
  double ci_low, ci_high; /* mean -/+ 1.96 * std_error */
} gridseg_estimate;

/* Opaque sampler handle. Identical configs produce bit-identical estimates
 * regardless of thread count. */
typedef struct gridseg_sampler gridseg_sampler;

int gridseg_sampler_create(const gridseg_sampler_config* cfg,
                           gridseg_sampler** out);
void gridseg_sampler_destroy(gridseg_sampler* s);

/* The index-th segment of the sampler's stream (counter-based; pure function
 * of config and index). index < samples. */
int gridseg_sample_segment(const gridseg_sampler* s, unsigned long long index,
                           gridseg_segment* out);

/* Mean visited tiles over the sample stream. */
int gridseg_estimate_avg_tiles(const gridseg_sampler* s, gridseg_estimate* out);

/* Indicator means of Pr[dim >= n] for each n in n_values (axis 0: width,
 * axis 1: height), written to outs[0..count-1], one shared sample pass. */
int gridseg_estimate_tail_prob(const gridseg_sampler* s, int axis,
                               const long long* n_values, size_t count,
                               gridseg_estimate* outs);

/* Indicator mean of visiting the maximum possible tiles. Requires a unit
 * square grid config (a = b = 1). */
int gridseg_estimate_prob_max(const gridseg_sampler* s, gridseg_estimate* out);

/* Exhaustive search over dims 2 <= i, j <= bound for the maximum of
 * i + j - 1 subject to feasibility; independent of the closed forms.
 * bound <= 0 selects the smallest valid bound; an explicit bound must be
 * at least ceil(len/min(a,b)) + 3. */
int gridseg_brute_force_max_tiles(double a, double b, double len,
                                  long long bound, long long* tiles,
                                  long long* i, long long* j);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRIDSEG_H */
