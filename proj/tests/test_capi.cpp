#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "gridseg/gridseg.h"

namespace {

const double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

gridseg_segment seg(double x1, double y1, double x2, double y2) {
  gridseg_segment s;
  s.x1 = x1;
  s.y1 = y1;
  s.x2 = x2;
  s.y2 = y2;
  return s;
}

}  // namespace

TEST_CASE("version and error strings") {
  CHECK(std::strcmp(gridseg_version(), "1.0.0") == 0);
  for (int code = 0; code <= 4; ++code) {
    CHECK(gridseg_strerror(code) != nullptr);
    CHECK(std::strlen(gridseg_strerror(code)) > 0);
  }
  CHECK(gridseg_strerror(999) != nullptr);
}

TEST_CASE("geometry surface") {
  const gridseg_segment s = seg(0.2, 0.3, 1.7, 0.9);
  gridseg_rect r;
  REQUIRE(gridseg_bounding_rect(1.0, 1.0, &s, &r) == GRIDSEG_OK);
  CHECK(r.i == 2);
  CHECK(r.j == 1);
  CHECK(r.left == 0.0);
  CHECK(r.bottom == 0.0);

  long long tiles = -1;
  REQUIRE(gridseg_count_visited_tiles(1.0, 1.0, &s, &tiles) == GRIDSEG_OK);
  CHECK(tiles == 2);

  const gridseg_segment online = seg(0.3, 1.0, 2.6, 1.0);
  REQUIRE(gridseg_count_visited_tiles(1.0, 1.0, &online, &tiles) == GRIDSEG_OK);
  CHECK(tiles == 0);

  const gridseg_segment diag = seg(0.0, 0.0, 2.0, 2.0);
  int hit = 0;
  REQUIRE(gridseg_hits_interior_grid_point(1.0, 1.0, &diag, &hit) == GRIDSEG_OK);
  CHECK(hit == 1);
  REQUIRE(gridseg_count_visited_tiles(1.0, 1.0, &diag, &tiles) == GRIDSEG_OK);
  CHECK(tiles == 2);

  long long h = -1, v = -1;
  const gridseg_segment flat = seg(0.5, 0.5, 2.5, 0.5);
  REQUIRE(gridseg_crossing_count(1.0, 1.0, &flat, &h, &v) == GRIDSEG_OK);
  CHECK(h == 0);
  CHECK(v == 2);

  int feasible = -1;
  REQUIRE(gridseg_pair_feasible(1.0, 1.0, 1.0, 2, 2, &feasible) == GRIDSEG_OK);
  CHECK(feasible == 1);
  REQUIRE(gridseg_pair_feasible(1.0, 1.0, 1.0, 3, 2, &feasible) == GRIDSEG_OK);
  CHECK(feasible == 0);
  CHECK(gridseg_pair_feasible(1.0, 1.0, 1.0, 1, 2, &feasible) ==
        GRIDSEG_ERR_DOMAIN);
}

TEST_CASE("solver surface: worked examples and witnesses") {
  gridseg_solve_result r;
  REQUIRE(gridseg_max_tiles(1.35, 1.0, 1.0, &r) == GRIDSEG_OK);
  CHECK(r.tiles == 3);
  REQUIRE(gridseg_max_tiles(1.35, 1.0, 2.4, &r) == GRIDSEG_OK);
  CHECK(r.tiles == 5);
  REQUIRE(gridseg_max_tiles(1.35, 1.0, 4.7, &r) == GRIDSEG_OK);
  CHECK(r.tiles == 8);
  CHECK(r.i + r.j - 1 == 8);

  long long witness_tiles = -1;
  REQUIRE(gridseg_count_visited_tiles(1.35, 1.0, &r.witness, &witness_tiles) ==
          GRIDSEG_OK);
  CHECK(witness_tiles == 8);
  const double dx = r.witness.x2 - r.witness.x1;
  const double dy = r.witness.y2 - r.witness.y1;
  CHECK(std::hypot(dx, dy) == doctest::Approx(4.7).epsilon(1e-12));

  CHECK(gridseg_max_tiles(1.0, 1.0, 0.0, &r) == GRIDSEG_ERR_DOMAIN);
  CHECK(gridseg_max_tiles(0.0, 1.0, 1.0, &r) == GRIDSEG_ERR_DOMAIN);

  long long count = -1;
  REQUIRE(gridseg_max_tiles_count(1.35, 1.0, 4.7, &count) == GRIDSEG_OK);
  CHECK(count == 8);
  CHECK(gridseg_max_tiles_count(1.0, 1.0, -1.0, &count) == GRIDSEG_ERR_DOMAIN);
  CHECK(gridseg_max_tiles_count(1.0, 1.0, 1.0, nullptr) == GRIDSEG_ERR_NULL);

  long long pi = 0, pj = 0;
  REQUIRE(gridseg_max_tiles_pair(1.35, 1.0, 4.7, &pi, &pj) == GRIDSEG_OK);
  CHECK(pi == r.i);
  CHECK(pj == r.j);
  CHECK(gridseg_max_tiles_pair(1.0, 1.0, 1.0, &pi, nullptr) ==
        GRIDSEG_ERR_NULL);

  // Just above the 159-tile bound on a large grid no placement realizes the
  // dims under the tolerances: the witness is infeasible, the count is not.
  gridseg_inverse_result inv;
  REQUIRE(gridseg_min_length(5.0, 1.5, 159, &inv) == GRIDSEG_OK);
  const double tight = inv.inf_length + 1e-9;
  CHECK(gridseg_max_tiles(5.0, 1.5, tight, &r) == GRIDSEG_ERR_INFEASIBLE);
  REQUIRE(gridseg_max_tiles_count(5.0, 1.5, tight, &count) == GRIDSEG_OK);
  CHECK(count == 159);
}

TEST_CASE("inverse surface") {
  gridseg_inverse_result r;
  REQUIRE(gridseg_min_length(1.0, 1.0, 8, &r) == GRIDSEG_OK);
  CHECK(r.inf_length == doctest::Approx(std::sqrt(13.0)).epsilon(1e-15));
  CHECK(r.i == 5);
  CHECK(r.j == 4);
  CHECK(r.rounding_residual == doctest::Approx(0.5).epsilon(1e-12));

  REQUIRE(gridseg_min_length(1.0, 1.0, 2, &r) == GRIDSEG_OK);
  CHECK(r.inf_length == 0.0);
  CHECK(gridseg_min_length(1.0, 1.0, 0, &r) == GRIDSEG_ERR_DOMAIN);

  long long i = 0, j = 0;
  REQUIRE(gridseg_optimal_pair(1.0, 1.0, 8, &i, &j) == GRIDSEG_OK);
  CHECK(i == 5);
  CHECK(j == 4);
  CHECK(gridseg_optimal_pair(1.0, 1.0, 2, &i, &j) == GRIDSEG_ERR_DOMAIN);

  double slope = 0.0, up = 0.0, lo = 0.0;
  REQUIRE(gridseg_optimal_pair_lines(2.0, 1.0, &slope, &up, &lo) == GRIDSEG_OK);
  CHECK(slope == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("unit-square surface and sequences") {
  gridseg_solve_result r;
  REQUIRE(gridseg_max_tiles_unit_square(kSqrt2, &r) == GRIDSEG_OK);
  CHECK(r.tiles == 4);
  long long wt = -1;
  REQUIRE(gridseg_count_visited_tiles(1.0, 1.0, &r.witness, &wt) == GRIDSEG_OK);
  CHECK(wt == 4);

  double len = -1.0;
  REQUIRE(gridseg_min_length_unit_square(8, &len) == GRIDSEG_OK);
  CHECK(len == doctest::Approx(std::sqrt(13.0)).epsilon(1e-15));

  double lo = 0.0, hi = 0.0;
  REQUIRE(gridseg_length_interval(4, &lo, &hi) == GRIDSEG_OK);
  CHECK(lo == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hi == doctest::Approx(kSqrt2).epsilon(1e-14));

  const unsigned long long funti_prefix[] = {3, 5, 7, 8, 9};
  for (unsigned long long n = 1; n <= 5; ++n) {
    unsigned long long out = 0;
    REQUIRE(gridseg_funti(n, &out) == GRIDSEG_OK);
    CHECK(out == funti_prefix[n - 1]);
  }
  const unsigned long long funli_prefix[] = {1, 1, 1, 2, 2, 3, 3, 4, 5};
  for (unsigned long long t = 1; t <= 9; ++t) {
    unsigned long long out = 0;
    REQUIRE(gridseg_funli(t, &out) == GRIDSEG_OK);
    CHECK(out == funli_prefix[t - 1]);
  }
  unsigned long long out = 0;
  CHECK(gridseg_funti(0, &out) == GRIDSEG_ERR_DOMAIN);

  // Integer lengths: sequence values equal the direct solver.
  for (unsigned long long n = 1; n <= 50; ++n) {
    unsigned long long tv = 0;
    REQUIRE(gridseg_funti(n, &tv) == GRIDSEG_OK);
    gridseg_solve_result sr;
    REQUIRE(gridseg_max_tiles_unit_square(static_cast<double>(n), &sr) ==
            GRIDSEG_OK);
    CHECK(sr.tiles == static_cast<long long>(tv));
  }
}

TEST_CASE("witness placement status codes") {
  gridseg_segment w;
  REQUIRE(gridseg_place_witness(1.0, 1.0, 3, 2, std::sqrt(13.0), &w) ==
          GRIDSEG_OK);
  long long tiles = -1;
  REQUIRE(gridseg_count_visited_tiles(1.0, 1.0, &w, &tiles) == GRIDSEG_OK);
  CHECK(tiles == 4);

  CHECK(gridseg_place_witness(1.0, 1.0, 5, 4, std::sqrt(13.0), &w) ==
        GRIDSEG_ERR_INFEASIBLE);
  CHECK(gridseg_place_witness(1.0, 1.0, 2, 2, 3.0, &w) ==
        GRIDSEG_ERR_INFEASIBLE);
  CHECK(gridseg_place_witness(1.0, 1.0, 1, 2, 1.0, &w) == GRIDSEG_ERR_DOMAIN);
}

TEST_CASE("probability surface") {
  double out = 0.0;
  REQUIRE(gridseg_avg_tiles(1.0, 1.0, 1.0, &out) == GRIDSEG_OK);
  CHECK(out == doctest::Approx(4.0 / kPi + 1.0).epsilon(1e-15));
  double len = 0.0;
  REQUIRE(gridseg_avg_tiles_inverse(1.0, 1.0, out, &len) == GRIDSEG_OK);
  CHECK(len == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(gridseg_avg_tiles_inverse(1.0, 1.0, 1.0, &len) == GRIDSEG_ERR_DOMAIN);

  REQUIRE(gridseg_helper_f(1.0, &out) == GRIDSEG_OK);
  CHECK(out == 1.0);
  CHECK(gridseg_helper_f(1.5, &out) == GRIDSEG_ERR_DOMAIN);

  REQUIRE(gridseg_helper_g(1.0, 0.0, 0.0, &out) == GRIDSEG_OK);
  CHECK(out == doctest::Approx(1.0 / kPi).epsilon(1e-13));
  CHECK(gridseg_helper_g(1.0, 2.5, 0.0, &out) == GRIDSEG_ERR_DOMAIN);

  REQUIRE(gridseg_tail_prob_i(1.0, 1.0, 2.5, 1, &out) == GRIDSEG_OK);
  CHECK(out == 1.0);
  REQUIRE(gridseg_tail_prob_j(1.35, 2.0, 3.7, 3, &out) == GRIDSEG_OK);
  double swapped = 0.0;
  REQUIRE(gridseg_tail_prob_i(2.0, 1.35, 3.7, 3, &swapped) == GRIDSEG_OK);
  CHECK(out == swapped);

  REQUIRE(gridseg_prob_max(1.0, &out) == GRIDSEG_OK);
  CHECK(out == doctest::Approx(1.0 / kPi).epsilon(1e-13));
  CHECK(gridseg_prob_max(0.0, &out) == GRIDSEG_ERR_DOMAIN);

  REQUIRE(gridseg_breakpoint(3, &out) == GRIDSEG_OK);
  CHECK(out == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(gridseg_breakpoint(4, &out) == GRIDSEG_OK);
  CHECK(out == doctest::Approx(kSqrt2).epsilon(1e-14));

  REQUIRE(gridseg_asymptotic_ratio(1.0, &out) == GRIDSEG_OK);
  CHECK(out == doctest::Approx(2.0 * kSqrt2 / kPi).epsilon(1e-15));

  double odd = 0.0, even = 0.0, limsup = 0.0;
  REQUIRE(gridseg_peak_limits(&odd, &even, &limsup) == GRIDSEG_OK);
  CHECK(odd == doctest::Approx(2.0 / kPi).epsilon(1e-15));
  CHECK(even == doctest::Approx(8.0 / (3.0 * kPi)).epsilon(1e-15));
  CHECK(limsup == doctest::Approx(4.0 * kSqrt2 / (3.0 * kPi)).epsilon(1e-15));

  REQUIRE(gridseg_prob_max_peak_scaled(3, &out) == GRIDSEG_OK);
  CHECK(out == doctest::Approx(3.0 / kPi).epsilon(1e-12));

  double slope = 0.0;
  REQUIRE(gridseg_asymptotic_slope(1.0, 1.0, &slope) == GRIDSEG_OK);
  CHECK(slope == doctest::Approx(kSqrt2).epsilon(1e-15));
}

TEST_CASE("null pointers are rejected") {
  gridseg_rect r;
  gridseg_segment s = seg(0, 0, 1, 1);
  long long ll = 0;
  double d = 0.0;
  unsigned long long ull = 0;
  CHECK(gridseg_bounding_rect(1.0, 1.0, nullptr, &r) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_bounding_rect(1.0, 1.0, &s, nullptr) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_count_visited_tiles(1.0, 1.0, nullptr, &ll) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_crossing_count(1.0, 1.0, &s, nullptr, &ll) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_max_tiles(1.0, 1.0, 1.0, nullptr) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_min_length(1.0, 1.0, 5, nullptr) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_funti(1, nullptr) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_helper_f(0.5, nullptr) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_avg_tiles(1.0, 1.0, 1.0, nullptr) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_place_witness(1.0, 1.0, 2, 2, 1.0, nullptr) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_sampler_create(nullptr, nullptr) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_sample_segment(nullptr, 0, &s) == GRIDSEG_ERR_NULL);
  CHECK(gridseg_brute_force_max_tiles(1.0, 1.0, 1.0, 0, nullptr, &ll, &ll) ==
        GRIDSEG_ERR_NULL);
  (void)d;
  (void)ull;
}

TEST_CASE("sampler lifecycle and determinism") {
  gridseg_sampler_config cfg;
  cfg.a = 1.0;
  cfg.b = 1.0;
  cfg.len = 1.0;
  cfg.samples = 50000;
  cfg.seed = 42;
  cfg.chunks = 8;

  gridseg_sampler* s1 = nullptr;
  gridseg_sampler* s2 = nullptr;
  REQUIRE(gridseg_sampler_create(&cfg, &s1) == GRIDSEG_OK);
  REQUIRE(gridseg_sampler_create(&cfg, &s2) == GRIDSEG_OK);
  REQUIRE(s1 != nullptr);
  REQUIRE(s2 != nullptr);

  gridseg_segment a, b;
  REQUIRE(gridseg_sample_segment(s1, 123, &a) == GRIDSEG_OK);
  REQUIRE(gridseg_sample_segment(s2, 123, &b) == GRIDSEG_OK);
  CHECK(a.x1 == b.x1);
  CHECK(a.y1 == b.y1);
  CHECK(a.x2 == b.x2);
  CHECK(a.y2 == b.y2);
  CHECK(gridseg_sample_segment(s1, cfg.samples, &a) == GRIDSEG_ERR_DOMAIN);

  gridseg_estimate e1, e2;
  REQUIRE(gridseg_estimate_avg_tiles(s1, &e1) == GRIDSEG_OK);
  REQUIRE(gridseg_estimate_avg_tiles(s2, &e2) == GRIDSEG_OK);
  CHECK(e1.mean == e2.mean);
  CHECK(e1.std_error == e2.std_error);
  CHECK(e1.n == cfg.samples);

  double closed = 0.0;
  REQUIRE(gridseg_avg_tiles(1.0, 1.0, 1.0, &closed) == GRIDSEG_OK);
  CHECK(std::abs(e1.mean - closed) <= 4.0 * e1.std_error);

  const long long ns[] = {1, 2, 3};
  gridseg_estimate tails[3];
  REQUIRE(gridseg_estimate_tail_prob(s1, 0, ns, 3, tails) == GRIDSEG_OK);
  CHECK(tails[0].mean == 1.0);
  CHECK(tails[0].std_error == 0.0);
  CHECK(tails[1].mean >= tails[2].mean);
  CHECK(gridseg_estimate_tail_prob(s1, 3, ns, 3, tails) == GRIDSEG_ERR_DOMAIN);

  gridseg_estimate pm;
  REQUIRE(gridseg_estimate_prob_max(s1, &pm) == GRIDSEG_OK);
  double closed_pm = 0.0;
  REQUIRE(gridseg_prob_max(1.0, &closed_pm) == GRIDSEG_OK);
  CHECK(std::abs(pm.mean - closed_pm) <= 4.0 * pm.std_error);

  gridseg_sampler_destroy(s1);
  gridseg_sampler_destroy(s2);
  gridseg_sampler_destroy(nullptr);

  cfg.samples = 0;
  gridseg_sampler* bad = nullptr;
  CHECK(gridseg_sampler_create(&cfg, &bad) == GRIDSEG_ERR_DOMAIN);
  CHECK(bad == nullptr);

  cfg.samples = 100;
  cfg.a = 2.0;
  gridseg_sampler* nonunit = nullptr;
  REQUIRE(gridseg_sampler_create(&cfg, &nonunit) == GRIDSEG_OK);
  CHECK(gridseg_estimate_prob_max(nonunit, &pm) == GRIDSEG_ERR_DOMAIN);
  gridseg_sampler_destroy(nonunit);
}

TEST_CASE("brute force agrees with the solver through the C surface") {
  for (double len : {0.7, 1.9, 3.7, 5.2}) {
    gridseg_solve_result r;
    REQUIRE(gridseg_max_tiles(1.35, 1.0, len, &r) == GRIDSEG_OK);
    long long tiles = 0, i = 0, j = 0;
    REQUIRE(gridseg_brute_force_max_tiles(1.35, 1.0, len, 0, &tiles, &i, &j) ==
            GRIDSEG_OK);
    CHECK(tiles == r.tiles);
  }
  long long tiles = 0, i = 0, j = 0;
  CHECK(gridseg_brute_force_max_tiles(1.0, 1.0, 10.0, 5, &tiles, &i, &j) ==
        GRIDSEG_ERR_DOMAIN);
}
