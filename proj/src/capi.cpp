#include "gridseg/gridseg.h"

#include <new>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"
#include "montecarlo.hpp"
#include "probability.hpp"
#include "solvers.hpp"

struct gridseg_sampler {
  gridseg::SamplerConfig cfg;
};

namespace {

template <class F>
int wrap(F&& f) noexcept {
  try {
    f();
    return GRIDSEG_OK;
  } catch (const gridseg::infeasible_error&) {
    return GRIDSEG_ERR_INFEASIBLE;
  } catch (const std::domain_error&) {
    return GRIDSEG_ERR_DOMAIN;
  } catch (const std::invalid_argument&) {
    return GRIDSEG_ERR_DOMAIN;
  } catch (...) {
    return GRIDSEG_ERR_INTERNAL;
  }
}

gridseg::Segment to_seg(const gridseg_segment& s) {
  return {{s.x1, s.y1}, {s.x2, s.y2}};
}

gridseg_segment from_seg(const gridseg::Segment& s) {
  return {s.p1.x, s.p1.y, s.p2.x, s.p2.y};
}

gridseg_estimate from_est(const gridseg::Estimate& e) {
  return {e.mean, e.std_error, e.n, e.ci_low, e.ci_high};
}

}  // namespace

extern "C" {

const char* gridseg_strerror(int code) {
  switch (code) {
    case GRIDSEG_OK:
      return "ok";
    case GRIDSEG_ERR_DOMAIN:
      return "argument outside the documented domain";
    case GRIDSEG_ERR_INFEASIBLE:
      return "no segment satisfies the requested constraints";
    case GRIDSEG_ERR_NULL:
      return "required pointer argument is NULL";
    case GRIDSEG_ERR_INTERNAL:
      return "internal construction or verification failure";
    default:
      return "unknown status code";
  }
}

const char* gridseg_version(void) { return "1.0.0"; }

int gridseg_bounding_rect(double a, double b, const gridseg_segment* seg,
                          gridseg_rect* out) {
  if (!seg || !out) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::BoundingRect r =
        gridseg::discrete_bounding_rect(to_seg(*seg), {a, b});
    *out = {r.lower_left.x, r.lower_left.y, r.dims.i, r.dims.j};
  });
}

int gridseg_hits_interior_grid_point(double a, double b,
                                     const gridseg_segment* seg, int* out) {
  if (!seg || !out) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    *out = gridseg::passes_through_interior_grid_point(to_seg(*seg), {a, b})
               ? 1
               : 0;
  });
}

int gridseg_count_visited_tiles(double a, double b, const gridseg_segment* seg,
                                long long* out) {
  if (!seg || !out) return GRIDSEG_ERR_NULL;
  return wrap(
      [&] { *out = gridseg::count_visited_tiles(to_seg(*seg), {a, b}); });
}

int gridseg_crossing_count(double a, double b, const gridseg_segment* seg,
                           long long* h, long long* v) {
  if (!seg || !h || !v) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::Crossings c = gridseg::crossing_count(to_seg(*seg), {a, b});
    *h = c.h;
    *v = c.v;
  });
}

int gridseg_pair_feasible(double a, double b, double len, long long i,
                          long long j, int* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    *out = gridseg::check_pair_feasibility(len, {i, j}, {a, b}) ? 1 : 0;
  });
}

int gridseg_optimal_pair(double a, double b, long long tiles, long long* i,
                         long long* j) {
  if (!i || !j) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::PairIJ p = gridseg::optimal_pair(tiles, {a, b});
    *i = p.i;
    *j = p.j;
  });
}

int gridseg_optimal_pair_lines(double a, double b, double* slope,
                               double* upper_offset, double* lower_offset) {
  if (!slope || !upper_offset || !lower_offset) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::PairLines lines = gridseg::optimal_pair_lines({a, b});
    *slope = lines.slope;
    *upper_offset = lines.upper_offset;
    *lower_offset = lines.lower_offset;
  });
}

int gridseg_max_tiles(double a, double b, double len,
                      gridseg_solve_result* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::SolveResult r = gridseg::max_tiles({a, b}, len);
    *out = {r.tiles, r.pair.i, r.pair.j, from_seg(r.witness)};
  });
}

int gridseg_max_tiles_count(double a, double b, double len, long long* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::max_tiles_count({a, b}, len); });
}

int gridseg_max_tiles_pair(double a, double b, double len, long long* i,
                           long long* j) {
  if (!i || !j) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::PairIJ p = gridseg::max_tiles_pair({a, b}, len);
    *i = p.i;
    *j = p.j;
  });
}

int gridseg_min_length(double a, double b, long long tiles,
                       gridseg_inverse_result* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::InverseResult r = gridseg::min_length({a, b}, tiles);
    *out = {r.inf_length, r.pair.i, r.pair.j, r.rounding_residual};
  });
}

int gridseg_max_tiles_unit_square(double len, gridseg_solve_result* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::SolveResult r = gridseg::max_tiles_unit_square(len);
    *out = {r.tiles, r.pair.i, r.pair.j, from_seg(r.witness)};
  });
}

int gridseg_min_length_unit_square(long long tiles, double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::min_length_unit_square(tiles); });
}

int gridseg_funti(unsigned long long n, unsigned long long* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::funti(n); });
}

int gridseg_funli(unsigned long long tiles, unsigned long long* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::funli(tiles); });
}

int gridseg_place_witness(double a, double b, long long i, long long j,
                          double len, gridseg_segment* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap(
      [&] { *out = from_seg(gridseg::place_witness({i, j}, {a, b}, len)); });
}

int gridseg_asymptotic_slope(double a, double b, double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::asymptotic_slope({a, b}); });
}

int gridseg_length_interval(long long tiles, double* low, double* high) {
  if (!low || !high) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::LengthInterval iv = gridseg::length_interval_for_tiles(tiles);
    *low = iv.low;
    *high = iv.high;
  });
}

int gridseg_avg_tiles(double a, double b, double len, double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::avg_tiles({a, b}, len); });
}

int gridseg_avg_tiles_inverse(double a, double b, double avg, double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::avg_tiles_inverse({a, b}, avg); });
}

int gridseg_helper_f(double z, double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::helper_f(z); });
}

int gridseg_helper_g(double x, double u, double v, double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::helper_g(x, u, v); });
}

int gridseg_tail_prob_i(double a, double b, double len, long long n,
                        double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::tail_prob_i({a, b}, len, n); });
}

int gridseg_tail_prob_j(double a, double b, double len, long long n,
                        double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::tail_prob_j({a, b}, len, n); });
}

int gridseg_prob_max(double len, double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::prob_max(len); });
}

int gridseg_breakpoint(long long tiles, double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::breakpoint_len(tiles); });
}

int gridseg_asymptotic_ratio(double r, double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::asymptotic_ratio(r); });
}

int gridseg_peak_limits(double* odd_limit, double* even_limit,
                        double* limsup_scaled) {
  if (!odd_limit || !even_limit || !limsup_scaled) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::PeakLimits lim = gridseg::peak_limits();
    *odd_limit = lim.odd_limit;
    *even_limit = lim.even_limit;
    *limsup_scaled = lim.limsup_scaled;
  });
}

int gridseg_prob_max_peak_scaled(long long tiles, double* out) {
  if (!out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = gridseg::prob_max_peak_scaled(tiles); });
}

int gridseg_sampler_create(const gridseg_sampler_config* cfg,
                           gridseg_sampler** out) {
  if (!cfg || !out) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::SamplerConfig c{
        {cfg->a, cfg->b}, cfg->len, cfg->samples, cfg->seed, cfg->chunks};
    gridseg::validate_sampler_config(c);
    *out = new gridseg_sampler{c};
  });
}

void gridseg_sampler_destroy(gridseg_sampler* s) { delete s; }

int gridseg_sample_segment(const gridseg_sampler* s, unsigned long long index,
                           gridseg_segment* out) {
  if (!s || !out) return GRIDSEG_ERR_NULL;
  return wrap(
      [&] { *out = from_seg(gridseg::sample_segment(s->cfg, index)); });
}

int gridseg_estimate_avg_tiles(const gridseg_sampler* s,
                               gridseg_estimate* out) {
  if (!s || !out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = from_est(gridseg::estimate_avg_tiles(s->cfg)); });
}

int gridseg_estimate_tail_prob(const gridseg_sampler* s, int axis,
                               const long long* n_values, size_t count,
                               gridseg_estimate* outs) {
  if (!s || !n_values || !outs) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const std::vector<long long> ns(n_values, n_values + count);
    const std::vector<gridseg::Estimate> est =
        gridseg::estimate_tail_prob(s->cfg, axis, ns);
    for (size_t k = 0; k < est.size(); ++k) outs[k] = from_est(est[k]);
  });
}

int gridseg_estimate_prob_max(const gridseg_sampler* s, gridseg_estimate* out) {
  if (!s || !out) return GRIDSEG_ERR_NULL;
  return wrap([&] { *out = from_est(gridseg::estimate_prob_max(s->cfg)); });
}

int gridseg_brute_force_max_tiles(double a, double b, double len,
                                  long long bound, long long* tiles,
                                  long long* i, long long* j) {
  if (!tiles || !i || !j) return GRIDSEG_ERR_NULL;
  return wrap([&] {
    const gridseg::PairIJ p = gridseg::brute_force_max_tiles({a, b}, len, bound);
    *tiles = p.i + p.j - 1;
    *i = p.i;
    *j = p.j;
  });
}

} /* extern "C" */
