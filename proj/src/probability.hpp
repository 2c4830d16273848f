// Closed-form probabilities for a segment dropped uniformly at random:
// expected visited tiles, tail probabilities of the bounding dims, and the
// probability of maximal coverage on the unit square grid.

#pragma once

#include "geometry.hpp"

namespace gridseg {

// Expected visited tiles: 2*len/pi * (1/a + 1/b) + 1. len > 0.
double avg_tiles(const GridSpec& g, double len);

// Length whose expected visited tiles equals avg. avg > 1 strictly.
double avg_tiles_inverse(const GridSpec& g, double avg);

// Antiderivative of arccos on [0, 1]: z*arccos(z) - sqrt(1 - z^2) + 1.
// Arguments within 1e-12 outside [0, 1] are clamped; beyond that, error.
double helper_f(double z);

// Quarter-plane overlap term (1/(2pi)) * [(arccos(v/2x) - arcsin(u/2x))uv
// + 2x^2 + u^2/2 + v^2/2 - u*sqrt(4x^2 - v^2) - v*sqrt(4x^2 - u^2)].
// Requires x > 0 and 0 <= u, v <= 2x (1e-12 relative clamp at the edges).
double helper_g(double x, double u, double v);

// Pr[bounding width >= n] (tail_prob_i) and Pr[bounding height >= n]
// (tail_prob_j) for a random segment of length len. n >= 1.
double tail_prob_i(const GridSpec& g, double len, long long n);
double tail_prob_j(const GridSpec& g, double len, long long n);

// Probability that a random segment of length len on the unit square grid
// visits the maximum possible number of tiles.
double prob_max(double len);

// Largest length whose unit-square maximum is still `tiles`; the maximum
// jumps just above it. tiles >= 3.
double breakpoint_len(long long tiles);

// 2(1+r) / (pi * sqrt(1 + r^2)); symmetric under r -> 1/r, peak at r = 1.
double asymptotic_ratio(double r);

struct PeakLimits {
  double odd_limit;     // limit of tiles * prob_max at odd-count breakpoints
  double even_limit;    // same at even-count breakpoints
  double limsup_scaled; // limsup of len * prob_max
};

PeakLimits peak_limits();

// tiles * prob_max(breakpoint_len(tiles)). tiles >= 3.
double prob_max_peak_scaled(long long tiles);

}  // namespace gridseg
