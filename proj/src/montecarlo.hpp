// Monte Carlo and exhaustive-search oracles. Sampling is counter-based: the
// index-th segment is a pure function of (config, index), so estimates are
// bit-identical for a given config regardless of thread count.

#pragma once

#include <vector>

#include "geometry.hpp"

namespace gridseg {

struct SamplerConfig {
  GridSpec grid;
  double len;
  unsigned long long samples;  // >= 1
  unsigned long long seed;
  unsigned int chunks;  // >= 1; substreams merged in index order
};

struct Estimate {
  double mean;
  double std_error;
  unsigned long long n;
  double ci_low;
  double ci_high;  // mean -/+ 1.96 * std_error
};

// Throws std::domain_error on an invalid config.
void validate_sampler_config(const SamplerConfig& cfg);

// First endpoint uniform in [0,a) x [0,b), direction uniform in [0, 2pi)
// counterclockwise from the positive x axis; placements that land on a grid
// line or hit a grid point are redrawn from the same per-index stream.
Segment sample_segment(const SamplerConfig& cfg, unsigned long long index);

Estimate estimate_avg_tiles(const SamplerConfig& cfg);

// Pr[dim >= n] for every n in n_values over one shared sample pass.
// axis 0: width (i); axis 1: height (j).
std::vector<Estimate> estimate_tail_prob(const SamplerConfig& cfg, int axis,
                                         const std::vector<long long>& n_values);

// Pr[visited tiles == maximum possible]; requires a unit square grid.
Estimate estimate_prob_max(const SamplerConfig& cfg);

// Exhaustive search over 2 <= i, j <= bound for the dims maximizing
// i + j - 1 subject to feasibility. bound <= 0 selects the smallest valid
// bound; an explicit bound below that is a domain error.
PairIJ brute_force_max_tiles(const GridSpec& g, double len, long long bound);

}  // namespace gridseg
