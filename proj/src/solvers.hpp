// Closed-form solvers: optimal bounding dims, maximum tiles for a length,
// infimum length for a tile count, unit-square specializations, the integer
// sequences, and verified witness placement.

#pragma once

#include "geometry.hpp"

namespace gridseg {

struct SolveResult {
  long long tiles;
  PairIJ pair;
  Segment witness;
};

struct InverseResult {
  double inf_length;
  PairIJ pair;
  double rounding_residual;  // in [0, 1/2]
};

// Lines j = slope * i + offset bounding the optimal pair set: strictly below
// the upper line, on or above the lower line.
struct PairLines {
  double slope;
  double upper_offset;
  double lower_offset;
};

struct LengthInterval {
  double low;
  double high;
};

// Canonical dims (i, j) with i + j - 1 = tiles minimizing the required
// length. tiles >= 3. Ties round i half-up.
PairIJ optimal_pair(long long tiles, const GridSpec& g);

PairLines optimal_pair_lines(const GridSpec& g);

// Dims attaining the maximum tile count for a segment of length len.
PairIJ max_tiles_pair(const GridSpec& g, double len);

long long max_tiles_count(const GridSpec& g, double len);

// Maximum count, optimal dims, and a verified witness placement.
SolveResult max_tiles(const GridSpec& g, double len);

// Infimum length visiting at least `tiles` tiles (0 for tiles <= 3).
// tiles >= 1.
InverseResult min_length(const GridSpec& g, long long tiles);

// Unit-square specializations computed along an independent route.
PairIJ max_tiles_unit_square_pair(double len);
long long max_tiles_unit_square_count(double len);
SolveResult max_tiles_unit_square(double len);
double min_length_unit_square(long long tiles);

// Exact integer sequences on the unit square grid.
// funti(n): maximum tiles for integer length n, n >= 1.
// funli(t): minimum integer length visiting at least t tiles, t >= 1.
unsigned long long funti(unsigned long long n);
unsigned long long funli(unsigned long long tiles);

// Floor of the square root, exact for all 64-bit inputs.
unsigned long long isqrt_u64(unsigned long long x);

// Segment of length len with bounding dims exactly (i, j) and no interior
// grid point on it, verified before returning. Requires i, j >= 2 and
// (i-2)^2 a^2 + (j-2)^2 b^2 < len^2 <= i^2 a^2 + j^2 b^2.
Segment place_witness(PairIJ pair, const GridSpec& g, double len);

// Limit of tiles/length for long segments: sqrt(1/a^2 + 1/b^2).
double asymptotic_slope(const GridSpec& g);

// Half-open interval (low, high] of lengths whose unit-square maximum is
// exactly `tiles`. tiles >= 3.
LengthInterval length_interval_for_tiles(long long tiles);

}  // namespace gridseg
