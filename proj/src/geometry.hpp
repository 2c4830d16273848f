// Geometry primitives: segments, discrete bounding rectangles, grid point
// incidence and exact tile-visit counting on an axis-aligned a-by-b grid.

#pragma once

#include <stdexcept>
#include <string>

namespace gridseg {

// Relative tolerance used for snapping near-integer ratios before floor/ceil
// and for boundary comparisons. Values within this tolerance of a boundary
// are treated as exactly on it.
inline constexpr double kSnapRelTol = 1e-12;

struct GridSpec {
  double a;
  double b;
};

struct Point {
  double x;
  double y;
};

struct Segment {
  Point p1;
  Point p2;
};

struct PairIJ {
  long long i;
  long long j;
};

struct BoundingRect {
  Point lower_left;
  PairIJ dims;
};

struct Crossings {
  long long h;
  long long v;
};

// Thrown when a requested construction cannot exist (e.g. a witness for an
// unachievable pair/length combination).
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

double segment_length(const Segment& s);

// x snapped to the nearest integer when within kSnapRelTol relative tolerance.
double snap_integer(double x);

long long floor_snapped(double x);
long long ceil_snapped(double x);

// |x - y| <= kSnapRelTol * max(1, |x|, |y|).
bool nearly_equal(double x, double y);

// lhs <= rhs within kSnapRelTol relative to the larger magnitude; no absolute
// floor, so it stays meaningful for very small quantities (squared lengths).
bool boundary_leq(double lhs, double rhs);

// Throws std::domain_error unless a, b are positive and finite.
void require_grid(const GridSpec& g);

BoundingRect discrete_bounding_rect(const Segment& s, const GridSpec& g);

// Number of grid points strictly inside the bounding rectangle that lie on
// the closed segment.
long long interior_grid_point_hits(const Segment& s, const GridSpec& g);

bool passes_through_interior_grid_point(const Segment& s, const GridSpec& g);

long long count_visited_tiles(const Segment& s, const GridSpec& g);

Crossings crossing_count(const Segment& s, const GridSpec& g);

// True iff a segment of length at most len can have bounding rectangle dims
// (i, j): len^2 > (i-2)^2 a^2 + (j-2)^2 b^2 strictly, boundary excluded.
// Requires i, j >= 2.
bool check_pair_feasibility(double len, PairIJ pair, const GridSpec& g);

}  // namespace gridseg
