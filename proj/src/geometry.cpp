#include "geometry.hpp"

#include <algorithm>
#include <cmath>

namespace gridseg {

namespace {

// Grid point (qx, qy) lies on the closed segment iff its distance to the
// supporting line is <= kSnapRelTol * len and its projection parameter is in
// [0, 1]. |cross| / len is that distance, so compare against tol * len^2.
bool point_on_segment(const Segment& s, double qx, double qy) {
  const double dx = s.p2.x - s.p1.x;
  const double dy = s.p2.y - s.p1.y;
  const double len2 = dx * dx + dy * dy;
  const double rx = qx - s.p1.x;
  const double ry = qy - s.p1.y;
  if (len2 == 0.0) return rx == 0.0 && ry == 0.0;
  const double t = (rx * dx + ry * dy) / len2;
  if (t < 0.0 || t > 1.0) return false;
  const double cross = rx * dy - ry * dx;
  return std::abs(cross) <= kSnapRelTol * len2;
}

void require_finite_segment(const Segment& s) {
  if (!std::isfinite(s.p1.x) || !std::isfinite(s.p1.y) ||
      !std::isfinite(s.p2.x) || !std::isfinite(s.p2.y)) {
    throw std::domain_error("segment endpoints must be finite");
  }
}

// Integers strictly between lo and hi after snapping; exact boundary values
// are excluded, so an endpoint touching a grid line is not a crossing.
long long strict_interior_multiples(double lo, double hi, double spacing) {
  const double l = snap_integer(lo / spacing);
  const double h = snap_integer(hi / spacing);
  const double lf = std::floor(l);
  const double hf = std::floor(h);
  const long long first = (l == lf) ? static_cast<long long>(lf) + 1
                                    : static_cast<long long>(std::ceil(l));
  const long long last = (h == hf) ? static_cast<long long>(hf) - 1
                                   : static_cast<long long>(hf);
  return std::max<long long>(0, last - first + 1);
}

}  // namespace

double segment_length(const Segment& s) {
  return std::hypot(s.p2.x - s.p1.x, s.p2.y - s.p1.y);
}

double snap_integer(double x) {
  const double r = std::round(x);
  const double scale = std::max(1.0, std::abs(x));
  if (std::abs(x - r) <= kSnapRelTol * scale) return r;
  return x;
}

long long floor_snapped(double x) {
  return static_cast<long long>(std::floor(snap_integer(x)));
}

long long ceil_snapped(double x) {
  return static_cast<long long>(std::ceil(snap_integer(x)));
}

bool nearly_equal(double x, double y) {
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= kSnapRelTol * scale;
}

bool boundary_leq(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return lhs - rhs <= kSnapRelTol * scale;
}

void require_grid(const GridSpec& g) {
  if (!(g.a > 0.0) || !(g.b > 0.0) || !std::isfinite(g.a) || !std::isfinite(g.b)) {
    throw std::domain_error("grid spacings must be positive and finite");
  }
}

BoundingRect discrete_bounding_rect(const Segment& s, const GridSpec& g) {
  require_grid(g);
  require_finite_segment(s);
  const double xmin = std::min(s.p1.x, s.p2.x);
  const double xmax = std::max(s.p1.x, s.p2.x);
  const double ymin = std::min(s.p1.y, s.p2.y);
  const double ymax = std::max(s.p1.y, s.p2.y);
  const long long kl = floor_snapped(xmin / g.a);
  const long long kr = ceil_snapped(xmax / g.a);
  const long long mb = floor_snapped(ymin / g.b);
  const long long mt = ceil_snapped(ymax / g.b);
  return {{static_cast<double>(kl) * g.a, static_cast<double>(mb) * g.b},
          {kr - kl, mt - mb}};
}

long long interior_grid_point_hits(const Segment& s, const GridSpec& g) {
  const BoundingRect r = discrete_bounding_rect(s, g);
  const long long i = r.dims.i;
  const long long j = r.dims.j;
  // A grid point strictly inside the rectangle needs i >= 2 and j >= 2.
  if (i < 2 || j < 2) return 0;
  const double dx = s.p2.x - s.p1.x;
  const double dy = s.p2.y - s.p1.y;
  long long hits = 0;
  // Walk the major axis; per line crossed, only the nearest lattice ordinate
  // can be within the incidence tolerance.
  if (std::abs(dx) >= std::abs(dy)) {
    for (long long k = 1; k < i; ++k) {
      const double x = r.lower_left.x + static_cast<double>(k) * g.a;
      const double t = (x - s.p1.x) / dx;
      const double y = s.p1.y + t * dy;
      const long long m = std::llround((y - r.lower_left.y) / g.b);
      if (m >= 1 && m < j &&
          point_on_segment(s, x, r.lower_left.y + static_cast<double>(m) * g.b)) {
        ++hits;
      }
    }
  } else {
    for (long long m = 1; m < j; ++m) {
      const double y = r.lower_left.y + static_cast<double>(m) * g.b;
      const double t = (y - s.p1.y) / dy;
      const double x = s.p1.x + t * dx;
      const long long k = std::llround((x - r.lower_left.x) / g.a);
      if (k >= 1 && k < i &&
          point_on_segment(s, r.lower_left.x + static_cast<double>(k) * g.a, y)) {
        ++hits;
      }
    }
  }
  return hits;
}

bool passes_through_interior_grid_point(const Segment& s, const GridSpec& g) {
  return interior_grid_point_hits(s, g) > 0;
}

long long count_visited_tiles(const Segment& s, const GridSpec& g) {
  const BoundingRect r = discrete_bounding_rect(s, g);
  if (r.dims.i == 0 || r.dims.j == 0) return 0;
  return r.dims.i + r.dims.j - 1 - interior_grid_point_hits(s, g);
}

Crossings crossing_count(const Segment& s, const GridSpec& g) {
  require_grid(g);
  require_finite_segment(s);
  const double xmin = std::min(s.p1.x, s.p2.x);
  const double xmax = std::max(s.p1.x, s.p2.x);
  const double ymin = std::min(s.p1.y, s.p2.y);
  const double ymax = std::max(s.p1.y, s.p2.y);
  return {strict_interior_multiples(ymin, ymax, g.b),
          strict_interior_multiples(xmin, xmax, g.a)};
}

bool check_pair_feasibility(double len, PairIJ pair, const GridSpec& g) {
  require_grid(g);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw std::domain_error("length must be positive and finite");
  }
  if (pair.i < 2 || pair.j < 2) {
    throw std::domain_error("feasibility is defined for dims i, j >= 2");
  }
  const double di = static_cast<double>(pair.i - 2) * g.a;
  const double dj = static_cast<double>(pair.j - 2) * g.b;
  // Any positive length clears a zero bound; shortcut before squaring so
  // subnormal lengths do not underflow to equality.
  if (di == 0.0 && dj == 0.0) return true;
  // Strictly above the lower bound; values within snap tolerance of the
  // boundary count as on it and are excluded.
  return !boundary_leq(len * len, di * di + dj * dj);
}

}  // namespace gridseg
