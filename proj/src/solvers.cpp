#include "solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace gridseg {

namespace {

void require_length(double len) {
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw std::domain_error("length must be positive and finite");
  }
}

double frac(double x) { return x - std::floor(x); }

constexpr double kInvPhi = 0.6180339887498949;
constexpr double kInvPhi2 = 0.3819660112501051;

// Spacings sorted so big >= small; dims returned as (along-big, along-small).
PairIJ max_tiles_pair_sorted(double big, double small, double len) {
  const double len2 = len * len;
  const double w = big * big + small * small;
  const double rad = len2 / w - 0.25;
  const double root = rad > 0.0 ? std::sqrt(rad) : 0.0;
  long long ihat = ceil_snapped(1.5 + (small / big) * root);
  if (ihat < 2) ihat = 2;
  const double span = static_cast<double>(ihat - 2) * big;
  // Nonnegative up to rounding; the dims always admit a real second leg.
  double rem = len2 - span * span;
  if (rem < 0.0) rem = 0.0;
  long long jhat = ceil_snapped(1.0 + std::sqrt(rem) / small);
  if (jhat < 2) jhat = 2;
  return {ihat, jhat};
}

}  // namespace

PairIJ optimal_pair(long long tiles, const GridSpec& g) {
  require_grid(g);
  if (tiles < 3) {
    throw std::domain_error("optimal dims are defined for tiles >= 3");
  }
  const double b2 = g.b * g.b;
  const double w = g.a * g.a + b2;
  // Round half up; i + j - 1 = tiles holds exactly, so j is forced.
  const long long i =
      floor_snapped(static_cast<double>(tiles - 3) * b2 / w + 2.5);
  return {i, tiles + 1 - i};
}

PairLines optimal_pair_lines(const GridSpec& g) {
  require_grid(g);
  const double r = (g.a * g.a) / (g.b * g.b);
  return {r, 2.5 - 1.5 * r, 1.5 - 2.5 * r};
}

PairIJ max_tiles_pair(const GridSpec& g, double len) {
  require_grid(g);
  require_length(len);
  if (g.a >= g.b) return max_tiles_pair_sorted(g.a, g.b, len);
  const PairIJ p = max_tiles_pair_sorted(g.b, g.a, len);
  return {p.j, p.i};
}

long long max_tiles_count(const GridSpec& g, double len) {
  const PairIJ p = max_tiles_pair(g, len);
  return p.i + p.j - 1;
}

SolveResult max_tiles(const GridSpec& g, double len) {
  const PairIJ p = max_tiles_pair(g, len);
  return {p.i + p.j - 1, p, place_witness(p, g, len)};
}

InverseResult min_length(const GridSpec& g, long long tiles) {
  require_grid(g);
  if (tiles < 1) {
    throw std::domain_error("tile count must be at least 1");
  }
  if (tiles <= 2) return {0.0, {2, 2}, 0.0};
  const double b2 = g.b * g.b;
  const double w = g.a * g.a + b2;
  const double i_star = static_cast<double>(tiles - 3) * b2 / w + 2.0;
  const PairIJ p = optimal_pair(tiles, g);
  const double rho =
      std::min(std::abs(static_cast<double>(p.i) - i_star), 0.5);
  const double di = static_cast<double>(p.i - 2) * g.a;
  const double dj = static_cast<double>(p.j - 2) * g.b;
  return {std::sqrt(di * di + dj * dj), p, rho};
}

PairIJ max_tiles_unit_square_pair(double len) {
  require_length(len);
  long long ihat = ceil_snapped(len / std::numbers::sqrt2) + 1;
  if (ihat < 2) ihat = 2;
  const double span = static_cast<double>(ihat - 2);
  double rem = len * len - span * span;
  if (rem < 0.0) rem = 0.0;
  long long jhat = ceil_snapped(std::sqrt(rem)) + 1;
  if (jhat < 2) jhat = 2;
  return {ihat, jhat};
}

long long max_tiles_unit_square_count(double len) {
  const PairIJ p = max_tiles_unit_square_pair(len);
  return p.i + p.j - 1;
}

SolveResult max_tiles_unit_square(double len) {
  const PairIJ p = max_tiles_unit_square_pair(len);
  return {p.i + p.j - 1, p, place_witness(p, {1.0, 1.0}, len)};
}

double min_length_unit_square(long long tiles) {
  if (tiles < 1) {
    throw std::domain_error("tile count must be at least 1");
  }
  if (tiles <= 2) return 0.0;
  const unsigned long long k = static_cast<unsigned long long>(tiles - 3);
  if (k > 4294967295ULL) {
    throw std::domain_error("tile count too large for exact arithmetic");
  }
  const unsigned long long m = (k * k + 1ULL) / 2ULL;  // ceil(k^2 / 2)
  return std::sqrt(static_cast<double>(m));
}

unsigned long long isqrt_u64(unsigned long long x) {
  if (x == 0ULL) return 0ULL;
  unsigned long long r =
      static_cast<unsigned long long>(std::sqrt(static_cast<double>(x)));
  if (r > 0xFFFFFFFFULL) r = 0xFFFFFFFFULL;
  while (r > 0ULL && r * r > x) --r;
  while (r < 0xFFFFFFFFULL && (r + 1ULL) * (r + 1ULL) <= x) ++r;
  return r;
}

unsigned long long funti(unsigned long long n) {
  if (n < 1ULL) {
    throw std::domain_error("length must be at least 1");
  }
  if (n > 3037000499ULL) {
    throw std::domain_error("length too large for exact arithmetic");
  }
  return isqrt_u64(2ULL * n * n - 2ULL) + 3ULL;
}

unsigned long long funli(unsigned long long tiles) {
  if (tiles < 1ULL) {
    throw std::domain_error("tile count must be at least 1");
  }
  if (tiles <= 3ULL) return 1ULL;
  const unsigned long long k = tiles - 3ULL;
  if (k > 4294967295ULL) {
    throw std::domain_error("tile count too large for exact arithmetic");
  }
  // Smallest integer s with s^2 >= k^2/2 + 1, i.e. s^2 >= ceil((k^2 + 2)/2).
  const unsigned long long m = (k * k + 3ULL) / 2ULL;
  unsigned long long r = isqrt_u64(m);
  if (r * r < m) ++r;
  return r;
}

namespace {

// Minimal-slack placement. When len is barely above the pair's lower length
// bound, every valid segment nearly joins the corner grid points (a, b) and
// ((i-1)a, (j-1)b). The snapped cell boundaries and the incidence tolerance
// then leave only a corridor whose transverse width is of the order of the
// squared-length slack, far too thin for the randomized search. This builds
// the corridor placement directly: alpha/beta pull the start just inside the
// first cell, gamma/delta push the end just past the far corner, and the
// perpendicular clearances pA, pB keep every grid point on the joining
// diagonal (there are gcd(i-2, j-2) - 1 of them strictly between the
// corners) outside the incidence tube. Returns false when no margin choice
// verifies; the tolerances then genuinely leave no room at this length.
bool corridor_witness(PairIJ pair, const GridSpec& g, double len,
                      Segment* out) {
  if (pair.i < 3 || pair.j < 3) return false;
  const double a = g.a;
  const double b = g.b;
  const double di = static_cast<double>(pair.i);
  const double dj = static_cast<double>(pair.j);
  const double in_x = (di - 2.0) * a;
  const double in_y = (dj - 2.0) * b;
  const double ux = in_x / len;
  const double uy = in_y / len;
  if (!(ux > 0.0) || !(uy > 0.0)) return false;
  const long long shared = std::gcd(pair.i - 2, pair.j - 2);
  // With interior diagonal points both perpendicular offsets must clear the
  // tube on the same side; otherwise the chord may cross the diagonal.
  const int sign_pairs_all[4][2] = {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  const int sign_pair_count = shared >= 2 ? 2 : 4;
  const double margins[] = {64.0, 8.0, 2.0, 1.4, 1.15, 1.03};
  for (double m : margins) {
    const double tube = m * kSnapRelTol * len;
    const double amin = m * kSnapRelTol * a;
    const double bmin = m * kSnapRelTol * b;
    const double gmin = m * kSnapRelTol * a * std::max(1.0, di - 1.0);
    const double dmin = m * kSnapRelTol * b * std::max(1.0, dj - 1.0);
    for (int sp = 0; sp < sign_pair_count; ++sp) {
      const int sa = sign_pairs_all[sp][0];
      const int sb = sign_pairs_all[sp][1];
      // Start offsets: sa * (uy*alpha - ux*beta) >= tube at minimal cost.
      double alpha;
      double beta;
      if (sa > 0) {
        beta = bmin;
        alpha = std::max(amin, (tube + ux * beta) / uy);
      } else {
        alpha = amin;
        beta = std::max(bmin, (tube + uy * alpha) / ux);
      }
      if (!(alpha < 0.45 * a) || !(beta < 0.45 * b)) continue;
      // End offsets: fix the low-capacity axis, solve the other from the
      // length equation, in both orders.
      for (int solve_delta = 0; solve_delta <= 1; ++solve_delta) {
        double gamma;
        double delta;
        double w;
        double h;
        if (solve_delta) {
          gamma = sb > 0 ? gmin : std::max(gmin, (tube + ux * dmin) / uy);
          w = in_x + alpha + gamma;
          const double h2 = len * len - w * w;
          if (!(h2 > 0.0)) continue;
          h = std::sqrt(h2);
          delta = h - in_y - beta;
        } else {
          delta = sb > 0 ? std::max(dmin, (tube + uy * gmin) / ux) : dmin;
          h = in_y + beta + delta;
          const double w2 = len * len - h * h;
          if (!(w2 > 0.0)) continue;
          w = std::sqrt(w2);
          gamma = w - in_x - alpha;
        }
        if (!(gamma >= gmin) || !(delta >= dmin)) continue;
        if (!(gamma < 0.45 * a) || !(delta < 0.45 * b)) continue;
        const double clear_b = static_cast<double>(sb) * (ux * delta - uy * gamma);
        if (!(clear_b >= tube)) continue;
        const Segment s{{a - alpha, b - beta}, {a - alpha + w, b - beta + h}};
        const BoundingRect r = discrete_bounding_rect(s, g);
        if (r.dims.i != pair.i || r.dims.j != pair.j) continue;
        if (passes_through_interior_grid_point(s, g)) continue;
        *out = s;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Segment place_witness(PairIJ pair, const GridSpec& g, double len) {
  require_grid(g);
  require_length(len);
  if (pair.i < 2 || pair.j < 2) {
    throw std::domain_error("witness dims must be at least 2");
  }
  const double a = g.a;
  const double b = g.b;
  const double di = static_cast<double>(pair.i);
  const double dj = static_cast<double>(pair.j);
  const double len2 = len * len;
  const double in_x = (di - 2.0) * a;
  const double in_y = (dj - 2.0) * b;
  const double out_x = di * a;
  const double out_y = dj * b;
  const double lo2 = in_x * in_x + in_y * in_y;
  const double hi2 = out_x * out_x + out_y * out_y;
  if (boundary_leq(len2, lo2)) {
    throw infeasible_error("length too short for the requested dims");
  }
  if (!boundary_leq(len2, hi2)) {
    throw infeasible_error("length exceeds the corner diagonal of the dims");
  }
  if (boundary_leq(hi2, len2)) {
    // Corner-to-corner is the only placement at this length; it avoids
    // interior grid points exactly when the dims are coprime.
    if (std::gcd(pair.i, pair.j) != 1LL) {
      throw infeasible_error(
          "corner-to-corner placement hits interior grid points");
    }
    const Segment s{{0.0, 0.0}, {out_x, out_y}};
    const BoundingRect r = discrete_bounding_rect(s, g);
    if (r.dims.i != pair.i || r.dims.j != pair.j ||
        passes_through_interior_grid_point(s, g)) {
      throw std::runtime_error("witness verification failed");
    }
    return s;
  }
  // Direction window: width len*cos(th) in ((i-2)a, i*a) and height
  // len*sin(th) in ((j-2)b, j*b). Nonempty because lo2 < len2 < hi2.
  const double th_lo = std::max(std::acos(std::min(1.0, out_x / len)),
                                std::asin(std::min(1.0, in_y / len)));
  const double th_hi = std::min(std::acos(std::min(1.0, in_x / len)),
                                std::asin(std::min(1.0, out_y / len)));
  for (int attempt = 0; attempt < 128; ++attempt) {
    const double tt =
        attempt == 0 ? 0.5 : 0.05 + 0.9 * frac(0.5 + attempt * kInvPhi);
    const double th = th_lo + tt * (th_hi - th_lo);
    const double w = len * std::cos(th);
    const double h = len * std::sin(th);
    // Offsets for which the widths land in exactly i columns / j rows.
    const double x_lo = std::max(0.0, (di - 1.0) * a - w);
    const double x_hi = std::min(a, out_x - w);
    const double y_lo = std::max(0.0, (dj - 1.0) * b - h);
    const double y_hi = std::min(b, out_y - h);
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) continue;
    const double fx = attempt == 0 ? kInvPhi : 0.05 + 0.9 * frac(attempt * kInvPhi2);
    const double fy =
        attempt == 0 ? kInvPhi2 : 0.05 + 0.9 * frac(0.25 + attempt * kInvPhi);
    const Point p{x_lo + fx * (x_hi - x_lo), y_lo + fy * (y_hi - y_lo)};
    const Segment s{p, {p.x + w, p.y + h}};
    const BoundingRect r = discrete_bounding_rect(s, g);
    if (r.dims.i != pair.i || r.dims.j != pair.j) continue;
    if (passes_through_interior_grid_point(s, g)) continue;
    return s;
  }
  Segment corridor;
  if (corridor_witness(pair, g, len, &corridor)) return corridor;
  // Both the randomized search and the direct corridor construction are
  // exhausted: under the snapping and incidence tolerances no placement of
  // this length realizes the pair, even though the exact inequalities admit
  // one. This occurs only within ~1e-9 of the lower length bound on grids
  // whose corner diagonal times the interior-point count overwhelms the
  // squared-length slack.
  throw infeasible_error("no tolerance-respecting placement at this length");
}

double asymptotic_slope(const GridSpec& g) {
  require_grid(g);
  return std::sqrt(1.0 / (g.a * g.a) + 1.0 / (g.b * g.b));
}

LengthInterval length_interval_for_tiles(long long tiles) {
  if (tiles < 3) {
    throw std::domain_error("length intervals are defined for tiles >= 3");
  }
  return {min_length_unit_square(tiles), min_length_unit_square(tiles + 1)};
}

}  // namespace gridseg
