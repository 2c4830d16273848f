#include "probability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "solvers.hpp"

namespace gridseg {

namespace {

void require_length(double len) {
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw std::domain_error("length must be positive and finite");
  }
}

// Shared tail formula; `spacing` selects the axis.
double tail_prob(double spacing, double len, long long n) {
  if (n < 1) {
    throw std::domain_error("tail index must be at least 1");
  }
  if (n == 1) return 1.0;
  const double z1 = spacing * static_cast<double>(n - 1) / len;
  const double z0 = spacing * static_cast<double>(n - 2) / len;
  if (z0 >= 1.0) return 0.0;
  // Branch choice at the boundaries is value-neutral: helper_f(1) = 1 makes
  // the pieces agree there.
  const double upper = z1 >= 1.0 ? 1.0 : helper_f(z1);
  const double scale = 2.0 * len / (std::numbers::pi * spacing);
  return scale * (upper - helper_f(z0));
}

}  // namespace

double avg_tiles(const GridSpec& g, double len) {
  require_grid(g);
  require_length(len);
  return 2.0 * len / std::numbers::pi * (1.0 / g.a + 1.0 / g.b) + 1.0;
}

double avg_tiles_inverse(const GridSpec& g, double avg) {
  require_grid(g);
  if (!std::isfinite(avg) || avg <= 1.0 || nearly_equal(avg, 1.0)) {
    throw std::domain_error("expected tile count must exceed 1");
  }
  return (avg - 1.0) * std::numbers::pi / (2.0 * (1.0 / g.a + 1.0 / g.b));
}

double helper_f(double z) {
  if (!std::isfinite(z)) {
    throw std::domain_error("argument must be finite");
  }
  if (z < 0.0) {
    if (z < -kSnapRelTol) {
      throw std::domain_error("argument below [0, 1]");
    }
    z = 0.0;
  }
  if (z > 1.0) {
    if (z - 1.0 > kSnapRelTol) {
      throw std::domain_error("argument above [0, 1]");
    }
    z = 1.0;
  }
  return z * std::acos(z) - std::sqrt(1.0 - z * z) + 1.0;
}

double helper_g(double x, double u, double v) {
  if (!(x > 0.0) || !std::isfinite(x) || !std::isfinite(u) || !std::isfinite(v)) {
    throw std::domain_error("overlap term needs x > 0 and finite u, v");
  }
  const double t = 2.0 * x;
  auto clamp_edge = [t](double w) {
    if (w < 0.0) {
      if (w < -kSnapRelTol * t) {
        throw std::domain_error("overlap offsets must be nonnegative");
      }
      return 0.0;
    }
    if (w > t) {
      if (w - t > kSnapRelTol * t) {
        throw std::domain_error("overlap offsets must be at most 2x");
      }
      return t;
    }
    return w;
  };
  u = clamp_edge(u);
  v = clamp_edge(v);
  const double ang = std::acos(v / t) - std::asin(u / t);
  const double root_v = std::sqrt(std::max(t * t - v * v, 0.0));
  const double root_u = std::sqrt(std::max(t * t - u * u, 0.0));
  return (ang * u * v + 2.0 * x * x + 0.5 * u * u + 0.5 * v * v - u * root_v -
          v * root_u) /
         (2.0 * std::numbers::pi);
}

double tail_prob_i(const GridSpec& g, double len, long long n) {
  require_grid(g);
  require_length(len);
  return tail_prob(g.a, len, n);
}

double tail_prob_j(const GridSpec& g, double len, long long n) {
  require_grid(g);
  require_length(len);
  return tail_prob(g.b, len, n);
}

double prob_max(double len) {
  require_length(len);
  const long long tiles = max_tiles_unit_square_count(len);
  const double len2 = len * len;
  const double td = static_cast<double>(tiles);
  double p;
  if (tiles % 2 == 1) {
    p = helper_g(len, td - 3.0, td - 3.0);
    if (tiles >= 5) {
      // The second optimal pair contributes only past its own lower length
      // bound; its term vanishes at the boundary, so the cut is value-neutral.
      const double thr =
          ((td - 5.0) * (td - 5.0) + (td - 1.0) * (td - 1.0)) / 4.0;
      if (!boundary_leq(len2, thr)) {
        p += 2.0 * helper_g(len, td - 5.0, td - 1.0);
      }
    }
  } else {
    p = 2.0 * helper_g(len, td - 4.0, td - 2.0);
    if (tiles >= 8) {
      const double thr = ((td - 6.0) * (td - 6.0) + td * td) / 4.0;
      if (!boundary_leq(len2, thr)) {
        p += 2.0 * helper_g(len, td - 6.0, td);
      }
    }
  }
  return std::max(p, 0.0);
}

double breakpoint_len(long long tiles) {
  if (tiles < 3) {
    throw std::domain_error("breakpoints are defined for tiles >= 3");
  }
  if (tiles % 2 == 1) {
    if (tiles > 3037000499LL) {
      throw std::domain_error("tile count too large for exact arithmetic");
    }
    const unsigned long long d1 = static_cast<unsigned long long>(tiles - 3);
    const unsigned long long d2 = static_cast<unsigned long long>(tiles - 1);
    return std::sqrt(static_cast<double>(d1 * d1 + d2 * d2)) / 2.0;
  }
  return static_cast<double>(tiles - 2) / std::numbers::sqrt2;
}

double asymptotic_ratio(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::domain_error("aspect ratio must be positive and finite");
  }
  return 2.0 * (1.0 + r) / (std::numbers::pi * std::hypot(1.0, r));
}

PeakLimits peak_limits() {
  return {2.0 / std::numbers::pi, 8.0 / (3.0 * std::numbers::pi),
          4.0 * std::numbers::sqrt2 / (3.0 * std::numbers::pi)};
}

double prob_max_peak_scaled(long long tiles) {
  return static_cast<double>(tiles) * prob_max(breakpoint_len(tiles));
}

}  // namespace gridseg
