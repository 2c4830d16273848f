#include "montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>

#include "solvers.hpp"

namespace gridseg {

namespace {

struct SplitMix64 {
  unsigned long long state;
  explicit SplitMix64(unsigned long long s) : state(s) {}
  unsigned long long next() {
    state += 0x9E3779B97F4A7C15ULL;
    unsigned long long z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

unsigned long long stream_seed(unsigned long long seed,
                               unsigned long long index) {
  unsigned long long z = seed + (index + 1ULL) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct NeumaierSum {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
  double value() const { return s + c; }
};

struct ChunkRange {
  unsigned long long begin;
  unsigned long long end;
};

ChunkRange chunk_range(const SamplerConfig& cfg, unsigned int c) {
  const unsigned long long q = cfg.samples / cfg.chunks;
  const unsigned long long r = cfg.samples % cfg.chunks;
  const unsigned long long begin =
      q * c + std::min<unsigned long long>(c, r);
  return {begin, begin + q + (c < r ? 1ULL : 0ULL)};
}

Segment draw(const SamplerConfig& cfg, unsigned long long index) {
  SplitMix64 rng(stream_seed(cfg.seed, index));
  const double a = cfg.grid.a;
  const double b = cfg.grid.b;
  for (int tries = 0; tries < 1000; ++tries) {
    const double x = a * rng.unit();
    const double y = b * rng.unit();
    const double th = 2.0 * std::numbers::pi * rng.unit();
    const Segment s{{x, y},
                    {x + cfg.len * std::cos(th), y + cfg.len * std::sin(th)}};
    const BoundingRect r = discrete_bounding_rect(s, cfg.grid);
    if (r.dims.i >= 1 && r.dims.j >= 1 &&
        !passes_through_interior_grid_point(s, cfg.grid)) {
      return s;
    }
  }
  throw std::runtime_error("sampler failed to draw a non-degenerate segment");
}

// Runs fn(chunk_index) over all chunks on a small pool; rethrows the first
// worker exception after joining.
template <class Fn>
void run_chunks(unsigned int chunks, Fn&& fn) {
  std::atomic<unsigned int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const unsigned int c = next.fetch_add(1);
      if (c >= chunks || failed.load()) return;
      try {
        fn(c);
      } catch (...) {
        {
          const std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
        failed.store(true);
        return;
      }
    }
  };
  const unsigned int workers = std::max(
      1u, std::min<unsigned int>(chunks, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

Estimate summarize(double sum, double sum2, unsigned long long n) {
  const double dn = static_cast<double>(n);
  const double mean = sum / dn;
  double var = 0.0;
  if (n > 1) {
    var = std::max(0.0, (sum2 - sum * sum / dn) / (dn - 1.0));
  }
  const double se = std::sqrt(var / dn);
  return {mean, se, n, mean - 1.96 * se, mean + 1.96 * se};
}

template <class PerSample>  // double(const Segment&)
Estimate estimate_scalar(const SamplerConfig& cfg, PerSample&& f) {
  struct Part {
    double s = 0.0;
    double s2 = 0.0;
  };
  std::vector<Part> parts(cfg.chunks);
  run_chunks(cfg.chunks, [&](unsigned int c) {
    const ChunkRange r = chunk_range(cfg, c);
    NeumaierSum s, s2;
    for (unsigned long long k = r.begin; k < r.end; ++k) {
      const double v = f(draw(cfg, k));
      s.add(v);
      s2.add(v * v);
    }
    parts[c] = {s.value(), s2.value()};
  });
  NeumaierSum s, s2;
  for (const Part& p : parts) {
    s.add(p.s);
    s2.add(p.s2);
  }
  return summarize(s.value(), s2.value(), cfg.samples);
}

}  // namespace

void validate_sampler_config(const SamplerConfig& cfg) {
  require_grid(cfg.grid);
  if (!(cfg.len > 0.0) || !std::isfinite(cfg.len)) {
    throw std::domain_error("length must be positive and finite");
  }
  if (cfg.samples < 1ULL) {
    throw std::domain_error("sample count must be at least 1");
  }
  if (cfg.chunks < 1u) {
    throw std::domain_error("chunk count must be at least 1");
  }
}

Segment sample_segment(const SamplerConfig& cfg, unsigned long long index) {
  validate_sampler_config(cfg);
  if (index >= cfg.samples) {
    throw std::domain_error("sample index out of range");
  }
  return draw(cfg, index);
}

Estimate estimate_avg_tiles(const SamplerConfig& cfg) {
  validate_sampler_config(cfg);
  return estimate_scalar(cfg, [&cfg](const Segment& s) {
    return static_cast<double>(count_visited_tiles(s, cfg.grid));
  });
}

std::vector<Estimate> estimate_tail_prob(const SamplerConfig& cfg, int axis,
                                         const std::vector<long long>& n_values) {
  validate_sampler_config(cfg);
  if (axis != 0 && axis != 1) {
    throw std::domain_error("axis must be 0 (width) or 1 (height)");
  }
  for (const long long n : n_values) {
    if (n < 1) throw std::domain_error("tail index must be at least 1");
  }
  const std::size_t m = n_values.size();
  // Indicator counts are exact integers; one shared pass over the stream.
  std::vector<std::vector<unsigned long long>> parts(
      cfg.chunks, std::vector<unsigned long long>(m, 0ULL));
  run_chunks(cfg.chunks, [&](unsigned int c) {
    const ChunkRange r = chunk_range(cfg, c);
    std::vector<unsigned long long>& counts = parts[c];
    for (unsigned long long k = r.begin; k < r.end; ++k) {
      const BoundingRect rect = discrete_bounding_rect(draw(cfg, k), cfg.grid);
      const long long dim = axis == 0 ? rect.dims.i : rect.dims.j;
      for (std::size_t v = 0; v < m; ++v) {
        if (dim >= n_values[v]) ++counts[v];
      }
    }
  });
  std::vector<Estimate> out(m);
  for (std::size_t v = 0; v < m; ++v) {
    unsigned long long hits = 0ULL;
    for (unsigned int c = 0; c < cfg.chunks; ++c) hits += parts[c][v];
    const double sum = static_cast<double>(hits);
    out[v] = summarize(sum, sum, cfg.samples);
  }
  return out;
}

Estimate estimate_prob_max(const SamplerConfig& cfg) {
  validate_sampler_config(cfg);
  if (!nearly_equal(cfg.grid.a, 1.0) || !nearly_equal(cfg.grid.b, 1.0)) {
    throw std::domain_error(
        "maximal-coverage estimation requires the unit square grid");
  }
  const long long target = max_tiles_unit_square_count(cfg.len);
  return estimate_scalar(cfg, [&cfg, target](const Segment& s) {
    return count_visited_tiles(s, cfg.grid) == target ? 1.0 : 0.0;
  });
}

PairIJ brute_force_max_tiles(const GridSpec& g, double len, long long bound) {
  require_grid(g);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw std::domain_error("length must be positive and finite");
  }
  const long long need = ceil_snapped(len / std::min(g.a, g.b)) + 3;
  if (bound <= 0) {
    bound = need;
  } else if (bound < need) {
    throw std::domain_error("search bound too small to certify the maximum");
  }
  PairIJ best{2, 2};
  long long best_count = 3;
  for (long long i = 2; i <= bound; ++i) {
    bool row_any = false;
    for (long long j = 2; j <= bound; ++j) {
      // Infeasibility is monotone in each dim, so the first failure ends the
      // row, and an empty row ends the search.
      if (!check_pair_feasibility(len, {i, j}, g)) break;
      row_any = true;
      if (i + j - 1 > best_count) {
        best_count = i + j - 1;
        best = {i, j};
      }
    }
    if (!row_any) break;
  }
  return best;
}

}  // namespace gridseg
