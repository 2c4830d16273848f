#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "geometry.hpp"
#include "montecarlo.hpp"
#include "probability.hpp"
#include "solvers.hpp"

using gridseg::Estimate;
using gridseg::GridSpec;
using gridseg::PairIJ;
using gridseg::SamplerConfig;
using gridseg::Segment;

namespace {

const GridSpec kUnit{1.0, 1.0};

bool within_4_sigma(const Estimate& e, double reference) {
  return std::abs(e.mean - reference) <= 4.0 * e.std_error;
}

}  // namespace

TEST_CASE("sampler config validation") {
  CHECK_THROWS_AS(
      gridseg::validate_sampler_config({kUnit, 0.0, 100, 0, 1}),
      std::domain_error);
  CHECK_THROWS_AS(
      gridseg::validate_sampler_config({kUnit, 1.0, 0, 0, 1}),
      std::domain_error);
  CHECK_THROWS_AS(
      gridseg::validate_sampler_config({kUnit, 1.0, 100, 0, 0}),
      std::domain_error);
  CHECK_THROWS_AS(
      gridseg::validate_sampler_config({GridSpec{-1.0, 1.0}, 1.0, 100, 0, 1}),
      std::domain_error);
  CHECK_NOTHROW(gridseg::validate_sampler_config({kUnit, 1.0, 100, 0, 1}));
}

TEST_CASE("sample stream: pure function of config and index") {
  const SamplerConfig cfg{GridSpec{1.35, 1.0}, 2.4, 1000, 7, 4};
  for (unsigned long long k : {0ULL, 1ULL, 500ULL, 999ULL}) {
    const Segment s1 = gridseg::sample_segment(cfg, k);
    const Segment s2 = gridseg::sample_segment(cfg, k);
    CHECK(s1.p1.x == s2.p1.x);
    CHECK(s1.p1.y == s2.p1.y);
    CHECK(s1.p2.x == s2.p2.x);
    CHECK(s1.p2.y == s2.p2.y);

    CHECK(s1.p1.x >= 0.0);
    CHECK(s1.p1.x < cfg.grid.a);
    CHECK(s1.p1.y >= 0.0);
    CHECK(s1.p1.y < cfg.grid.b);
    CHECK(gridseg::segment_length(s1) == doctest::Approx(cfg.len).epsilon(1e-12));

    const gridseg::BoundingRect r =
        gridseg::discrete_bounding_rect(s1, cfg.grid);
    CHECK(r.dims.i >= 1);
    CHECK(r.dims.j >= 1);
    CHECK_FALSE(gridseg::passes_through_interior_grid_point(s1, cfg.grid));
  }

  const Segment a = gridseg::sample_segment(cfg, 0);
  const Segment b = gridseg::sample_segment(cfg, 1);
  CHECK(a.p1.x != b.p1.x);

  // A different seed moves the stream.
  SamplerConfig other = cfg;
  other.seed = 8;
  CHECK(gridseg::sample_segment(other, 0).p1.x != a.p1.x);

  CHECK_THROWS_AS(gridseg::sample_segment(cfg, 1000), std::domain_error);
}

TEST_CASE("estimates are bit-identical across repeated runs") {
  const SamplerConfig cfg{GridSpec{2.0, 3.0}, 4.0, 50000, 42, 13};
  const Estimate e1 = gridseg::estimate_avg_tiles(cfg);
  const Estimate e2 = gridseg::estimate_avg_tiles(cfg);
  const Estimate e3 = gridseg::estimate_avg_tiles(cfg);
  CHECK(e1.mean == e2.mean);
  CHECK(e1.mean == e3.mean);
  CHECK(e1.std_error == e2.std_error);
  CHECK(e1.std_error == e3.std_error);
  CHECK(e1.n == cfg.samples);
  CHECK(e1.ci_low <= e1.mean);
  CHECK(e1.mean <= e1.ci_high);
  CHECK(e1.std_error > 0.0);
}

TEST_CASE("chunking changes only the merge order, not the estimate") {
  SamplerConfig cfg{GridSpec{1.35, 1.0}, 2.4, 30000, 5, 1};
  const Estimate one = gridseg::estimate_avg_tiles(cfg);
  cfg.chunks = 8;
  const Estimate eight = gridseg::estimate_avg_tiles(cfg);
  // Same per-index values; only compensated-summation order differs.
  CHECK(one.mean == doctest::Approx(eight.mean).epsilon(1e-12));
  CHECK(one.std_error == doctest::Approx(eight.std_error).epsilon(1e-9));
}

TEST_CASE("average-tiles estimate brackets the closed form") {
  const SamplerConfig cfg{kUnit, 1.0, 200000, 42, 8};
  const Estimate e = gridseg::estimate_avg_tiles(cfg);
  const double reference = gridseg::avg_tiles(kUnit, 1.0);
  CHECK(within_4_sigma(e, reference));
  // The estimate separates 2*len/pi*(1/a+1/b)+1 from len/(pi*...)+1 variants.
  CHECK_FALSE(within_4_sigma(e, 1.0 / std::numbers::pi + 1.0));

  const SamplerConfig cfg2{GridSpec{1.35, 1.0}, 2.4, 200000, 42, 8};
  CHECK(within_4_sigma(gridseg::estimate_avg_tiles(cfg2),
                       gridseg::avg_tiles(GridSpec{1.35, 1.0}, 2.4)));
}

TEST_CASE("tail estimates: exact n=1, monotone, match the closed form") {
  const GridSpec g{1.35, 1.0};
  const SamplerConfig cfg{g, 2.4, 200000, 11, 8};
  const std::vector<long long> ns{1, 2, 3, 5};
  const std::vector<Estimate> ti = gridseg::estimate_tail_prob(cfg, 0, ns);
  REQUIRE(ti.size() == ns.size());
  CHECK(ti[0].mean == 1.0);
  CHECK(ti[0].std_error == 0.0);
  CHECK(ti[1].mean >= ti[2].mean);
  CHECK(ti[2].mean >= ti[3].mean);
  for (std::size_t v = 0; v < ns.size(); ++v) {
    CHECK(within_4_sigma(ti[v], gridseg::tail_prob_i(g, cfg.len, ns[v])));
  }

  const std::vector<Estimate> tj = gridseg::estimate_tail_prob(cfg, 1, ns);
  for (std::size_t v = 0; v < ns.size(); ++v) {
    CHECK(within_4_sigma(tj[v], gridseg::tail_prob_j(g, cfg.len, ns[v])));
  }

  CHECK_THROWS_AS(gridseg::estimate_tail_prob(cfg, 2, ns), std::domain_error);
  CHECK_THROWS_AS(gridseg::estimate_tail_prob(cfg, 0, {0}), std::domain_error);
}

TEST_CASE("maximal-coverage estimate matches the closed form on the unit grid") {
  const SamplerConfig cfg{kUnit, 1.0, 200000, 3, 8};
  const Estimate e = gridseg::estimate_prob_max(cfg);
  CHECK(within_4_sigma(e, gridseg::prob_max(1.0)));

  const SamplerConfig bad{GridSpec{1.35, 1.0}, 1.0, 100, 0, 1};
  CHECK_THROWS_AS(gridseg::estimate_prob_max(bad), std::domain_error);
}

TEST_CASE("exhaustive search agrees with the closed-form solver") {
  const GridSpec grids[] = {{1.0, 1.0}, {1.35, 1.0}, {std::sqrt(2.0), 1.0},
                            {2.0, 3.0}};
  for (const GridSpec& g : grids) {
    for (long long t = 4; t <= 25; ++t) {
      const double bp = gridseg::min_length(g, t).inf_length;
      for (double len : {bp - 1e-9, bp, bp + 1e-9, bp + 0.3}) {
        if (len <= 0.0) continue;
        const PairIJ p = gridseg::brute_force_max_tiles(g, len, 0);
        CHECK(p.i + p.j - 1 == gridseg::max_tiles_count(g, len));
        CHECK(gridseg::check_pair_feasibility(len, p, g));
      }
    }
  }
}

TEST_CASE("exhaustive search bound handling") {
  CHECK_THROWS_AS(gridseg::brute_force_max_tiles(kUnit, 10.0, 5),
                  std::domain_error);
  const PairIJ autob = gridseg::brute_force_max_tiles(kUnit, 3.7, 0);
  const PairIJ wide = gridseg::brute_force_max_tiles(kUnit, 3.7, 40);
  CHECK(autob.i == wide.i);
  CHECK(autob.j == wide.j);
  CHECK_THROWS_AS(gridseg::brute_force_max_tiles(kUnit, 0.0, 0),
                  std::domain_error);
}
