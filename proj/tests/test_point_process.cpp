#include "doctest.h"
#include "lwpa/analytic.hpp"
#include "lwpa/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

using namespace lwpa;
using std::numbers::pi;

TEST_CASE("sample_ppp: empty and invalid cases") {
  const Window w(1000.0, 1000.0);
  CHECK(sample_ppp(0.0, w, RngSeed{1}).empty());
  CHECK_THROWS_AS(sample_ppp(-1.0, w, RngSeed{1}), std::invalid_argument);
}

TEST_CASE("sample_ppp: count matches Poisson mean over many draws") {
  const Window w(2000.0, 2000.0);
  const double density = 2e-4;
  const double expected = density * w.area();  // 800
  const int draws = 10000;
  double total = 0.0;
  for (int i = 0; i < draws; ++i)
    total += static_cast<double>(sample_ppp(density, w, RngSeed{900 + static_cast<std::uint64_t>(i)}).size());
  const double mean = total / draws;
  const double se = std::sqrt(expected / draws);
  CHECK(std::fabs(mean - expected) <= 3.0 * se);
}

TEST_CASE("sample_ppp: all points inside the window, deterministic per seed") {
  const Window w(1000.0, 500.0);
  const PointPattern a = sample_ppp(1e-4, w, RngSeed{42});
  const PointPattern b = sample_ppp(1e-4, w, RngSeed{42});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.points[i].x == b.points[i].x);
    CHECK(a.points[i].y == b.points[i].y);
    CHECK(a.points[i].x >= 0.0);
    CHECK(a.points[i].x <= w.width);
    CHECK(a.points[i].y >= 0.0);
    CHECK(a.points[i].y <= w.height);
  }
}

TEST_CASE("sample_ppp: Ripley-K consistent with CSR") {
  // toroidal K-hat at r in {50, 100} against a 99% envelope from 99
  // independent CSR realizations
  const Window w(1000.0, 1000.0);
  const double density = 1e-4;
  auto k_hat = [&](const PointPattern& p, double r) {
    const double r2 = r * r;
    const double n = static_cast<double>(p.size());
    if (n < 2.0) return 0.0;
    double pairs = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (i != j && toroidal_sq_distance(p.points[i], p.points[j], w) <= r2)
          pairs += 1.0;
    return w.area() * pairs / (n * (n - 1.0));
  };
  for (double r : {50.0, 100.0}) {
    std::vector<double> envelope;
    for (int i = 0; i < 99; ++i)
      envelope.push_back(k_hat(sample_ppp(density, w, RngSeed{5000 + static_cast<std::uint64_t>(i)}), r));
    const double observed = k_hat(sample_ppp(density, w, RngSeed{777}), r);
    const double lo = *std::min_element(envelope.begin(), envelope.end());
    const double hi = *std::max_element(envelope.begin(), envelope.end());
    CHECK(observed >= lo);
    CHECK(observed <= hi);
    // the theoretical CSR value sits inside the envelope too
    CHECK(pi * r * r >= lo);
    CHECK(pi * r * r <= hi);
  }
}

TEST_CASE("split_wifi degenerate probabilities") {
  const Window w(1000.0, 1000.0);
  const PointPattern wifi = sample_ppp(2e-4, w, RngSeed{3});
  auto [open0, closed0] = split_wifi(wifi, 0.0, RngSeed{4});
  CHECK(closed0.empty());
  CHECK(open0.size() == wifi.size());
  auto [open1, closed1] = split_wifi(wifi, 1.0, RngSeed{4});
  CHECK(open1.empty());
  CHECK(closed1.size() == wifi.size());
  CHECK_THROWS_AS(split_wifi(wifi, 1.5, RngSeed{4}), std::invalid_argument);
}

TEST_CASE("split_wifi: independent thinning halves the density") {
  const Window w(2000.0, 2000.0);
  double open_total = 0.0, closed_total = 0.0;
  const int draws = 2000;
  for (int i = 0; i < draws; ++i) {
    const PointPattern wifi = sample_ppp(2e-4, w, RngSeed{10000 + static_cast<std::uint64_t>(i)});
    auto [open, closed] = split_wifi(wifi, 0.5, RngSeed{20000 + static_cast<std::uint64_t>(i)});
    CHECK(open.size() + closed.size() == wifi.size());
    open_total += static_cast<double>(open.size());
    closed_total += static_cast<double>(closed.size());
  }
  const double expected = 1e-4 * w.area();  // 400
  const double se = std::sqrt(expected / draws);
  CHECK(std::fabs(open_total / draws - expected) <= 3.0 * se);
  CHECK(std::fabs(closed_total / draws - expected) <= 3.0 * se);
}

TEST_CASE("matern_ii basics") {
  const Window w(1000.0, 1000.0);
  const PointPattern p = sample_ppp(2e-4, w, RngSeed{6});
  SUBCASE("delta=0 is the identity") {
    const PointPattern out = matern_ii(p, 0.0, RngSeed{7});
    CHECK(out.size() == p.size());
  }
  SUBCASE("hard-core distance holds") {
    const PointPattern out = matern_ii(p, 50.0, RngSeed{7});
    CHECK(min_pairwise_distance(out) >= 50.0);
  }
  SUBCASE("idempotent at fixed delta") {
    const PointPattern once = matern_ii(p, 50.0, RngSeed{7});
    const PointPattern twice = matern_ii(once, 50.0, RngSeed{8});
    REQUIRE(twice.size() == once.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(twice.points[i].x == once.points[i].x);
      CHECK(twice.points[i].y == once.points[i].y);
    }
  }
}

TEST_CASE("matern_ii retained density matches the closed form within 2%") {
  const Window w(2000.0, 2000.0);
  const double lambda = 2e-4, delta = 50.0;
  const double expected = matern_density(lambda, delta);  // 1.00853e-4
  double total = 0.0;
  const int windows = 120;
  for (int i = 0; i < windows; ++i) {
    const PointPattern p = sample_ppp(lambda, w, RngSeed{30000 + static_cast<std::uint64_t>(i)});
    total += empirical_density(matern_ii(p, delta, RngSeed{40000 + static_cast<std::uint64_t>(i)}));
  }
  const double mean = total / windows;
  CHECK(std::fabs(mean - expected) / expected <= 0.02);
}

namespace {
Deployment tiers_on(const NetworkParams& params, const Window& w, RngSeed seed) {
  Deployment d;
  d.lte_bs = sample_ppp(params.lambda_L, w, derive_seed(seed, 1));
  d.users = sample_ppp(params.xi_u, w, derive_seed(seed, 2));
  PointPattern wifi = sample_ppp(params.lambda_W, w, derive_seed(seed, 3));
  auto [open, closed] = split_wifi(wifi, params.p_closed, derive_seed(seed, 4));
  d.wifi_open = std::move(open);
  d.wifi_closed = std::move(closed);
  d.active_closed.window = w;
  d.active_lwpa.window = w;
  return d;
}
}  // namespace

TEST_CASE("activate_lwpa trivial cases") {
  const Window w(1000.0, 1000.0);
  SUBCASE("no users, no activation") {
    const NetworkParams p = reference_default_params(0.5, 0.0);
    const Deployment dep = activate_lwpa(tiers_on(p, w, RngSeed{50}), p, RngSeed{51});
    CHECK(dep.active_lwpa.empty());
  }
  SUBCASE("all closed, no activation") {
    const NetworkParams p = reference_default_params(1.0, 2e-4);
    const Deployment dep = activate_lwpa(tiers_on(p, w, RngSeed{50}), p, RngSeed{51});
    CHECK(dep.active_lwpa.empty());
  }
  SUBCASE("window too small for the guard radius") {
    const NetworkParams p = reference_default_params(0.5, 2e-4);
    const Window tiny(150.0, 150.0);
    CHECK_THROWS_AS(activate_lwpa(tiers_on(p, tiny, RngSeed{50}), p, RngSeed{51}),
                    std::invalid_argument);
  }
}

TEST_CASE("deployment invariants hold on sampled realizations") {
  const NetworkParams p = reference_default_params(0.5, 2e-4);
  const Window w(2000.0, 2000.0);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Deployment dep = sample_deployment(p, w, RngSeed{600 + s});
    CHECK(dep.active_closed.size() <= dep.wifi_closed.size());
    CHECK(dep.active_lwpa.size() <= dep.wifi_open.size());
    CHECK(min_pairwise_distance(dep.active_closed) >= p.delta);
    CHECK(min_pairwise_distance(dep.active_lwpa) >= p.delta);
    CHECK(min_cross_distance(dep.active_lwpa, dep.active_closed) >= p.delta);
    // union of all active transmitters is hard-core
    PointPattern all_active = dep.active_lwpa;
    all_active.points.insert(all_active.points.end(),
                             dep.active_closed.points.begin(),
                             dep.active_closed.points.end());
    CHECK(min_pairwise_distance(all_active) >= p.delta);
    // every active LWPA AP serves at least one user
    SpatialGrid users(dep.users, p.R_serve);
    for (const Point& ap : dep.active_lwpa.points)
      CHECK(users.any_within(ap, p.R_serve));
    // packing bound with slack
    CHECK(empirical_density(dep.active_lwpa) <=
          1.0 / (pi * p.delta * p.delta) * 1.2);
  }
}

TEST_CASE("sample_deployment is deterministic for a fixed seed") {
  const NetworkParams p = reference_default_params(0.5, 2e-4);
  const Window w(2000.0, 2000.0);
  const Deployment a = sample_deployment(p, w, RngSeed{99});
  const Deployment b = sample_deployment(p, w, RngSeed{99});
  std::ostringstream sa, sb;
  write_deployment_csv(a, sa);
  write_deployment_csv(b, sb);
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().find("active_lwpa") != std::string::npos);
}

TEST_CASE("mean LWPA density is monotone in xi_u and p (paired seeds)") {
  const Window w(2000.0, 2000.0);
  const int reps = 60;
  auto mean_density = [&](double p_closed, double xi) {
    const NetworkParams p = reference_default_params(p_closed, xi);
    double total = 0.0;
    for (int r = 0; r < reps; ++r)
      total += empirical_density(
          sample_deployment(p, w, RngSeed{7000 + static_cast<std::uint64_t>(r)}).active_lwpa);
    return total / reps;
  };
  CHECK(mean_density(0.5, 1e-4) <= mean_density(0.5, 4e-4));
  CHECK(mean_density(0.8, 2e-4) <= mean_density(0.2, 2e-4));
}

TEST_CASE("literal condition-3 variant removes at least as many candidates") {
  const NetworkParams p = reference_default_params(0.5, 4e-4);
  const Window w(2000.0, 2000.0);
  ActivationOptions literal;
  literal.holes_around_all_closed = true;
  double canonical = 0.0, strict = 0.0;
  for (std::uint64_t s = 0; s < 30; ++s) {
    canonical += static_cast<double>(
        sample_deployment(p, w, RngSeed{800 + s}).active_lwpa.size());
    strict += static_cast<double>(
        sample_deployment(p, w, RngSeed{800 + s}, literal).active_lwpa.size());
  }
  CHECK(strict <= canonical);
}
