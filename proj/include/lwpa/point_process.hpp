#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "lwpa/core.hpp"
#include "lwpa/rng.hpp"

namespace lwpa {

// All neighborhood queries use the wrap-around (toroidal) metric, so
// finite-window densities estimate infinite-plane intensities without
// border correction.
double toroidal_distance(const Point& a, const Point& b, const Window& w);
double toroidal_sq_distance(const Point& a, const Point& b, const Window& w);

// Uniform-grid spatial index over a point pattern for fixed-radius
// neighborhood queries on the torus.
class SpatialGrid {
 public:
  SpatialGrid(const PointPattern& pattern, double cell_min);

  // true iff some indexed point other than exclude_index lies within
  // distance r of q
  bool any_within(const Point& q, double r,
                  std::size_t exclude_index = static_cast<std::size_t>(-1)) const;

  // indices of points within distance r of q (unsorted)
  std::vector<std::size_t> within(const Point& q, double r) const;

 private:
  const PointPattern* pattern_;
  int nx_, ny_;
  double cell_w_, cell_h_;
  std::vector<std::vector<std::uint32_t>> cells_;
  int cell_x(double x) const;
  int cell_y(double y) const;
};

struct Deployment {
  PointPattern lte_bs;
  PointPattern users;
  PointPattern wifi_open;
  PointPattern wifi_closed;
  PointPattern active_closed;  // closed tier after CSMA contention
  PointPattern active_lwpa;    // open tier after the four activation conditions
};

// Homogeneous PPP: Poisson(density * area) points, i.i.d. uniform.
PointPattern sample_ppp(double density, const Window& window, RngSeed seed);

// Independent Bernoulli(p_closed) mark per point; returns (open, closed).
std::pair<PointPattern, PointPattern> split_wifi(const PointPattern& wifi,
                                                 double p_closed, RngSeed seed);

// Matern type-II hard-core thinning: i.i.d. uniform(0,1) marks; a point is
// retained iff no other input point within distance delta carries a strictly
// smaller mark (ties broken by index).
PointPattern matern_ii(const PointPattern& pattern, double delta, RngSeed seed);

struct ActivationOptions {
  // Condition 3 checked against every closed-access AP instead of only the
  // active (post-contention) ones.
  bool holes_around_all_closed = false;
};

// Four-condition pipeline: closed-tier contention, then open-tier filtering
// (>=1 user in range, no protected AP within delta), then open-tier
// contention. Requires all tiers on the same window with min side >= 4*delta.
Deployment activate_lwpa(Deployment tiers, const NetworkParams& params,
                         RngSeed seed, const ActivationOptions& opts = {});

// Samples all tiers and runs the activation pipeline. Sub-seeds are derived
// from `seed` per stage, so disabling activation does not perturb the tier
// samples.
Deployment sample_deployment(const NetworkParams& params, const Window& window,
                             RngSeed seed, const ActivationOptions& opts = {},
                             bool enable_activation = true);

// One CSV row per point: tier,x,y
void write_deployment_csv(const Deployment& dep, std::ostream& os);

// Minimum pairwise toroidal distance within a pattern (inf for size < 2).
double min_pairwise_distance(const PointPattern& pattern);

// Minimum toroidal distance between two patterns (inf if either empty).
double min_cross_distance(const PointPattern& a, const PointPattern& b);

}  // namespace lwpa
