#include "lwpa/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace lwpa {

double toroidal_sq_distance(const Point& a, const Point& b, const Window& w) {
  double dx = std::fabs(a.x - b.x);
  if (dx > 0.5 * w.width) dx = w.width - dx;
  double dy = std::fabs(a.y - b.y);
  if (dy > 0.5 * w.height) dy = w.height - dy;
  return dx * dx + dy * dy;
}

double toroidal_distance(const Point& a, const Point& b, const Window& w) {
  return std::sqrt(toroidal_sq_distance(a, b, w));
}

SpatialGrid::SpatialGrid(const PointPattern& pattern, double cell_min)
    : pattern_(&pattern) {
  const Window& w = pattern.window;
  if (cell_min <= 0.0) cell_min = w.min_side();
  nx_ = std::max(1, static_cast<int>(std::floor(w.width / cell_min)));
  ny_ = std::max(1, static_cast<int>(std::floor(w.height / cell_min)));
  cell_w_ = w.width / nx_;
  cell_h_ = w.height / ny_;
  cells_.resize(static_cast<std::size_t>(nx_) * ny_);
  for (std::size_t i = 0; i < pattern.points.size(); ++i) {
    const Point& p = pattern.points[i];
    cells_[static_cast<std::size_t>(cell_y(p.y)) * nx_ + cell_x(p.x)].push_back(
        static_cast<std::uint32_t>(i));
  }
}

int SpatialGrid::cell_x(double x) const {
  int c = static_cast<int>(std::floor(x / cell_w_));
  if (c < 0) c = 0;
  if (c >= nx_) c = nx_ - 1;
  return c;
}

int SpatialGrid::cell_y(double y) const {
  int c = static_cast<int>(std::floor(y / cell_h_));
  if (c < 0) c = 0;
  if (c >= ny_) c = ny_ - 1;
  return c;
}

namespace {
// iterate cell indices covering [c-k, c+k] with wrap, without duplicates
template <typename F>
void for_cell_range(int c, int k, int n, F&& f) {
  if (2 * k + 1 >= n) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  for (int i = c - k; i <= c + k; ++i) f(((i % n) + n) % n);
}
}  // namespace

bool SpatialGrid::any_within(const Point& q, double r,
                             std::size_t exclude_index) const {
  const double r2 = r * r;
  const int kx = static_cast<int>(std::ceil(r / cell_w_));
  const int ky = static_cast<int>(std::ceil(r / cell_h_));
  const int cx = cell_x(q.x);
  const int cy = cell_y(q.y);
  bool found = false;
  for_cell_range(cy, ky, ny_, [&](int iy) {
    if (found) return;
    for_cell_range(cx, kx, nx_, [&](int ix) {
      if (found) return;
      for (std::uint32_t idx : cells_[static_cast<std::size_t>(iy) * nx_ + ix]) {
        if (idx == exclude_index) continue;
        if (toroidal_sq_distance(q, pattern_->points[idx], pattern_->window) <= r2) {
          found = true;
          return;
        }
      }
    });
  });
  return found;
}

std::vector<std::size_t> SpatialGrid::within(const Point& q, double r) const {
  const double r2 = r * r;
  const int kx = static_cast<int>(std::ceil(r / cell_w_));
  const int ky = static_cast<int>(std::ceil(r / cell_h_));
  std::vector<std::size_t> out;
  for_cell_range(cell_y(q.y), ky, ny_, [&](int iy) {
    for_cell_range(cell_x(q.x), kx, nx_, [&](int ix) {
      for (std::uint32_t idx : cells_[static_cast<std::size_t>(iy) * nx_ + ix]) {
        if (toroidal_sq_distance(q, pattern_->points[idx], pattern_->window) <= r2)
          out.push_back(idx);
      }
    });
  });
  return out;
}

PointPattern sample_ppp(double density, const Window& window, RngSeed seed) {
  if (density < 0.0) throw std::invalid_argument("sample_ppp: negative density");
  PointPattern out;
  out.window = window;
  if (density == 0.0) return out;
  Rng rng = make_rng(seed);
  std::poisson_distribution<long> count_dist(density * window.area());
  const long n = count_dist(rng);
  std::uniform_real_distribution<double> ux(0.0, window.width);
  std::uniform_real_distribution<double> uy(0.0, window.height);
  out.points.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const double x = ux(rng);
    const double y = uy(rng);
    out.points.push_back({x, y});
  }
  return out;
}

std::pair<PointPattern, PointPattern> split_wifi(const PointPattern& wifi,
                                                 double p_closed, RngSeed seed) {
  if (!(p_closed >= 0.0 && p_closed <= 1.0))
    throw std::invalid_argument("split_wifi: p_closed must lie in [0,1]");
  PointPattern open, closed;
  open.window = closed.window = wifi.window;
  Rng rng = make_rng(seed);
  std::bernoulli_distribution mark(p_closed);
  for (const Point& p : wifi.points) {
    (mark(rng) ? closed : open).points.push_back(p);
  }
  return {std::move(open), std::move(closed)};
}

PointPattern matern_ii(const PointPattern& pattern, double delta, RngSeed seed) {
  if (delta < 0.0) throw std::invalid_argument("matern_ii: negative delta");
  if (delta == 0.0) return pattern;
  PointPattern out;
  out.window = pattern.window;
  const std::size_t n = pattern.points.size();
  if (n == 0) return out;
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<double> marks(n);
  for (double& m : marks) m = u01(rng);
  SpatialGrid grid(pattern, delta);
  for (std::size_t i = 0; i < n; ++i) {
    bool retained = true;
    for (std::size_t j : grid.within(pattern.points[i], delta)) {
      if (j == i) continue;
      if (marks[j] < marks[i] || (marks[j] == marks[i] && j < i)) {
        retained = false;
        break;
      }
    }
    if (retained) out.points.push_back(pattern.points[i]);
  }
  return out;
}

namespace {
void require_same_window(const PointPattern& a, const PointPattern& b) {
  if (a.window.width != b.window.width || a.window.height != b.window.height)
    throw std::invalid_argument("activate_lwpa: tiers sampled on different windows");
}
}  // namespace

Deployment activate_lwpa(Deployment tiers, const NetworkParams& params,
                         RngSeed seed, const ActivationOptions& opts) {
  params.validate();
  const Window& w = tiers.wifi_open.window;
  require_same_window(tiers.wifi_open, tiers.wifi_closed);
  require_same_window(tiers.wifi_open, tiers.users);
  require_same_window(tiers.wifi_open, tiers.lte_bs);
  if (params.delta > 0.0 && w.min_side() < 4.0 * params.delta)
    throw std::invalid_argument("activate_lwpa: window side must be >= 4*delta");

  // condition 4 within the closed tier (CSMA contention)
  tiers.active_closed = matern_ii(tiers.wifi_closed, params.delta, derive_seed(seed, 1));

  // conditions 2 and 3 on the open tier
  PointPattern candidates;
  candidates.window = w;
  const PointPattern& holes =
      opts.holes_around_all_closed ? tiers.wifi_closed : tiers.active_closed;
  SpatialGrid user_grid(tiers.users, std::max(params.R_serve, 1e-9));
  SpatialGrid hole_grid(holes, std::max(params.delta, 1e-9));
  for (const Point& ap : tiers.wifi_open.points) {
    if (tiers.users.empty() || !user_grid.any_within(ap, params.R_serve)) continue;
    if (!holes.empty() && hole_grid.any_within(ap, params.delta)) continue;
    candidates.points.push_back(ap);
  }

  // condition 4 among the surviving open APs
  tiers.active_lwpa = matern_ii(candidates, params.delta, derive_seed(seed, 2));
  return tiers;
}

Deployment sample_deployment(const NetworkParams& params, const Window& window,
                             RngSeed seed, const ActivationOptions& opts,
                             bool enable_activation) {
  params.validate();
  Deployment dep;
  dep.lte_bs = sample_ppp(params.lambda_L, window, derive_seed(seed, 101));
  dep.users = sample_ppp(params.xi_u, window, derive_seed(seed, 102));
  PointPattern wifi = sample_ppp(params.lambda_W, window, derive_seed(seed, 103));
  auto [open, closed] = split_wifi(wifi, params.p_closed, derive_seed(seed, 104));
  dep.wifi_open = std::move(open);
  dep.wifi_closed = std::move(closed);
  dep.active_closed.window = window;
  dep.active_lwpa.window = window;
  if (enable_activation) {
    dep = activate_lwpa(std::move(dep), params, derive_seed(seed, 105), opts);
  } else {
    // baseline: closed tier still contends, no LWPA activation
    dep.active_closed =
        matern_ii(dep.wifi_closed, params.delta,
                  derive_seed(derive_seed(seed, 105), 1));
  }
  return dep;
}

void write_deployment_csv(const Deployment& dep, std::ostream& os) {
  auto dump = [&os](const char* tier, const PointPattern& p) {
    for (const Point& pt : p.points)
      os << tier << ',' << pt.x << ',' << pt.y << '\n';
  };
  os << "tier,x,y\n";
  dump("lte_bs", dep.lte_bs);
  dump("user", dep.users);
  dump("wifi_open", dep.wifi_open);
  dump("wifi_closed", dep.wifi_closed);
  dump("active_closed", dep.active_closed);
  dump("active_lwpa", dep.active_lwpa);
}

double min_pairwise_distance(const PointPattern& pattern) {
  double best = std::numeric_limits<double>::infinity();
  const auto& pts = pattern.points;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::min(best, toroidal_sq_distance(pts[i], pts[j], pattern.window));
  return std::sqrt(best);
}

double min_cross_distance(const PointPattern& a, const PointPattern& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& pa : a.points)
    for (const Point& pb : b.points)
      best = std::min(best, toroidal_sq_distance(pa, pb, a.window));
  return std::sqrt(best);
}

}  // namespace lwpa
