#include "lwpa/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "lwpa/kernels.hpp"

namespace lwpa {

namespace {

// run fn(i) for i in [0, n) on a worker pool; fn writes only to its own slot
template <typename Fn>
void parallel_reps(int n, Fn&& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = static_cast<int>(w); i < n; i += static_cast<int>(workers)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

MeanSd mean_sd(const std::vector<double>& v) {
  if (v.empty()) return {};
  double m = 0.0;
  for (double x : v) m += x;
  m /= static_cast<double>(v.size());
  double s2 = 0.0;
  for (double x : v) s2 += (x - m) * (x - m);
  if (v.size() > 1) s2 /= static_cast<double>(v.size() - 1);
  return {m, std::sqrt(s2)};
}

double exp_draw(Rng& rng) {
  std::exponential_distribution<double> d(1.0);
  return d(rng);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("normal_quantile: p must lie in (0,1)");
  // Acklam's rational approximation, |rel err| < 1.15e-9
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  q = p - 0.5;
  r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

McEstimate estimate_lwpa_density(const NetworkParams& params, const McConfig& mc,
                                 const ActivationOptions& opts) {
  params.validate();
  mc.validate(params);
  std::vector<double> densities(mc.replications);
  parallel_reps(mc.replications, [&](int r) {
    const Deployment dep = sample_deployment(
        params, mc.window, derive_seed(mc.root_seed, static_cast<std::uint64_t>(r)), opts);
    densities[static_cast<std::size_t>(r)] = empirical_density(dep.active_lwpa);
  });
  const MeanSd ms = mean_sd(densities);
  const double z = normal_quantile(0.5 + 0.5 * mc.confidence_level);
  return {ms.mean, z * ms.sd / std::sqrt(static_cast<double>(mc.replications)),
          mc.replications};
}

std::vector<double> simulate_link_sinr(const std::vector<Point>& interferers,
                                       const Point& user, double link_dist,
                                       double tx_power, const NetworkParams& params,
                                       const Window& window, int fading_draws,
                                       Rng& rng) {
  const std::size_t n = interferers.size();
  std::vector<double> xs(n), ys(n), d2(n), w(n), h(n);
  for (std::size_t j = 0; j < n; ++j) {
    xs[j] = interferers[j].x;
    ys[j] = interferers[j].y;
  }
  kernels::toroidal_sq_dist(xs.data(), ys.data(), n, user.x, user.y,
                            window.width, window.height, d2.data());
  const double half_alpha = 0.5 * params.alpha;
  for (std::size_t j = 0; j < n; ++j) w[j] = std::pow(d2[j], -half_alpha);
  const double signal_gain = std::pow(link_dist, -params.alpha);
  const double noise = params.sigma2 / tx_power;
  std::vector<double> sinr(static_cast<std::size_t>(fading_draws));
  for (int k = 0; k < fading_draws; ++k) {
    for (std::size_t j = 0; j < n; ++j) h[j] = exp_draw(rng);
    const double interference = kernels::dot(h.data(), w.data(), n);
    const double h0 = exp_draw(rng);
    sinr[static_cast<std::size_t>(k)] = h0 * signal_gain / (interference + noise);
  }
  return sinr;
}

namespace {

struct RepCurve {
  bool used = false;
  std::vector<double> success;     // per-threshold fraction
  std::vector<double> sinr;        // raw draws
};

LinkSuccessEstimate aggregate_curves(const std::vector<double>& thresholds,
                                     std::vector<RepCurve>& reps,
                                     double confidence, int draws) {
  LinkSuccessEstimate out;
  out.curve.thresholds = thresholds;
  out.curve.source = SuccessCurve::Source::montecarlo;
  const std::size_t nt = thresholds.size();
  std::vector<std::vector<double>> per_t(nt);
  long used = 0;
  for (RepCurve& rc : reps) {
    if (!rc.used) continue;
    ++used;
    for (std::size_t t = 0; t < nt; ++t) per_t[t].push_back(rc.success[t]);
    out.sinr_samples.insert(out.sinr_samples.end(), rc.sinr.begin(), rc.sinr.end());
  }
  if (used == 0)
    throw StatisticalError("no usable realization (no typical link materialized)");
  const double z = normal_quantile(0.5 + 0.5 * confidence);
  out.curve.values.resize(nt);
  out.curve.ci_halfwidth.resize(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    const MeanSd ms = mean_sd(per_t[t]);
    out.curve.values[t] = ms.mean;
    out.curve.ci_halfwidth[t] = z * ms.sd / std::sqrt(static_cast<double>(used));
  }
  (void)draws;
  return out;
}

std::vector<double> success_fractions(const std::vector<double>& sinr,
                                      const std::vector<double>& thresholds) {
  std::vector<double> frac(thresholds.size(), 0.0);
  for (double s : sinr)
    for (std::size_t t = 0; t < thresholds.size(); ++t)
      if (s > thresholds[t]) frac[t] += 1.0;
  for (double& f : frac) f /= static_cast<double>(sinr.size());
  return frac;
}

Point wrap_into(const Window& w, double x, double y) {
  x = std::fmod(x, w.width);
  if (x < 0.0) x += w.width;
  y = std::fmod(y, w.height);
  if (y < 0.0) y += w.height;
  return {x, y};
}

}  // namespace

LinkSuccessEstimate estimate_wifi_success(const std::vector<double>& thresholds,
                                          const NetworkParams& params,
                                          const McConfig& mc,
                                          const ActivationOptions& opts) {
  params.validate();
  mc.validate(params);
  std::vector<RepCurve> reps(static_cast<std::size_t>(mc.replications));
  parallel_reps(mc.replications, [&](int r) {
    const RngSeed rep_seed = derive_seed(mc.root_seed, static_cast<std::uint64_t>(r));
    const Deployment dep = sample_deployment(params, mc.window, rep_seed, opts);
    if (dep.active_lwpa.empty()) return;
    Rng rng = make_rng(derive_seed(rep_seed, 201));
    std::uniform_int_distribution<std::size_t> pick(0, dep.active_lwpa.size() - 1);
    const std::size_t chosen = pick(rng);
    const Point ap = dep.active_lwpa.points[chosen];
    // typical user uniform in the service disk; the toroidal metric makes
    // explicit re-centering of the AP a no-op
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double link_dist = params.R_serve * std::sqrt(1.0 - u01(rng));
    const double phi = 2.0 * std::numbers::pi * u01(rng);
    const Point user = wrap_into(mc.window, ap.x + link_dist * std::cos(phi),
                                 ap.y + link_dist * std::sin(phi));
    std::vector<Point> interferers;
    interferers.reserve(dep.active_lwpa.size() - 1 + dep.active_closed.size());
    for (std::size_t j = 0; j < dep.active_lwpa.size(); ++j)
      if (j != chosen) interferers.push_back(dep.active_lwpa.points[j]);
    interferers.insert(interferers.end(), dep.active_closed.points.begin(),
                       dep.active_closed.points.end());
    RepCurve& rc = reps[static_cast<std::size_t>(r)];
    rc.sinr = simulate_link_sinr(interferers, user, link_dist, params.P_W, params,
                                 mc.window, mc.fading_draws_per_geometry, rng);
    rc.success = success_fractions(rc.sinr, thresholds);
    rc.used = true;
  });
  return aggregate_curves(thresholds, reps, mc.confidence_level,
                          mc.fading_draws_per_geometry);
}

LinkSuccessEstimate estimate_lte_success(const std::vector<double>& thresholds,
                                         const NetworkParams& params,
                                         const McConfig& mc) {
  params.validate();
  mc.validate(params);
  if (!(params.lambda_L > 0.0))
    throw std::invalid_argument("estimate_lte_success: lambda_L must be positive");
  std::vector<RepCurve> reps(static_cast<std::size_t>(mc.replications));
  parallel_reps(mc.replications, [&](int r) {
    const RngSeed rep_seed = derive_seed(mc.root_seed, static_cast<std::uint64_t>(r));
    PointPattern bs;
    for (std::uint64_t k = 0; bs.empty(); ++k)
      bs = sample_ppp(params.lambda_L, mc.window, derive_seed(rep_seed, 301 + k));
    const Point user{0.5 * mc.window.width, 0.5 * mc.window.height};
    std::size_t serving = 0;
    double best = toroidal_sq_distance(user, bs.points[0], mc.window);
    for (std::size_t j = 1; j < bs.size(); ++j) {
      const double d2 = toroidal_sq_distance(user, bs.points[j], mc.window);
      if (d2 < best) {
        best = d2;
        serving = j;
      }
    }
    std::vector<Point> interferers;
    interferers.reserve(bs.size() - 1);
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (j != serving) interferers.push_back(bs.points[j]);
    Rng rng = make_rng(derive_seed(rep_seed, 399));
    RepCurve& rc = reps[static_cast<std::size_t>(r)];
    rc.sinr = simulate_link_sinr(interferers, user, std::sqrt(best), params.P_L,
                                 params, mc.window, mc.fading_draws_per_geometry, rng);
    rc.success = success_fractions(rc.sinr, thresholds);
    rc.used = true;
  });
  return aggregate_curves(thresholds, reps, mc.confidence_level,
                          mc.fading_draws_per_geometry);
}

McEstimate estimate_rate(const std::vector<double>& sinr_samples,
                         double confidence_level) {
  if (sinr_samples.empty())
    throw StatisticalError("estimate_rate: no SINR samples");
  std::vector<double> rates(sinr_samples.size());
  for (std::size_t i = 0; i < sinr_samples.size(); ++i)
    rates[i] = std::log2(1.0 + sinr_samples[i]);
  const MeanSd ms = mean_sd(rates);
  const double z = normal_quantile(0.5 + 0.5 * confidence_level);
  return {ms.mean, z * ms.sd / std::sqrt(static_cast<double>(rates.size())),
          static_cast<long>(rates.size())};
}

double empirical_success_rate_integral(std::vector<double> sinr_samples) {
  if (sinr_samples.empty())
    throw StatisticalError("empirical_success_rate_integral: no samples");
  std::sort(sinr_samples.begin(), sinr_samples.end());
  const double n = static_cast<double>(sinr_samples.size());
  // piecewise-exact integral of the empirical survival function S(theta)
  // against 1/(1+theta): on [x_(k), x_(k+1)) the curve is flat at (n-k)/n
  double total = 0.0;
  double prev = 0.0;
  for (std::size_t k = 0; k < sinr_samples.size(); ++k) {
    const double x = sinr_samples[k];
    const double level = (n - static_cast<double>(k)) / n;
    total += level * (std::log1p(x) - std::log1p(prev));
    prev = x;
  }
  return total;  // nats
}

McEstimate estimate_ase_improvement(const NetworkParams& params,
                                    const McConfig& mc,
                                    const ActivationOptions& opts) {
  params.validate();
  mc.validate(params);
  if (!(params.p_closed > 0.0))
    throw std::domain_error("estimate_ase_improvement: p_closed must be positive");
  struct RepPair {
    double full = 0.0;
    double base = 0.0;
  };
  std::vector<RepPair> pairs(static_cast<std::size_t>(mc.replications));
  auto arm_ase = [&](const Deployment& dep, bool with_lwpa, RngSeed typical_seed) {
    PointPattern active;
    active.window = dep.active_closed.window;
    if (with_lwpa)
      active.points.insert(active.points.end(), dep.active_lwpa.points.begin(),
                           dep.active_lwpa.points.end());
    active.points.insert(active.points.end(), dep.active_closed.points.begin(),
                         dep.active_closed.points.end());
    if (active.empty()) return 0.0;
    Rng rng = make_rng(typical_seed);
    std::uniform_int_distribution<std::size_t> pick(0, active.size() - 1);
    const std::size_t chosen = pick(rng);
    const Point ap = active.points[chosen];
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double link_dist = params.R_serve * std::sqrt(1.0 - u01(rng));
    const double phi = 2.0 * std::numbers::pi * u01(rng);
    const Point user = wrap_into(mc.window, ap.x + link_dist * std::cos(phi),
                                 ap.y + link_dist * std::sin(phi));
    std::vector<Point> interferers;
    interferers.reserve(active.size() - 1);
    for (std::size_t j = 0; j < active.size(); ++j)
      if (j != chosen) interferers.push_back(active.points[j]);
    const std::vector<double> sinr =
        simulate_link_sinr(interferers, user, link_dist, params.P_W, params,
                           mc.window, mc.fading_draws_per_geometry, rng);
    double mean_ln = 0.0;
    for (double s : sinr) mean_ln += std::log1p(s);
    mean_ln /= static_cast<double>(sinr.size());
    return empirical_density(active) * mean_ln;
  };
  parallel_reps(mc.replications, [&](int r) {
    const RngSeed rep_seed = derive_seed(mc.root_seed, static_cast<std::uint64_t>(r));
    const RngSeed typical_seed = derive_seed(rep_seed, 401);
    const Deployment full =
        sample_deployment(params, mc.window, rep_seed, opts, true);
    const Deployment base =
        sample_deployment(params, mc.window, rep_seed, opts, false);
    RepPair& pr = pairs[static_cast<std::size_t>(r)];
    pr.full = arm_ase(full, true, typical_seed);
    pr.base = arm_ase(base, false, typical_seed);
  });
  std::vector<double> fulls(pairs.size()), bases(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    fulls[i] = pairs[i].full;
    bases[i] = pairs[i].base;
  }
  const MeanSd mf = mean_sd(fulls);
  const MeanSd mb = mean_sd(bases);
  if (!(mb.mean > 0.0))
    throw StatisticalError("estimate_ase_improvement: baseline ASE estimate is zero");
  const double ratio = mf.mean / mb.mean;
  double cov = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    cov += (fulls[i] - mf.mean) * (bases[i] - mb.mean);
  if (pairs.size() > 1) cov /= static_cast<double>(pairs.size() - 1);
  const double nrep = static_cast<double>(pairs.size());
  double var = (mf.sd * mf.sd + ratio * ratio * mb.sd * mb.sd -
                2.0 * ratio * cov) /
               (nrep * mb.mean * mb.mean);
  if (var < 0.0) var = 0.0;
  const double z = normal_quantile(0.5 + 0.5 * mc.confidence_level);
  return {ratio, z * std::sqrt(var), static_cast<long>(pairs.size())};
}

}  // namespace lwpa
