#include "lwpa/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lwpa {

namespace {

constexpr const char* kVersion = "lwpa-eval 1.0.0";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

NetworkParams apply_value(NetworkParams p, SweepParameter param, double v) {
  switch (param) {
    case SweepParameter::xi_u: p.xi_u = v; break;
    case SweepParameter::delta: p.delta = v; break;
    case SweepParameter::p_closed: p.p_closed = v; break;
    case SweepParameter::theta: break;  // theta is not a model parameter
  }
  return p;
}

void append_params_header(std::ostringstream& os, const NetworkParams& p,
                          const McConfig& mc, const ModelOptions& opt) {
  os << "# " << kVersion << "\n";
  os << "# params: lambda_L=" << fmt(per_m2_to_per_km2(p.lambda_L))
     << "/km2 lambda_W=" << fmt(per_m2_to_per_km2(p.lambda_W))
     << "/km2 p_closed=" << fmt(p.p_closed)
     << " xi_u=" << fmt(per_m2_to_per_km2(p.xi_u)) << "/km2 R_serve="
     << fmt(p.R_serve) << "m delta=" << fmt(p.delta) << "m alpha="
     << fmt(p.alpha) << " P_L=" << fmt(p.P_L) << "W P_W=" << fmt(p.P_W)
     << "W sigma2=" << fmt(p.sigma2) << "W B_c=" << fmt(p.B_c) << "Hz B_w="
     << fmt(p.B_w) << "Hz\n";
  os << "# mc: replications=" << mc.replications << " window="
     << fmt(mc.window.width) << "x" << fmt(mc.window.height)
     << "m fading_draws=" << mc.fading_draws_per_geometry << " confidence="
     << fmt(mc.confidence_level) << " seed=" << mc.root_seed.value << "\n";
  os << "# options: condition3_all_closed="
     << (opt.activation.holes_around_all_closed ? "true" : "false")
     << " ase_baseline_literal="
     << (opt.ase.literal_baseline_density ? "true" : "false") << "\n";
}

void check_validity(const NetworkParams& cell_params, double value, double p,
                    std::vector<std::string>& warnings) {
  const DensityApproximations d = density_approximations(cell_params);
  if (!d.validity_a)
    warnings.push_back("validity_a violated (lambda_tilde_W2 >= P1*lambda_W1) at value=" +
                       fmt(value) + " p=" + fmt(p));
  if (!d.validity_b)
    warnings.push_back("validity_b violated (lambda_tilde_W2 >= P1*lambda_hat_W1) at value=" +
                       fmt(value) + " p=" + fmt(p));
}

double analytic_metric(Metric metric, SweepParameter param, double value,
                       const NetworkParams& cell_params, const ModelOptions& opt) {
  switch (metric) {
    case Metric::lwpa_density:
      return density_approximations(cell_params).lambda_a3;
    case Metric::wifi_success: {
      const DensityApproximations d = density_approximations(cell_params);
      return wifi_success_probability(value, cell_params,
                                      d.lambda_a3 + d.lambda_tilde_w2);
    }
    case Metric::lte_success:
      return lte_success_probability(value, cell_params);
    case Metric::rate_improvement:
      return cellular_rate_improvement(cell_params);
    case Metric::ase_improvement:
      return ase_improvement(cell_params, opt.ase);
  }
  (void)param;
  throw std::logic_error("unreachable metric");
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, const NetworkParams& params,
                      const McConfig& mc, const ModelOptions& options) {
  if (spec.values.empty())
    throw ConfigError({"sweep.values: must be non-empty"});
  if (spec.p_set.empty())
    throw ConfigError({"sweep.p_set: must be non-empty"});
  SweepResult result;
  result.spec = spec;
  result.base_params = params;
  result.mc = mc;
  result.options = options;

  const bool theta_sweep = spec.parameter == SweepParameter::theta;

  for (double p : spec.p_set) {
    NetworkParams pp = params;
    pp.p_closed = p;

    // Monte Carlo theta sweeps share one simulation across all thresholds.
    std::optional<LinkSuccessEstimate> mc_curve;
    std::string mc_curve_error;
    if (spec.engine_montecarlo && theta_sweep) {
      try {
        if (spec.metric == Metric::wifi_success)
          mc_curve = estimate_wifi_success(spec.values, pp, mc, options.activation);
        else if (spec.metric == Metric::lte_success)
          mc_curve = estimate_lte_success(spec.values, pp, mc);
      } catch (const std::exception& e) {
        mc_curve_error = e.what();
      }
    }

    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
      const double value = spec.values[vi];
      const NetworkParams cell = apply_value(pp, spec.parameter, value);
      check_validity(cell, value, p, result.warnings);

      if (spec.engine_analytic) {
        SweepRow row{value, p, "analytic", 0.0, std::nullopt, ""};
        try {
          row.metric = analytic_metric(spec.metric, spec.parameter, value, cell,
                                       options);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        result.rows.push_back(std::move(row));
      }
      if (spec.engine_montecarlo) {
        SweepRow row{value, p, "montecarlo", 0.0, std::nullopt, ""};
        try {
          switch (spec.metric) {
            case Metric::lwpa_density: {
              const McEstimate est =
                  estimate_lwpa_density(cell, mc, options.activation);
              row.metric = est.mean;
              row.ci_halfwidth = est.ci_halfwidth;
              break;
            }
            case Metric::wifi_success:
            case Metric::lte_success: {
              if (!mc_curve_error.empty()) throw StatisticalError(mc_curve_error);
              row.metric = mc_curve->curve.values[vi];
              row.ci_halfwidth = mc_curve->curve.ci_halfwidth[vi];
              break;
            }
            case Metric::ase_improvement: {
              const McEstimate est =
                  estimate_ase_improvement(cell, mc, options.activation);
              row.metric = est.mean;
              row.ci_halfwidth = est.ci_halfwidth;
              break;
            }
            case Metric::rate_improvement:
              throw ConfigError({"rate_improvement has no Monte Carlo engine"});
          }
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        result.rows.push_back(std::move(row));
      }
    }
  }
  return result;
}

std::string SweepResult::to_csv() const {
  std::ostringstream os;
  append_params_header(os, base_params, mc, options);
  os << "# sweep: parameter=" << to_string(spec.parameter)
     << " metric=" << to_string(spec.metric) << "\n";
  for (const std::string& w : warnings) os << "# warning: " << w << "\n";
  os << to_string(spec.parameter) << ",p,engine," << to_string(spec.metric)
     << ",ci_halfwidth,error\n";
  for (const SweepRow& r : rows) {
    os << fmt(r.value) << ',' << fmt(r.p) << ',' << r.engine << ',';
    if (r.error.empty()) {
      os << fmt(r.metric) << ',';
      if (r.ci_halfwidth) os << fmt(*r.ci_halfwidth);
    } else {
      os << ",";
    }
    os << ',' << r.error << '\n';
  }
  return os.str();
}

namespace {

std::vector<double> linspace_range(double a, double b, double step) {
  std::vector<double> v;
  for (double x = a; x <= b + 1e-9 * step; x += step) v.push_back(x);
  return v;
}

std::string run_fig2(const NetworkParams& base, const McConfig& mc,
                     const ModelOptions& opt, bool with_mc) {
  std::ostringstream os;
  append_params_header(os, base, mc, opt);
  os << "# preset: fig2 (active-LWPA density vs user density; xi_u axis "
        "0-1000/km2 is an artifact choice)\n";
  std::vector<std::string> warnings;
  std::ostringstream body;
  body << "xi_u_per_km2,p,approx_1,approx_2,approx_3";
  if (with_mc) body << ",mc_mean,mc_ci";
  body << '\n';
  for (double p : {0.2, 0.5, 0.8}) {
    for (double xi_km2 = 100.0; xi_km2 <= 1000.0 + 1e-9; xi_km2 += 100.0) {
      NetworkParams cell = base;
      cell.p_closed = p;
      cell.xi_u = per_km2_to_per_m2(xi_km2);
      const DensityApproximations d = density_approximations(cell);
      if (!d.validity_a)
        warnings.push_back("validity_a violated at xi_u=" + fmt(xi_km2) +
                           "/km2 p=" + fmt(p));
      if (!d.validity_b)
        warnings.push_back("validity_b violated at xi_u=" + fmt(xi_km2) +
                           "/km2 p=" + fmt(p));
      body << fmt(xi_km2) << ',' << fmt(p) << ',' << fmt(d.lambda_a1) << ','
           << fmt(d.lambda_a2) << ',' << fmt(d.lambda_a3);
      if (with_mc) {
        const McEstimate est = estimate_lwpa_density(cell, mc, opt.activation);
        body << ',' << fmt(est.mean) << ',' << fmt(est.ci_halfwidth);
      }
      body << '\n';
    }
  }
  for (const std::string& w : warnings) os << "# warning: " << w << "\n";
  os << body.str();
  return os.str();
}

}  // namespace

std::vector<std::string> figure_preset_names() {
  return {"fig2", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

std::string run_figure_preset(const std::string& name,
                              const PresetOverrides& ov) {
  const double xi_default = ov.xi_u.value_or(per_km2_to_per_m2(400.0));
  NetworkParams base = reference_default_params(0.5, xi_default);
  McConfig mc;
  if (ov.replications) mc.replications = *ov.replications;
  if (ov.fading_draws) mc.fading_draws_per_geometry = *ov.fading_draws;
  if (ov.window_side) mc.window = Window(*ov.window_side, *ov.window_side);
  if (ov.seed) mc.root_seed = RngSeed{*ov.seed};
  ModelOptions opt;

  SweepSpec spec;
  spec.p_set = {0.2, 0.5, 0.8};

  if (name == "fig2") return run_fig2(base, mc, opt, !ov.disable_montecarlo);

  if (name == "fig4") {
    spec.parameter = SweepParameter::theta;
    spec.metric = Metric::wifi_success;
    spec.engine_montecarlo = !ov.disable_montecarlo;
    for (double db = -10.0; db <= 20.0 + 1e-9; db += 2.5)
      spec.values.push_back(db_to_linear(db));
  } else if (name == "fig5" || name == "fig7") {
    spec.parameter = SweepParameter::delta;
    spec.metric = name == "fig5" ? Metric::ase_improvement : Metric::rate_improvement;
    spec.values = linspace_range(30.0, 80.0, 5.0);
  } else if (name == "fig6" || name == "fig8") {
    spec.parameter = SweepParameter::xi_u;
    spec.metric = name == "fig6" ? Metric::ase_improvement : Metric::rate_improvement;
    for (double xi : linspace_range(100.0, 1000.0, 100.0))
      spec.values.push_back(per_km2_to_per_m2(xi));
  } else {
    throw ConfigError({"unknown figure preset '" + name + "'"});
  }

  SweepResult result = run_sweep(spec, base, mc, opt);
  std::ostringstream os;
  os << "# preset: " << name << "\n" << result.to_csv();
  return os.str();
}

}  // namespace lwpa
