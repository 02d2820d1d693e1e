#include "lwpa/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace lwpa {

const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::xi_u: return "xi_u";
    case SweepParameter::delta: return "delta";
    case SweepParameter::p_closed: return "p_closed";
    case SweepParameter::theta: return "theta";
  }
  return "?";
}

const char* to_string(Metric m) {
  switch (m) {
    case Metric::lwpa_density: return "lwpa_density";
    case Metric::wifi_success: return "wifi_success";
    case Metric::lte_success: return "lte_success";
    case Metric::rate_improvement: return "rate_improvement";
    case Metric::ase_improvement: return "ase_improvement";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

enum class Quantity { density, length, power, bandwidth, plain, sinr };

// returns multiplicative factor, or applies dBm/dB transforms
bool convert_unit(Quantity q, const std::string& unit, double raw, double& out,
                  std::string& err) {
  if (unit.empty()) {
    out = raw;
    return true;
  }
  switch (q) {
    case Quantity::density:
      if (unit == "per_km2") { out = per_km2_to_per_m2(raw); return true; }
      if (unit == "per_m2") { out = raw; return true; }
      break;
    case Quantity::length:
      if (unit == "m") { out = raw; return true; }
      if (unit == "km") { out = raw * 1000.0; return true; }
      break;
    case Quantity::power:
      if (unit == "dBm") { out = dbm_to_watts(raw); return true; }
      if (unit == "W") { out = raw; return true; }
      if (unit == "mW") { out = raw * 1e-3; return true; }
      break;
    case Quantity::bandwidth:
      if (unit == "Hz") { out = raw; return true; }
      if (unit == "kHz") { out = raw * 1e3; return true; }
      if (unit == "MHz") { out = raw * 1e6; return true; }
      if (unit == "GHz") { out = raw * 1e9; return true; }
      break;
    case Quantity::sinr:
      if (unit == "dB") { out = db_to_linear(raw); return true; }
      break;
    case Quantity::plain:
      break;
  }
  err = "unknown unit '" + unit + "'";
  return false;
}

struct Parser {
  std::map<std::string, std::string> kv;
  std::vector<std::string> errors;

  void fail(const std::string& key, const std::string& msg) {
    errors.push_back(key + ": " + msg);
  }

  bool has(const std::string& key) const { return kv.count(key) > 0; }

  // "value [unit]" -> canonical double
  bool scalar(const std::string& key, Quantity q, double& out) {
    auto it = kv.find(key);
    if (it == kv.end()) return false;
    std::istringstream iss(it->second);
    double raw;
    std::string unit;
    if (!(iss >> raw)) {
      fail(key, "expected a number, got '" + it->second + "'");
      return false;
    }
    iss >> unit;
    std::string err;
    if (!convert_unit(q, unit, raw, out, err)) {
      fail(key, err);
      return false;
    }
    return true;
  }

  bool boolean(const std::string& key, bool& out) {
    auto it = kv.find(key);
    if (it == kv.end()) return false;
    const std::string v = it->second;
    if (v == "true" || v == "1") { out = true; return true; }
    if (v == "false" || v == "0") { out = false; return true; }
    fail(key, "expected true/false");
    return false;
  }

  // comma list and/or "start:stop:step" ranges, with one trailing unit token
  bool value_list(const std::string& key, Quantity q, std::vector<double>& out) {
    auto it = kv.find(key);
    if (it == kv.end()) return false;
    std::string body = it->second;
    std::string unit;
    const auto sp = body.find_last_of(" \t");
    if (sp != std::string::npos) {
      const std::string tail = trim(body.substr(sp));
      if (!tail.empty() && !std::isdigit(static_cast<unsigned char>(tail[0])) &&
          tail[0] != '-' && tail[0] != '.') {
        unit = tail;
        body = body.substr(0, sp);
      }
    }
    std::vector<double> raw;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      if (tok.empty()) continue;
      const auto c1 = tok.find(':');
      if (c1 != std::string::npos) {
        const auto c2 = tok.find(':', c1 + 1);
        if (c2 == std::string::npos) {
          fail(key, "range must be start:stop:step");
          return false;
        }
        try {
          const double a = std::stod(tok.substr(0, c1));
          const double b = std::stod(tok.substr(c1 + 1, c2 - c1 - 1));
          const double st = std::stod(tok.substr(c2 + 1));
          if (!(st > 0.0)) {
            fail(key, "range step must be positive");
            return false;
          }
          for (double v = a; v <= b + 1e-9 * st; v += st) raw.push_back(v);
        } catch (const std::exception&) {
          fail(key, "malformed range '" + tok + "'");
          return false;
        }
      } else {
        try {
          raw.push_back(std::stod(tok));
        } catch (const std::exception&) {
          fail(key, "malformed number '" + tok + "'");
          return false;
        }
      }
    }
    out.clear();
    for (double r : raw) {
      double v;
      std::string err;
      if (!convert_unit(q, unit, r, v, err)) {
        fail(key, err);
        return false;
      }
      out.push_back(v);
    }
    return true;
  }
};

}  // namespace

ValidatedConfig validate_config(const std::string& text) {
  Parser p;
  {
    std::istringstream iss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(iss, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        p.errors.push_back("line " + std::to_string(lineno) +
                           ": expected 'key = value'");
        continue;
      }
      p.kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
  }

  ValidatedConfig cfg;
  cfg.params = reference_default_params(0.5, per_km2_to_per_m2(400.0));

  p.scalar("lambda_L", Quantity::density, cfg.params.lambda_L);
  p.scalar("lambda_W", Quantity::density, cfg.params.lambda_W);
  p.scalar("xi_u", Quantity::density, cfg.params.xi_u);
  p.scalar("p_closed", Quantity::plain, cfg.params.p_closed);
  p.scalar("R_serve", Quantity::length, cfg.params.R_serve);
  p.scalar("delta", Quantity::length, cfg.params.delta);
  p.scalar("alpha", Quantity::plain, cfg.params.alpha);
  p.scalar("P_L", Quantity::power, cfg.params.P_L);
  p.scalar("P_W", Quantity::power, cfg.params.P_W);
  p.scalar("sigma2", Quantity::power, cfg.params.sigma2);
  p.scalar("B_c", Quantity::bandwidth, cfg.params.B_c);
  p.scalar("B_w", Quantity::bandwidth, cfg.params.B_w);

  double side;
  if (p.scalar("mc.window", Quantity::length, side)) {
    if (side > 0.0)
      cfg.mc.window = Window(side, side);
    else
      p.fail("mc.window", "must be positive");
  }
  double tmp;
  if (p.scalar("mc.replications", Quantity::plain, tmp)) {
    if (tmp >= 1.0)
      cfg.mc.replications = static_cast<int>(tmp);
    else
      p.fail("mc.replications", "must be >= 1");
  }
  if (p.scalar("mc.fading_draws", Quantity::plain, tmp)) {
    if (tmp >= 1.0)
      cfg.mc.fading_draws_per_geometry = static_cast<int>(tmp);
    else
      p.fail("mc.fading_draws", "must be >= 1");
  }
  if (p.scalar("mc.confidence", Quantity::plain, tmp)) {
    if (tmp > 0.0 && tmp < 1.0)
      cfg.mc.confidence_level = tmp;
    else
      p.fail("mc.confidence", "must lie in (0,1)");
  }
  if (p.scalar("mc.seed", Quantity::plain, tmp))
    cfg.mc.root_seed = RngSeed{static_cast<std::uint64_t>(tmp)};

  p.boolean("option.condition3_all_closed",
            cfg.options.activation.holes_around_all_closed);
  p.boolean("option.ase_baseline_literal",
            cfg.options.ase.literal_baseline_density);

  // sweep block (optional)
  const bool any_sweep = p.has("sweep.parameter") || p.has("sweep.values") ||
                         p.has("sweep.metric");
  if (any_sweep) {
    SweepSpec spec;
    std::string param_name = "xi_u";
    if (auto it = p.kv.find("sweep.parameter"); it != p.kv.end())
      param_name = it->second;
    Quantity vq = Quantity::plain;
    if (param_name == "xi_u") {
      spec.parameter = SweepParameter::xi_u;
      vq = Quantity::density;
    } else if (param_name == "delta") {
      spec.parameter = SweepParameter::delta;
      vq = Quantity::length;
    } else if (param_name == "p_closed") {
      spec.parameter = SweepParameter::p_closed;
    } else if (param_name == "theta") {
      spec.parameter = SweepParameter::theta;
      vq = Quantity::sinr;
    } else {
      p.fail("sweep.parameter", "unknown parameter '" + param_name + "'");
    }
    if (!p.value_list("sweep.values", vq, spec.values) && spec.values.empty())
      p.fail("sweep.values", "required for a sweep");
    if (p.has("sweep.p_set")) {
      if (p.value_list("sweep.p_set", Quantity::plain, spec.p_set) &&
          spec.p_set.empty())
        p.fail("sweep.p_set", "must be non-empty");
    }
    if (auto it = p.kv.find("sweep.metric"); it != p.kv.end()) {
      const std::string& m = it->second;
      if (m == "lwpa_density") spec.metric = Metric::lwpa_density;
      else if (m == "wifi_success") spec.metric = Metric::wifi_success;
      else if (m == "lte_success") spec.metric = Metric::lte_success;
      else if (m == "rate_improvement") spec.metric = Metric::rate_improvement;
      else if (m == "ase_improvement") spec.metric = Metric::ase_improvement;
      else p.fail("sweep.metric", "unknown metric '" + m + "'");
    }
    if (auto it = p.kv.find("sweep.engines"); it != p.kv.end()) {
      spec.engine_analytic = it->second.find("analytic") != std::string::npos;
      spec.engine_montecarlo = it->second.find("montecarlo") != std::string::npos;
      if (!spec.engine_analytic && !spec.engine_montecarlo)
        p.fail("sweep.engines", "need at least one of analytic, montecarlo");
    }
    for (std::size_t i = 0; i + 1 < spec.values.size(); ++i)
      if (!(spec.values[i] < spec.values[i + 1])) {
        p.fail("sweep.values", "must be strictly increasing");
        break;
      }
    if ((spec.metric == Metric::wifi_success || spec.metric == Metric::lte_success) &&
        spec.parameter != SweepParameter::theta)
      p.fail("sweep.metric", "success-probability metrics sweep over theta");
    if (spec.metric == Metric::rate_improvement && spec.engine_montecarlo)
      p.fail("sweep.engines",
             "rate_improvement is analytic-only (no Monte Carlo engine)");
    for (double ps : spec.p_set)
      if (!(ps >= 0.0 && ps <= 1.0)) p.fail("sweep.p_set", "p values must lie in [0,1]");
    cfg.sweep = spec;
  }

  // model invariants, reported with field names
  for (const std::string& e : cfg.params.validation_errors())
    p.errors.push_back(e);
  if (cfg.params.delta > 0.0 && cfg.mc.window.min_side() < 4.0 * cfg.params.delta)
    p.errors.push_back("mc.window: side must be >= 4*delta");

  if (!p.errors.empty()) throw ConfigError(p.errors);
  return cfg;
}

ValidatedConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError({"cannot open config file '" + path + "'"});
  std::ostringstream ss;
  ss << in.rdbuf();
  return validate_config(ss.str());
}

}  // namespace lwpa
