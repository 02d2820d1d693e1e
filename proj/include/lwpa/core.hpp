#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lwpa {

// All internal quantities are SI: meters, points/m^2, watts, Hz.
// dBm and /km^2 are accepted only at the CLI/config boundary.

inline double dbm_to_watts(double value_dbm) {
  return std::pow(10.0, value_dbm / 10.0) / 1000.0;
}

inline double watts_to_dbm(double watts) {
  return 10.0 * std::log10(watts * 1000.0);
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline constexpr double per_km2_to_per_m2(double d) { return d * 1e-6; }
inline constexpr double per_m2_to_per_km2(double d) { return d * 1e6; }

struct Window {
  double width = 0.0;   // m
  double height = 0.0;  // m

  Window() = default;
  Window(double w, double h) : width(w), height(h) {
    if (!(w > 0.0) || !(h > 0.0))
      throw std::invalid_argument("Window: width and height must be positive");
  }
  double area() const { return width * height; }
  double min_side() const { return width < height ? width : height; }
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct PointPattern {
  std::vector<Point> points;
  Window window;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// count / area estimator
inline double empirical_density(const PointPattern& p) {
  return static_cast<double>(p.points.size()) / p.window.area();
}

struct NetworkParams {
  double lambda_L = 0.0;  // LTE BS density, /m^2
  double lambda_W = 0.0;  // total WiFi AP density, /m^2
  double p_closed = 0.0;  // fraction of closed-access APs
  double xi_u = 0.0;      // user density, /m^2
  double R_serve = 0.0;   // WiFi service range, m
  double delta = 0.0;     // CSMA guard-zone radius, m
  double alpha = 4.0;     // pathloss exponent
  double P_L = 0.0;       // LTE tx power, W
  double P_W = 0.0;       // WiFi tx power, W
  double sigma2 = 0.0;    // noise power, W
  double B_c = 0.0;       // cellular bandwidth, Hz
  double B_w = 0.0;       // WiFi bandwidth, Hz

  std::vector<std::string> validation_errors() const {
    std::vector<std::string> errors;
    auto nonneg = [&errors](double v, const char* name) {
      if (!(v >= 0.0)) errors.push_back(std::string(name) + " must be >= 0");
    };
    nonneg(lambda_L, "lambda_L");
    nonneg(lambda_W, "lambda_W");
    nonneg(xi_u, "xi_u");
    nonneg(R_serve, "R_serve");
    nonneg(delta, "delta");
    nonneg(P_L, "P_L");
    nonneg(P_W, "P_W");
    nonneg(sigma2, "sigma2");
    nonneg(B_c, "B_c");
    nonneg(B_w, "B_w");
    if (!(alpha > 2.0)) errors.push_back("alpha must exceed 2");
    if (!(p_closed >= 0.0 && p_closed <= 1.0))
      errors.push_back("p_closed must lie in [0,1]");
    return errors;
  }

  void validate() const {
    const std::vector<std::string> errors = validation_errors();
    if (!errors.empty()) throw std::invalid_argument(errors.front());
  }
};

// Reference parameter set shared by all figure presets. p_closed and xi_u
// are swept in every figure, so they stay explicit arguments.
inline NetworkParams reference_default_params(double p_closed, double xi_u) {
  NetworkParams p;
  p.lambda_L = per_km2_to_per_m2(100.0);
  p.lambda_W = per_km2_to_per_m2(200.0);
  p.p_closed = p_closed;
  p.xi_u = xi_u;
  p.R_serve = 30.0;
  p.delta = 50.0;
  p.alpha = 4.0;
  p.P_L = dbm_to_watts(22.0);
  p.P_W = dbm_to_watts(18.0);
  p.sigma2 = dbm_to_watts(-95.0);
  p.B_c = 1e7;
  p.B_w = 1e7;
  p.validate();
  return p;
}

}  // namespace lwpa
