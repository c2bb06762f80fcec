#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "pinwheel/errors.hpp"

namespace pinwheel {

struct PlanarPoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

// Orientation angles live on [0, pi): the architecture is polarity
// invariant, so theta and theta + pi label the same element.
inline double normalize_orientation(double theta) {
  const double pi = std::numbers::pi;
  double t = std::fmod(theta, pi);
  if (t < 0.0) t += pi;
  if (t >= pi) t = 0.0;  // fmod round-off can land exactly on pi
  return t;
}

// Group element (q1, q2, theta); acts on the plane by x -> r_{2 theta} x + q.
struct GroupElement {
  double q1 = 0.0;
  double q2 = 0.0;
  double theta = 0.0;
};

inline GroupElement make_element(double q1, double q2, double theta) {
  return GroupElement{q1, q2, normalize_orientation(theta)};
}

inline GroupElement identity_element() { return GroupElement{}; }

inline PlanarPoint act(const GroupElement& g, const PlanarPoint& x) {
  const double c = std::cos(2.0 * g.theta);
  const double s = std::sin(2.0 * g.theta);
  return PlanarPoint{c * x.x1 - s * x.x2 + g.q1, s * x.x1 + c * x.x2 + g.q2};
}

// Group law chosen so that act(compose(g1,g2), x) == act(g1, act(g2, x)).
inline GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  const PlanarPoint q = act(g1, PlanarPoint{g2.q1, g2.q2});
  return make_element(q.x1, q.x2, g1.theta + g2.theta);
}

inline GroupElement inverse(const GroupElement& g) {
  const double c = std::cos(2.0 * g.theta);
  const double s = std::sin(2.0 * g.theta);
  // r_{-2 theta} applied to -q
  return make_element(-(c * g.q1 + s * g.q2), -(-s * g.q1 + c * g.q2), -g.theta);
}

// Closed-form integral curve of X1 + k X2 through the origin:
//   gamma'(s) = (1 + k x2, -k x1), gamma(0) = 0.
// For k != 0 the curve is the circle of radius 1/|k| centered at (0, -1/k).
// The x2 component uses -2 sin^2(ks/2)/k == (cos(ks) - 1)/k to avoid
// cancellation for small |ks|.
inline PlanarPoint integral_curve_analytic(double k, double s) {
  if (k == 0.0) return PlanarPoint{s, 0.0};
  const double half = 0.5 * k * s;
  const double sh = std::sin(half);
  return PlanarPoint{std::sin(k * s) / k, -2.0 * sh * sh / k};
}

struct IntegralCurveParams {
  double k = 0.0;
  double s_max = std::numbers::pi / 2.0;
  int n_steps = 200;
};

// Fixed-step classical RK4 on the (smooth, non-stiff) curve ODE.
// Returns n_steps + 1 points starting at the origin.
inline std::vector<PlanarPoint> integral_curve_numeric(const IntegralCurveParams& p) {
  if (p.n_steps < 2) throw ConfigError("integral_curve_numeric: n_steps must be >= 2");
  if (!(p.s_max > 0.0)) throw ConfigError("integral_curve_numeric: s_max must be > 0");
  const auto rhs = [k = p.k](const PlanarPoint& x) {
    return PlanarPoint{1.0 + k * x.x2, -k * x.x1};
  };
  const double h = p.s_max / static_cast<double>(p.n_steps);
  std::vector<PlanarPoint> pts;
  pts.reserve(static_cast<std::size_t>(p.n_steps) + 1);
  PlanarPoint x{0.0, 0.0};
  pts.push_back(x);
  for (int i = 0; i < p.n_steps; ++i) {
    const PlanarPoint k1 = rhs(x);
    const PlanarPoint k2 = rhs({x.x1 + 0.5 * h * k1.x1, x.x2 + 0.5 * h * k1.x2});
    const PlanarPoint k3 = rhs({x.x1 + 0.5 * h * k2.x1, x.x2 + 0.5 * h * k2.x2});
    const PlanarPoint k4 = rhs({x.x1 + h * k3.x1, x.x2 + h * k3.x2});
    x.x1 += h / 6.0 * (k1.x1 + 2.0 * k2.x1 + 2.0 * k3.x1 + k4.x1);
    x.x2 += h / 6.0 * (k1.x2 + 2.0 * k2.x2 + 2.0 * k3.x2 + k4.x2);
    pts.push_back(x);
  }
  return pts;
}

// The association-field fan: local-coordinate curves for each k, mapped
// through the group action so the fan emanates from (q1, q2) with base
// direction set by theta.
inline std::vector<std::vector<PlanarPoint>> association_fan(const std::vector<double>& k_values,
                                                             const GroupElement& g, double s_max,
                                                             int n_steps) {
  if (k_values.empty()) throw ConfigError("association_fan: empty k list");
  std::vector<std::vector<PlanarPoint>> fan;
  fan.reserve(k_values.size());
  for (const double k : k_values) {
    auto curve = integral_curve_numeric(IntegralCurveParams{k, s_max, n_steps});
    for (auto& pt : curve) pt = act(g, pt);
    fan.push_back(std::move(curve));
  }
  return fan;
}

// Fig-style default: nine curvatures, symmetric about straight-ahead.
inline std::vector<double> default_fan_curvatures() {
  return {-1.0, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0};
}

}  // namespace pinwheel
