#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <utility>
#include <variant>
#include <vector>

#include "pinwheel/circle.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/operators.hpp"
#include "pinwheel/rng.hpp"
#include "pinwheel/se2.hpp"

namespace pinwheel {

// Local phase alpha(phi) attached to a state as e^{i alpha}.
//
// Zero:         alpha = 0.
// Linear:       alpha = c * phi, taken literally. For non-even-integer c
//               this is NOT pi-periodic, so such states are outside the
//               band-limited regime the spectral operators assume.
// RandomSmooth: real pi-periodic trigonometric polynomial with modes
//               |k| <= cutoff, seeded coefficients, rescaled so that
//               max |alpha| equals `amplitude` (max taken on a dense grid,
//               independent of the sampling M).
struct ZeroPhase {};

struct LinearPhase {
  double c = 0.0;
};

struct RandomSmoothPhase {
  std::uint64_t seed = 7;
  int cutoff = 4;
  double amplitude = std::numbers::pi;
};

using PhaseSpec = std::variant<ZeroPhase, LinearPhase, RandomSmoothPhase>;

namespace detail {

inline double random_phase_unscaled(const RandomSmoothPhase& p, double phi) {
  double a = 0.0;
  for (int k = 1; k <= p.cutoff; ++k) {
    const double ck = draw_symmetric(p.seed, static_cast<std::uint64_t>(2 * k));
    const double sk = draw_symmetric(p.seed, static_cast<std::uint64_t>(2 * k + 1));
    a += ck * std::cos(2.0 * k * phi) + sk * std::sin(2.0 * k * phi);
  }
  return a;
}

inline double random_phase_scale(const RandomSmoothPhase& p) {
  constexpr int dense = 4096;
  double peak = 0.0;
  for (int j = 0; j < dense; ++j) {
    const double phi = std::numbers::pi * j / dense;
    peak = std::max(peak, std::abs(random_phase_unscaled(p, phi)));
  }
  return peak > 0.0 ? p.amplitude / peak : 0.0;
}

}  // namespace detail

inline std::vector<double> phase_samples(const PhaseSpec& spec, const std::vector<double>& phi) {
  std::vector<double> a(phi.size(), 0.0);
  if (std::holds_alternative<LinearPhase>(spec)) {
    const double c = std::get<LinearPhase>(spec).c;
    for (std::size_t j = 0; j < phi.size(); ++j) a[j] = c * phi[j];
  } else if (std::holds_alternative<RandomSmoothPhase>(spec)) {
    const auto& p = std::get<RandomSmoothPhase>(spec);
    if (p.cutoff < 1) throw ConfigError("RandomSmoothPhase: cutoff must be >= 1");
    const double scale = detail::random_phase_scale(p);
    for (std::size_t j = 0; j < phi.size(); ++j)
      a[j] = scale * detail::random_phase_unscaled(p, phi[j]);
  }
  return a;
}

struct CoherentStateParams {
  double omega = 1.0;
  double lambda = 0.5;  // equal-uncertainty point for omega = 1
  double theta = 0.0;
  PhaseSpec phase = ZeroPhase{};
  std::size_t m = 256;
};

namespace detail {

inline void check_state_params(double omega, double lambda, std::size_t m) {
  if (!(omega > 0.0)) throw ConfigError("coherent state: omega must be > 0");
  if (!(lambda > 0.0)) throw ConfigError("coherent state: lambda must be > 0");
  if (m < 8) throw ConfigError("coherent state: m must be >= 8");
  // e^{lambda omega cos} spans e^{+-lambda omega}; past ~300 the unnormalized
  // profile would overflow double range even after peak shifting pairs with
  // the normalization integral.
  if (lambda * omega > 300.0)
    throw ConfigError("coherent state: lambda*omega > 300 overflows the profile");
}

}  // namespace detail

// Displaced minimal-uncertainty state e^{lambda Omega cos(2(phi - theta))}
// e^{i alpha(phi)}, unit L2 norm. The profile is evaluated relative to its
// peak (exponent <= 0) so large lambda*omega cannot overflow.
inline CircleFunction coherent_state(const CoherentStateParams& p) {
  detail::check_state_params(p.omega, p.lambda, p.m);
  const double theta = normalize_orientation(p.theta);
  const auto phi = circle_nodes(p.m);
  const auto alpha = phase_samples(p.phase, phi);
  CircleFunction f(p.m);
  for (std::size_t j = 0; j < p.m; ++j) {
    const double mag = std::exp(p.lambda * p.omega * (std::cos(2.0 * (phi[j] - theta)) - 1.0));
    f.v[j] = mag * cplx(std::cos(alpha[j]), std::sin(alpha[j]));
  }
  return normalized(f);
}

// Eq.-(4) solution before displacement: coherent_state at theta = 0 with no
// phase.
inline CircleFunction ground_state(double omega, double lambda, std::size_t m) {
  return coherent_state(CoherentStateParams{omega, lambda, 0.0, ZeroPhase{}, m});
}

// || X2hat u - 2 i lambda X1hat u || / || u ||: zero exactly when u solves
// the ground-state equation.
inline double eigen_relation_residual(const OperatorContext& ctx, double lambda,
                                      const CircleFunction& u) {
  const CircleFunction lhs = apply_x2(u);
  const CircleFunction rhs = apply_x1(ctx, u);
  CircleFunction res(u.size());
  const cplx factor(0.0, 2.0 * lambda);
  for (std::size_t j = 0; j < u.size(); ++j) res.v[j] = lhs.v[j] - factor * rhs.v[j];
  return norm(res) / norm(u);
}

// pi-periodic circular spread of the angular concentration profile |f|:
// R = |sum |f_j| e^{2i phi_j}| / sum |f_j|, Delta phi = 0.5 sqrt(-2 ln R).
// Matches the narrow-state asymptotic Delta phi ~ 1/(2 sqrt(Omega lambda)).
// R = 0 (uniform) reports +infinity rather than an error.
inline double circular_std(const CircleFunction& f) {
  if (f.size() == 0 || !(norm(f) > 0.0)) throw ConfigError("circular_std: zero-norm state");
  const auto phi = circle_nodes(f.size());
  cplx num(0.0, 0.0);
  double den = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double w = std::abs(f.v[j]);
    num += w * cplx(std::cos(2.0 * phi[j]), std::sin(2.0 * phi[j]));
    den += w;
  }
  const double r = std::abs(num) / den;
  // Resultants at roundoff scale are exact cancellations (the uniform
  // profile sums m equally spaced unit vectors); -ln r would turn that
  // noise into a spurious finite spread.
  if (r <= 1e-14) return std::numeric_limits<double>::infinity();
  return 0.5 * std::sqrt(-2.0 * std::log(std::min(r, 1.0)));
}

// (Delta X1, Delta X2) / sqrt(|<X3>|). The product is >= 1 for every state
// and equals 1 exactly on coherent states.
inline std::pair<double, double> normalized_uncertainty_pair(const OperatorContext& ctx,
                                                             const CircleFunction& f) {
  const double x3 = std::abs(expectation(Generator::X3, ctx, f));
  if (!(x3 > 1e-12))
    throw ConfigError("normalized_uncertainty_pair: |<X3>| vanishes, normalization undefined");
  const double s = std::sqrt(x3);
  return {std_dev(Generator::X1, ctx, f) / s, std_dev(Generator::X2, ctx, f) / s};
}

}  // namespace pinwheel
