#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>

#include "pinwheel/circle.hpp"
#include "pinwheel/errors.hpp"

namespace pinwheel {

// Fourier-circle realizations of the left-invariant fields (all self-adjoint
// with respect to inner()):
//   X1hat = -Omega sin(2 phi) .       (multiplication)
//   X2hat = i d/dphi                  (spectral, mode e^{2ik phi} -> -2k)
//   X3hat = (i/2)[X2hat, X1hat] = Omega cos(2 phi) .
struct OperatorContext {
  double omega = 1.0;
};

inline void check_ctx(const OperatorContext& ctx) {
  if (!(ctx.omega > 0.0)) throw ConfigError("OperatorContext: omega must be > 0");
}

inline CircleFunction apply_x1(const OperatorContext& ctx, const CircleFunction& f) {
  check_ctx(ctx);
  const auto phi = circle_nodes(f.size());
  CircleFunction out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    out.v[j] = -ctx.omega * std::sin(2.0 * phi[j]) * f.v[j];
  return out;
}

// Spectral derivative; exact on band-limited input. Requires even M so the
// mode ladder k = -M/2 .. M/2-1 is symmetric.
inline CircleFunction apply_x2(const CircleFunction& f) {
  if (f.size() % 2 != 0) throw ConfigError("apply_x2: sample count must be even");
  assert(top_mode_energy_fraction(f) < 1e-8 && "apply_x2: input not resolved on this grid");
  auto c = circle_modes(f);
  const std::size_t m = c.size();
  for (std::size_t bin = 0; bin < m; ++bin)
    c[bin] *= -2.0 * static_cast<double>(mode_number(bin, m));
  return circle_from_modes(std::move(c));
}

inline CircleFunction apply_x3(const OperatorContext& ctx, const CircleFunction& f) {
  check_ctx(ctx);
  const auto phi = circle_nodes(f.size());
  CircleFunction out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    out.v[j] = ctx.omega * std::cos(2.0 * phi[j]) * f.v[j];
  return out;
}

// (i/2)(X2hat X1hat - X1hat X2hat) f, by operator composition. Agrees with
// apply_x3 on band-limited input; kept separate so tests can compare them.
inline CircleFunction commutator_x3(const OperatorContext& ctx, const CircleFunction& f) {
  const CircleFunction a = apply_x2(apply_x1(ctx, f));
  const CircleFunction b = apply_x1(ctx, apply_x2(f));
  CircleFunction out(f.size());
  const cplx half_i(0.0, 0.5);
  for (std::size_t j = 0; j < f.size(); ++j) out.v[j] = half_i * (a.v[j] - b.v[j]);
  return out;
}

enum class Generator { X1, X2, X3 };

inline CircleFunction apply_generator(Generator op, const OperatorContext& ctx,
                                      const CircleFunction& f) {
  switch (op) {
    case Generator::X1:
      return apply_x1(ctx, f);
    case Generator::X2:
      return apply_x2(f);
    default:
      return apply_x3(ctx, f);
  }
}

namespace detail {

inline double norm_squared(const CircleFunction& f) { return std::abs(inner(f, f)); }

inline void require_state(const CircleFunction& f) {
  if (f.size() == 0 || !(norm_squared(f) > 0.0))
    throw ConfigError("expectation: zero-norm state");
}

}  // namespace detail

// <f, Op f> / <f, f>. The operators are self-adjoint, so the quotient is
// real; a non-negligible imaginary part means the operator code is broken.
inline double expectation(Generator op, const OperatorContext& ctx, const CircleFunction& f) {
  detail::require_state(f);
  const CircleFunction g = apply_generator(op, ctx, f);
  const cplx num = inner(f, g);
  const double nf2 = detail::norm_squared(f);
  const double scale = std::sqrt(nf2) * std::sqrt(detail::norm_squared(g)) + 1e-300;
  if (std::abs(num.imag()) > 1e-9 * scale)
    throw NumericError("expectation: non-real value for a self-adjoint operator");
  return num.real() / nf2;
}

// sqrt(<Op^2> - <Op>^2). <Op^2> is computed as ||Op f||^2 / ||f||^2, which
// keeps the variance nonnegative up to round-off by construction.
inline double std_dev(Generator op, const OperatorContext& ctx, const CircleFunction& f) {
  detail::require_state(f);
  const CircleFunction g = apply_generator(op, ctx, f);
  const double nf2 = detail::norm_squared(f);
  const double mean_sq = detail::norm_squared(g) / nf2;
  const cplx num = inner(f, g);
  const double scale = std::sqrt(nf2 * detail::norm_squared(g)) + 1e-300;
  if (std::abs(num.imag()) > 1e-9 * scale)
    throw NumericError("std_dev: non-real expectation for a self-adjoint operator");
  const double mean = num.real() / nf2;
  double var = mean_sq - mean * mean;
  if (var < 0.0) {
    if (var < -1e-12)
      throw NumericError("std_dev: negative variance " + std::to_string(var));
    var = 0.0;  // round-off
  }
  return std::sqrt(var);
}

// Delta X1 * Delta X2 - |<X3>|. Nonnegative for every state (the uncertainty
// principle, with the sharp constant: coherent states reach exactly zero).
inline double uncertainty_gap(const OperatorContext& ctx, const CircleFunction& f) {
  const double d1 = std_dev(Generator::X1, ctx, f);
  const double d2 = std_dev(Generator::X2, ctx, f);
  const double x3 = expectation(Generator::X3, ctx, f);
  return d1 * d2 - std::abs(x3);
}

}  // namespace pinwheel
