#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "pinwheel/coherent.hpp"
#include "pinwheel/orientation.hpp"
#include "pinwheel/se2.hpp"
#include "pinwheel/spectrum.hpp"
#include "pinwheel/synthesis.hpp"

namespace pinwheel {

// Seeded band-limited state: doubled-angle modes |k| <= max_mode with
// coefficients uniform in the unit square, counter-indexed so state (seed,
// index) is reproducible in any evaluation order.
inline CircleFunction random_bandlimited_state(std::uint64_t seed, std::uint64_t index,
                                               std::size_t m, int max_mode) {
  if (max_mode < 0 || static_cast<std::size_t>(max_mode) >= m / 2)
    throw ConfigError("random_bandlimited_state: max_mode must be < m/2");
  std::vector<cplx> modes(m, cplx(0.0, 0.0));
  std::uint64_t ctr = index * (2ull * static_cast<std::uint64_t>(max_mode) + 1ull) * 2ull;
  for (int k = -max_mode; k <= max_mode; ++k) {
    const std::size_t bin = k >= 0 ? static_cast<std::size_t>(k)
                                   : m - static_cast<std::size_t>(-k);
    const double re = draw_symmetric(seed, ctr++);
    const double im = draw_symmetric(seed, ctr++);
    modes[bin] = cplx(re, im);
  }
  return circle_from_modes(std::move(modes));
}

// One validation line: pass iff the measured value meets the bound in the
// stated direction.
struct CheckResult {
  std::string name;
  double bound = 0.0;
  double measured = 0.0;
  bool measured_must_exceed = false;  // false: measured <= bound passes
  bool pass = false;
};

inline CheckResult check_at_most(const std::string& name, double measured, double bound) {
  return CheckResult{name, bound, measured, false, measured <= bound};
}

inline CheckResult check_at_least(const std::string& name, double measured, double bound) {
  return CheckResult{name, bound, measured, true, measured >= bound};
}

namespace detail {

// Power series J0(x) = sum (-1)^m (x/2)^{2m} / (m!)^2; good to ~1e-9
// relative for x <= 20 in double (cancellation-limited).
inline double bessel_j0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 200; ++m) {
    term *= -q / (static_cast<double>(m) * static_cast<double>(m));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1.0)) break;
  }
  return sum;
}

// The synthesis quadrature restricted to a ray through the origin:
// u(r)/pi with f == 1, i.e. (1/M) sum_j e^{-i Omega r sin 2phi_j}.
inline double bessel_quadrature(double omega, double r, std::size_t m) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double phi = std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    acc += std::cos(omega * r * std::sin(2.0 * phi));
  }
  return acc / static_cast<double>(m);
}

inline double correlation(const std::vector<double>& a, const std::vector<double>& b) {
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(a.size());
  mb /= static_cast<double>(a.size());
  double num = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - ma) * (b[i] - mb);
    va += (a[i] - ma) * (a[i] - ma);
    vb += (b[i] - mb) * (b[i] - mb);
  }
  return num / std::sqrt(va * vb);
}

}  // namespace detail

struct ValidationConfig {
  double omega = 1.0;
  double lambda = 0.5;
  std::size_t m = 256;
  std::uint64_t seed = 7;
  int n_random_states = 1000;
  int n_orient = 8;
  GridSpec grid{};  // default 256^2, L = 8 pi
  int n_bins = 128;
  double epsilon = 0.15;
  ActivityMode mode = ActivityMode::RealPart;
};

// The full property suite: uncertainty inequality, saturation, commutator,
// curve oracle, limiting fields, Parseval, annulus. Pure computation; the
// CLI renders the report.
inline std::vector<CheckResult> run_validation_suite(const ValidationConfig& cfg) {
  std::vector<CheckResult> report;
  const OperatorContext ctx{cfg.omega};
  const double pi = std::numbers::pi;

  {  // uncertainty inequality over random band-limited states
    double min_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.n_random_states; ++i) {
      const auto f = random_bandlimited_state(cfg.seed, static_cast<std::uint64_t>(i), cfg.m,
                                              static_cast<int>(cfg.m) / 4);
      min_gap = std::min(min_gap, uncertainty_gap(ctx, f));
    }
    report.push_back(check_at_least("uncertainty_gap_min", min_gap, -1e-9));
  }

  {  // saturation + eigen relation across the lambda grid
    double max_gap = 0.0, max_res = 0.0;
    for (const double lam :
         {0.05 / cfg.omega, 0.1 / cfg.omega, 0.5 / cfg.omega, 1.0 / (2.0 * cfg.omega),
          1.0 / cfg.omega, 5.0 / cfg.omega, 25.0 / cfg.omega, 50.0 / cfg.omega}) {
      const auto u = ground_state(cfg.omega, lam, cfg.m);
      max_gap = std::max(max_gap, std::abs(uncertainty_gap(ctx, u)));
      max_res = std::max(max_res, eigen_relation_residual(ctx, lam, u));
    }
    report.push_back(check_at_most("saturation_abs_gap_max", max_gap, 1e-8));
    report.push_back(check_at_most("eigen_relation_residual_max", max_res, 1e-9));
  }

  {  // equal-uncertainty point
    const auto u = ground_state(cfg.omega, 1.0 / (2.0 * cfg.omega), cfg.m);
    const auto [d1, d2] = normalized_uncertainty_pair(ctx, u);
    report.push_back(check_at_most("equal_uncertainty_split", std::abs(d1 - d2), 1e-6));
  }

  {  // angular-spread asymptotics
    double worst = 0.0;
    for (const double lam_om : {10.0, 25.0, 50.0}) {
      const auto u = ground_state(cfg.omega, lam_om / cfg.omega, cfg.m);
      const double product = circular_std(u) * 2.0 * std::sqrt(lam_om);
      worst = std::max(worst, std::abs(product - 1.0));
    }
    report.push_back(check_at_most("circular_std_product_offset_max", worst, 0.05));
  }

  {  // commutator identity by operator composition
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
      const auto f = random_bandlimited_state(cfg.seed + 1, static_cast<std::uint64_t>(i),
                                              cfg.m, static_cast<int>(cfg.m) / 4);
      const auto lhs = commutator_x3(ctx, f);
      const auto rhs = apply_x3(ctx, f);
      CircleFunction diff(cfg.m);
      for (std::size_t j = 0; j < cfg.m; ++j) diff.v[j] = lhs.v[j] - rhs.v[j];
      worst = std::max(worst, norm(diff) / norm(f));
    }
    report.push_back(check_at_most("commutator_identity_err_max", worst, 1e-10));
  }

  {  // integral-curve oracle
    double worst = 0.0;
    for (const double k : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
      const double s_max = std::abs(k) > 0.0 ? std::min(pi / std::abs(k), pi / 2.0) : pi / 2.0;
      const auto pts = integral_curve_numeric(IntegralCurveParams{k, s_max, 200});
      const auto exact = integral_curve_analytic(k, s_max);
      worst = std::max(worst, std::hypot(pts.back().x1 - exact.x1, pts.back().x2 - exact.x2));
    }
    report.push_back(check_at_most("curve_endpoint_err_max", worst, 1e-6));
  }

  {  // plane-wave limit: narrow window so the lambda*Omega = 50 envelope is flat
    const GridSpec window{128, 128, pi / cfg.omega};
    const auto u = synthesize(
        cfg.omega, coherent_state({cfg.omega, 50.0 / cfg.omega, 0.0, ZeroPhase{}, cfg.m}),
        window);
    const auto w = plane_wave_limit(cfg.omega, 0.0, window);
    report.push_back(check_at_least(
        "plane_wave_correlation",
        detail::correlation(activity_map(u, ActivityMode::RealPart),
                            activity_map(w, ActivityMode::RealPart)),
        0.99));
  }

  {  // Bessel limit against the series, plus the first zero
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double r = 20.0 * static_cast<double>(i) / 200.0 / cfg.omega;
      worst = std::max(worst, std::abs(detail::bessel_quadrature(cfg.omega, r, cfg.m) -
                                       detail::bessel_j0_series(cfg.omega * r)));
    }
    report.push_back(check_at_most("bessel_series_err_max", worst, 1e-8));

    double lo = 2.0 / cfg.omega, hi = 3.0 / cfg.omega;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (detail::bessel_quadrature(cfg.omega, lo, cfg.m) *
              detail::bessel_quadrature(cfg.omega, mid, cfg.m) <=
          0.0)
        hi = mid;
      else
        lo = mid;
    }
    report.push_back(check_at_most("bessel_first_zero_offset",
                                   std::abs(0.5 * (lo + hi) * cfg.omega - 2.4048), 1e-3));
  }

  {  // pipeline: pinwheels, Stokes consistency, annulus spectrum, Parseval
    const CoherentStateParams base{cfg.omega, cfg.lambda, 0.0,
                                   RandomSmoothPhase{cfg.seed, 4, pi}, cfg.m};
    const auto stack =
        activity_stack(base, OrientationSampleSet{cfg.n_orient}, cfg.grid, cfg.mode);
    const auto omap = vector_sum_orientation(stack);
    const auto pins = detect_pinwheels(omap);
    report.push_back(
        check_at_least("pinwheel_count", static_cast<double>(pins.size()), 10.0));
    double charge_err = 0.0, net = 0.0;
    for (const auto& p : pins) {
      charge_err = std::max(charge_err, std::abs(std::abs(p.charge) - 0.5));
      net += p.charge;
    }
    report.push_back(check_at_most("pinwheel_charge_quantization_err", charge_err, 0.0));
    report.push_back(check_at_most(
        "net_charge_vs_boundary_winding",
        std::abs(2.0 * net - static_cast<double>(boundary_winding(omap))), 0.0));

    const auto zsum = order_sum_field(stack);
    const auto spec = radial_power_spectrum(zsum, cfg.n_bins);
    double total = spec.dc_power;
    for (const double p : spec.power) total += p;
    double direct = 0.0;
    for (const auto& v : zsum.v) direct += std::norm(v);
    report.push_back(check_at_most("parseval_rel_err",
                                   std::abs(total - direct) / std::max(direct, 1e-300), 1e-9));

    const auto ann = annulus_metrics(spec, cfg.omega, cfg.epsilon);
    report.push_back(check_at_most("annulus_peak_offset_bins",
                                   std::abs(ann.peak_radius - cfg.omega) / spec.bin_width(),
                                   1.0));
    report.push_back(check_at_least("annulus_fraction", ann.fraction_in_annulus, 0.9));

    // intrinsic circle support of single-state fields (Hann, 2-bin annulus)
    const auto single = synthesize(cfg.omega, coherent_state(base), cfg.grid);
    const auto sspec = radial_power_spectrum(single, cfg.n_bins, SpectrumWindow::Hann);
    const double eps2 = 2.0 * sspec.bin_width() / cfg.omega;
    report.push_back(check_at_least(
        "single_state_annulus_fraction",
        annulus_metrics(sspec, cfg.omega, eps2).fraction_in_annulus, 0.99));
  }

  return report;
}

}  // namespace pinwheel
