#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "pinwheel/errors.hpp"
#include "pinwheel/fft.hpp"
#include "pinwheel/synthesis.hpp"

namespace pinwheel {

// Radial binning of the 2D power spectrum. Mode (m1, m2) of the 2L-periodic
// grid sits at |k| = pi * hypot(m1, m2) / L (angular frequency: the wave
// e^{i k.x} lands at radius |k|). Bins are uniform on [0, kmax]; the DC mode
// is reported separately and excluded from power[] and the peak search.
struct RadialSpectrum {
  std::vector<double> bin_edges;  // n_bins + 1 values, 0 .. kmax
  std::vector<double> power;      // per bin, DC excluded
  double dc_power = 0.0;
  std::size_t peak_bin = 0;

  double bin_width() const { return bin_edges.size() > 1 ? bin_edges[1] - bin_edges[0] : 0.0; }
  double bin_center(std::size_t b) const { return 0.5 * (bin_edges[b] + bin_edges[b + 1]); }
  double total_power() const {
    double t = 0.0;
    for (const double p : power) t += p;
    return t;
  }
};

enum class SpectrumWindow { None, Hann };

// Power normalization |F|^2 / (nx ny), so that sum(power) + dc_power equals
// sum |field|^2 exactly (Parseval). Windowless by default; the Hann option
// suppresses truncation leakage when the question is intrinsic support.
inline RadialSpectrum radial_power_spectrum(const ComplexField& field, int n_bins,
                                            SpectrumWindow window = SpectrumWindow::None) {
  if (n_bins < 4) throw ConfigError("radial_power_spectrum: n_bins must be >= 4");
  const GridSpec& g = field.grid;
  check_grid(g);

  std::vector<cplx> data(field.v);
  if (window == SpectrumWindow::Hann) {
    const auto hann = [](std::size_t i, std::size_t n) {
      return 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                  static_cast<double>(n));
    };
    for (std::size_t ix = 0; ix < g.nx; ++ix)
      for (std::size_t iy = 0; iy < g.ny; ++iy) data[ix * g.ny + iy] *= hann(ix, g.nx) * hann(iy, g.ny);
  }
  const auto spec = dft2(data, g.nx, g.ny);

  const double kunit = std::numbers::pi / g.half_width;
  const double kmax =
      kunit * std::hypot(static_cast<double>(g.nx) / 2.0, static_cast<double>(g.ny) / 2.0);
  const double width = kmax / static_cast<double>(n_bins);
  RadialSpectrum out;
  out.bin_edges.resize(static_cast<std::size_t>(n_bins) + 1);
  for (int b = 0; b <= n_bins; ++b) out.bin_edges[static_cast<std::size_t>(b)] = width * b;
  out.power.assign(static_cast<std::size_t>(n_bins), 0.0);

  const double norm = 1.0 / static_cast<double>(g.nx * g.ny);
  const auto mode_of = [](std::size_t idx, std::size_t n) {
    return idx < n / 2 ? static_cast<double>(idx)
                       : static_cast<double>(idx) - static_cast<double>(n);
  };
  for (std::size_t ix = 0; ix < g.nx; ++ix) {
    const double m1 = mode_of(ix, g.nx);
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
      const double p = std::norm(spec[ix * g.ny + iy]) * norm;
      if (ix == 0 && iy == 0) {
        out.dc_power = p;
        continue;
      }
      const double m2 = mode_of(iy, g.ny);
      const double k = kunit * std::hypot(m1, m2);
      const auto bin = std::min<std::size_t>(static_cast<std::size_t>(k / width),
                                             static_cast<std::size_t>(n_bins) - 1);
      out.power[bin] += p;
    }
  }
  out.peak_bin = static_cast<std::size_t>(
      std::max_element(out.power.begin(), out.power.end()) - out.power.begin());
  return out;
}

struct AnnulusMetrics {
  double peak_radius = 0.0;
  double fraction_in_annulus = 0.0;
};

// peak_radius: bin center of the (DC-excluded) power peak. fraction: power
// with bin center inside Omega [1-eps, 1+eps] over total non-DC power.
inline AnnulusMetrics annulus_metrics(const RadialSpectrum& spec, double omega, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ConfigError("annulus_metrics: epsilon must lie in (0, 1)");
  if (!(omega > 0.0)) throw ConfigError("annulus_metrics: omega must be > 0");
  const double total = spec.total_power();
  if (!(total > 0.0)) throw ConfigError("annulus_metrics: empty non-DC spectrum");
  double inside = 0.0;
  for (std::size_t b = 0; b < spec.power.size(); ++b) {
    const double c = spec.bin_center(b);
    if (c >= omega * (1.0 - epsilon) && c <= omega * (1.0 + epsilon)) inside += spec.power[b];
  }
  return AnnulusMetrics{spec.bin_center(spec.peak_bin), inside / total};
}

}  // namespace pinwheel
