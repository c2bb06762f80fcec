#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include "pinwheel/circle.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/parallel.hpp"

namespace pinwheel {

// Square sampling window of the plane: node x_i = -L + i * (2L / n) on each
// axis (the 2L-periodic convention, so the DFT mode map k = pi*m/L is exact
// and the origin is a node for even n).
struct GridSpec {
  std::size_t nx = 256;
  std::size_t ny = 256;
  double half_width = 8.0 * std::numbers::pi;

  double pitch_x() const { return 2.0 * half_width / static_cast<double>(nx); }
  double pitch_y() const { return 2.0 * half_width / static_cast<double>(ny); }
  double x1_at(std::size_t ix) const { return -half_width + static_cast<double>(ix) * pitch_x(); }
  double x2_at(std::size_t iy) const { return -half_width + static_cast<double>(iy) * pitch_y(); }
  std::size_t count() const { return nx * ny; }
};

inline void check_grid(const GridSpec& g) {
  if (g.nx < 8 || g.ny < 8) throw ConfigError("GridSpec: nx and ny must be >= 8");
  if (!(g.half_width > 0.0)) throw ConfigError("GridSpec: half_width must be > 0");
}

// The synthesized wavelength is 2 pi / Omega; require at least 4 pixels per
// wavelength on both axes.
inline void check_grid_resolves(const GridSpec& g, double omega) {
  check_grid(g);
  const double required = std::numbers::pi / (2.0 * omega);
  const double pitch = std::max(g.pitch_x(), g.pitch_y());
  if (pitch > required * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "grid pitch " << pitch << " under-resolves omega = " << omega
        << ": need pitch <= " << required << " (4 pixels per wavelength)";
    throw ConfigError(msg.str());
  }
}

struct ComplexField {
  GridSpec grid;
  std::vector<cplx> v;  // row-major in ix; v[ix * ny + iy]

  ComplexField() = default;
  explicit ComplexField(const GridSpec& g) : grid(g), v(g.count(), cplx(0.0, 0.0)) {}

  cplx& at(std::size_t ix, std::size_t iy) { return v[ix * grid.ny + iy]; }
  const cplx& at(std::size_t ix, std::size_t iy) const { return v[ix * grid.ny + iy]; }
};

// Anti-transform of circle data onto the plane:
//   u(x) = (pi/M) sum_j f_j exp[i Omega (-x1 sin 2phi_j + x2 cos 2phi_j)].
// The exponential factors over the two coordinates, so per-axis tables turn
// the evaluation into O(nx ny M) multiply-adds. Summation is in ascending j
// at every pixel and rows are partitioned disjointly, so the result is
// bit-identical for any worker count.
inline ComplexField synthesize(double omega, const CircleFunction& f, const GridSpec& grid) {
  if (!(omega > 0.0)) throw ConfigError("synthesize: omega must be > 0");
  if (f.size() == 0) throw ConfigError("synthesize: empty circle function");
  check_grid_resolves(grid, omega);

  const std::size_t m = f.size();
  const auto phi = circle_nodes(m);
  std::vector<cplx> a(m * grid.nx);  // exp(-i omega sin(2phi_j) x1)
  std::vector<cplx> b(m * grid.ny);  // exp(+i omega cos(2phi_j) x2)
  for (std::size_t j = 0; j < m; ++j) {
    const double sj = omega * std::sin(2.0 * phi[j]);
    const double cj = omega * std::cos(2.0 * phi[j]);
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const double arg = -sj * grid.x1_at(ix);
      a[j * grid.nx + ix] = cplx(std::cos(arg), std::sin(arg));
    }
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      const double arg = cj * grid.x2_at(iy);
      b[j * grid.ny + iy] = cplx(std::cos(arg), std::sin(arg));
    }
  }

  ComplexField out(grid);
  const double weight = std::numbers::pi / static_cast<double>(m);
  parallel_ranges(grid.nx, [&](std::size_t ix_begin, std::size_t ix_end) {
    for (std::size_t ix = ix_begin; ix < ix_end; ++ix) {
      for (std::size_t iy = 0; iy < grid.ny; ++iy) {
        cplx acc(0.0, 0.0);
        for (std::size_t j = 0; j < m; ++j)
          acc += f.v[j] * a[j * grid.nx + ix] * b[j * grid.ny + iy];
        out.at(ix, iy) = weight * acc;
      }
    }
  });
  return out;
}

// Large-lambda limit: u(x) = e^{i Omega(-x1 sin 2theta + x2 cos 2theta)},
// |u| = 1 everywhere.
inline ComplexField plane_wave_limit(double omega, double theta, const GridSpec& grid) {
  if (!(omega > 0.0)) throw ConfigError("plane_wave_limit: omega must be > 0");
  check_grid(grid);
  const double s = std::sin(2.0 * theta);
  const double c = std::cos(2.0 * theta);
  ComplexField out(grid);
  for (std::size_t ix = 0; ix < grid.nx; ++ix) {
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      const double arg = omega * (-grid.x1_at(ix) * s + grid.x2_at(iy) * c);
      out.at(ix, iy) = cplx(std::cos(arg), std::sin(arg));
    }
  }
  return out;
}

// Small-lambda limit: the same quadrature with f == 1, which equals
// pi J0(Omega r) (the displacement theta drops out by symmetry).
inline ComplexField bessel_limit(double omega, const GridSpec& grid, std::size_t m = 256) {
  CircleFunction ones(m);
  for (auto& x : ones.v) x = cplx(1.0, 0.0);
  return synthesize(omega, ones, grid);
}

enum class ActivityMode { RealPart, Modulus, Phase };

inline const char* activity_mode_name(ActivityMode mode) {
  switch (mode) {
    case ActivityMode::RealPart:
      return "real";
    case ActivityMode::Modulus:
      return "modulus";
    default:
      return "phase";
  }
}

// Gray-map extraction of a complex field.
inline std::vector<double> activity_map(const ComplexField& field, ActivityMode mode) {
  std::vector<double> out(field.v.size());
  switch (mode) {
    case ActivityMode::RealPart:
      for (std::size_t i = 0; i < field.v.size(); ++i) out[i] = field.v[i].real();
      break;
    case ActivityMode::Modulus:
      for (std::size_t i = 0; i < field.v.size(); ++i) out[i] = std::abs(field.v[i]);
      break;
    case ActivityMode::Phase:
      for (std::size_t i = 0; i < field.v.size(); ++i) out[i] = std::arg(field.v[i]);
      break;
  }
  return out;
}

}  // namespace pinwheel
