#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "pinwheel/coherent.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/image.hpp"
#include "pinwheel/parallel.hpp"
#include "pinwheel/synthesis.hpp"

namespace pinwheel {

// Uniform grating orientations theta_j = offset + j pi / n, j = 0..n-1.
// The offset rotates every label by the same amount; estimators must be
// equivariant under it.
struct OrientationSampleSet {
  int n_orient = 8;
  double offset = 0.0;

  double angle(int j) const {
    return offset + std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_orient);
  }
};

inline void check_orientations(const OrientationSampleSet& set) {
  if (set.n_orient < 2) throw ConfigError("OrientationSampleSet: n_orient must be >= 2");
}

// One gray activity map per grating orientation, all synthesized from the
// same (omega, lambda, phase) coherent-state family.
struct ActivityStack {
  GridSpec grid;
  OrientationSampleSet orientations;
  std::vector<std::vector<double>> maps;  // maps[j][ix * ny + iy]
};

inline ActivityStack activity_stack(const CoherentStateParams& base,
                                    const OrientationSampleSet& set, const GridSpec& grid,
                                    ActivityMode mode) {
  check_orientations(set);
  check_grid_resolves(grid, base.omega);
  ActivityStack stack{grid, set, {}};
  stack.maps.reserve(static_cast<std::size_t>(set.n_orient));
  for (int j = 0; j < set.n_orient; ++j) {
    CoherentStateParams p = base;
    p.theta = set.angle(j);
    stack.maps.push_back(activity_map(synthesize(p.omega, coherent_state(p), grid), mode));
  }
  return stack;
}

// Per-pixel preferred orientation in [0, pi) with selectivity in [0, 1].
struct OrientationMap {
  GridSpec grid;
  std::vector<double> preferred;
  std::vector<double> selectivity;
};

// Vector averaging on the doubled angle with a per-pixel nonnegative shift:
//   w_j = a_j - min_k a_k,  z = sum_j w_j e^{2 i theta_j},
//   preferred = arg(z)/2 mod pi,  selectivity = |z| / sum_j w_j.
// The shift leaves z itself unchanged (sum_j e^{2 i theta_j} = 0) but makes
// the selectivity denominator meaningful for signed activity maps.
inline OrientationMap vector_sum_orientation(const ActivityStack& stack) {
  check_orientations(stack.orientations);
  const int n = stack.orientations.n_orient;
  const std::size_t count = stack.grid.count();
  OrientationMap omap{stack.grid, std::vector<double>(count, 0.0),
                      std::vector<double>(count, 0.0)};
  std::vector<cplx> dir(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * stack.orientations.angle(j);
    dir[static_cast<std::size_t>(j)] = cplx(std::cos(t), std::sin(t));
  }
  parallel_ranges(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double lo = stack.maps[0][i];
      for (int j = 1; j < n; ++j) lo = std::min(lo, stack.maps[static_cast<std::size_t>(j)][i]);
      cplx z(0.0, 0.0);
      double total = 0.0;
      for (int j = 0; j < n; ++j) {
        const double w = stack.maps[static_cast<std::size_t>(j)][i] - lo;
        z += w * dir[static_cast<std::size_t>(j)];
        total += w;
      }
      omap.preferred[i] = normalize_orientation(0.5 * std::arg(z));
      omap.selectivity[i] = total > 0.0 ? std::min(std::abs(z) / total, 1.0) : 0.0;
    }
  });
  return omap;
}

// Winner-take-all alternative: preferred = theta_{argmax a_j}, selectivity =
// (max - median) / (max - min). Ties break toward smaller j.
inline OrientationMap argmax_orientation(const ActivityStack& stack) {
  check_orientations(stack.orientations);
  const int n = stack.orientations.n_orient;
  const std::size_t count = stack.grid.count();
  OrientationMap omap{stack.grid, std::vector<double>(count, 0.0),
                      std::vector<double>(count, 0.0)};
  parallel_ranges(count, [&](std::size_t begin, std::size_t end) {
    std::vector<double> sorted(static_cast<std::size_t>(n));
    for (std::size_t i = begin; i < end; ++i) {
      int best = 0;
      for (int j = 1; j < n; ++j)
        if (stack.maps[static_cast<std::size_t>(j)][i] >
            stack.maps[static_cast<std::size_t>(best)][i])
          best = j;
      for (int j = 0; j < n; ++j) sorted[static_cast<std::size_t>(j)] = stack.maps[static_cast<std::size_t>(j)][i];
      std::sort(sorted.begin(), sorted.end());
      const double lo = sorted.front();
      const double hi = sorted.back();
      const double median = n % 2 == 1
                                ? sorted[static_cast<std::size_t>(n / 2)]
                                : 0.5 * (sorted[static_cast<std::size_t>(n / 2 - 1)] +
                                         sorted[static_cast<std::size_t>(n / 2)]);
      omap.preferred[i] = stack.orientations.angle(best);
      omap.selectivity[i] =
          hi > lo ? std::clamp((hi - median) / (hi - lo), 0.0, 1.0) : 0.0;
    }
  });
  return omap;
}

// Unnormalized complex order parameter sum_j a_j e^{2 i theta_j}: linear in
// the activity maps, hence circle-supported in the spectrum like the maps
// themselves. This is the field whose radial spectrum carries the annulus
// prediction.
inline ComplexField order_sum_field(const ActivityStack& stack) {
  check_orientations(stack.orientations);
  const int n = stack.orientations.n_orient;
  ComplexField out(stack.grid);
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * stack.orientations.angle(j);
    const cplx dir(std::cos(t), std::sin(t));
    const auto& map = stack.maps[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += map[i] * dir;
  }
  return out;
}

// Normalized order parameter selectivity * e^{2 i preferred}.
inline ComplexField complex_order_field(const OrientationMap& omap) {
  ComplexField out(omap.grid);
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    const double a = 2.0 * omap.preferred[i];
    out.v[i] = omap.selectivity[i] * cplx(std::cos(a), std::sin(a));
  }
  return out;
}

struct Pinwheel {
  double x1 = 0.0;  // plaquette center
  double x2 = 0.0;
  double charge = 0.0;  // +-1/2
};

using PinwheelList = std::vector<Pinwheel>;

namespace detail {

// Wrap to (-pi, pi].
inline double wrap_angle(double d) {
  const double two_pi = 2.0 * std::numbers::pi;
  return d - two_pi * std::floor((d + std::numbers::pi) / two_pi);
}

}  // namespace detail

// Counts the winding of the doubled angle around every 2x2 plaquette,
// traversed counterclockwise: (ix,iy) -> (ix+1,iy) -> (ix+1,iy+1) ->
// (ix,iy+1). Each wrapped step lies in (-pi, pi], so four steps can only sum
// to -2pi, 0, or +2pi; anything else is a wrapping bug and throws.
inline PinwheelList detect_pinwheels(const OrientationMap& omap) {
  const GridSpec& g = omap.grid;
  PinwheelList found;
  const auto angle_at = [&](std::size_t ix, std::size_t iy) {
    return 2.0 * omap.preferred[ix * g.ny + iy];
  };
  for (std::size_t ix = 0; ix + 1 < g.nx; ++ix) {
    for (std::size_t iy = 0; iy + 1 < g.ny; ++iy) {
      const double loop = detail::wrap_angle(angle_at(ix + 1, iy) - angle_at(ix, iy)) +
                          detail::wrap_angle(angle_at(ix + 1, iy + 1) - angle_at(ix + 1, iy)) +
                          detail::wrap_angle(angle_at(ix, iy + 1) - angle_at(ix + 1, iy + 1)) +
                          detail::wrap_angle(angle_at(ix, iy) - angle_at(ix, iy + 1));
      const double winding = loop / (2.0 * std::numbers::pi);
      const long w = std::lround(winding);
      if (std::abs(winding - static_cast<double>(w)) > 1e-6 || w < -1 || w > 1)
        throw NumericError("detect_pinwheels: non-quantized plaquette winding");
      if (w != 0)
        found.push_back(Pinwheel{g.x1_at(ix) + 0.5 * g.pitch_x(),
                                 g.x2_at(iy) + 0.5 * g.pitch_y(),
                                 0.5 * static_cast<double>(w)});
    }
  }
  return found;
}

// Winding of the doubled angle around the outer boundary of the grid,
// counterclockwise. By discrete Stokes this equals twice the total detected
// charge (exactly, as an integer).
inline long boundary_winding(const OrientationMap& omap) {
  const GridSpec& g = omap.grid;
  const auto angle_at = [&](std::size_t ix, std::size_t iy) {
    return 2.0 * omap.preferred[ix * g.ny + iy];
  };
  double total = 0.0;
  double prev = angle_at(0, 0);
  const auto step_to = [&](std::size_t ix, std::size_t iy) {
    const double a = angle_at(ix, iy);
    total += detail::wrap_angle(a - prev);
    prev = a;
  };
  for (std::size_t ix = 1; ix < g.nx; ++ix) step_to(ix, 0);
  for (std::size_t iy = 1; iy < g.ny; ++iy) step_to(g.nx - 1, iy);
  for (std::size_t ix = g.nx - 1; ix-- > 0;) step_to(ix, g.ny - 1);
  for (std::size_t iy = g.ny - 1; iy-- > 0;) step_to(0, iy);
  return std::lround(total / (2.0 * std::numbers::pi));
}

// Color composite: hue runs twice around the color circle per pi of
// orientation, saturation encodes selectivity, full value.
inline RgbImage render_pinwheel_image(const OrientationMap& omap) {
  const GridSpec& g = omap.grid;
  RgbImage img{g.nx, g.ny, std::vector<std::uint8_t>(g.nx * g.ny * 3, 0)};
  for (std::size_t row = 0; row < g.ny; ++row) {
    for (std::size_t col = 0; col < g.nx; ++col) {
      const std::size_t i = col * g.ny + (g.ny - 1 - row);
      const auto rgb = hsv_to_rgb(2.0 * omap.preferred[i], omap.selectivity[i], 1.0);
      const std::size_t o = (row * g.nx + col) * 3;
      img.pixels[o] = rgb[0];
      img.pixels[o + 1] = rgb[1];
      img.pixels[o + 2] = rgb[2];
    }
  }
  return img;
}

}  // namespace pinwheel
