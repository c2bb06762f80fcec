#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pinwheel/coherent.hpp"
#include "pinwheel/fft.hpp"
#include "pinwheel/spectrum.hpp"
#include "pinwheel/synthesis.hpp"
#include "pinwheel/validation.hpp"

namespace pw = pinwheel;
using Catch::Matchers::WithinAbs;
using pw::cplx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(pw::check_grid(pw::GridSpec{4, 64, 8.0}), pw::ConfigError);
  CHECK_THROWS_AS(pw::check_grid(pw::GridSpec{64, 64, -1.0}), pw::ConfigError);

  // A pitch coarser than a quarter wavelength cannot carry the carrier.
  const pw::GridSpec coarse{64, 64, 64.0};
  try {
    pw::check_grid_resolves(coarse, 1.0);
    FAIL("expected a pitch rejection");
  } catch (const pw::ConfigError& e) {
    CHECK(std::string(e.what()).find("pitch") != std::string::npos);
  }
}

TEST_CASE("synthesis weight and origin value") {
  const cplx c{2.0, 1.0};
  pw::CircleFunction f;
  f.v.assign(64, c);
  const pw::GridSpec grid{16, 16, 2.0};
  const auto u = pw::synthesize(1.0, f, grid);
  CHECK(std::abs(u.at(8, 8) - kPi * c) < 1e-12);
}

TEST_CASE("synthesis is linear in the circle function") {
  const int m = 64;
  const auto f = pw::random_bandlimited_state(3, 0, m, 8);
  const auto g = pw::random_bandlimited_state(3, 1, m, 8);
  const cplx a{0.7, -0.3};
  const cplx b{-1.1, 0.4};
  pw::CircleFunction combo;
  combo.v.resize(m);
  for (int j = 0; j < m; ++j) combo.v[j] = a * f.v[j] + b * g.v[j];

  const pw::GridSpec grid{24, 24, kPi};
  const auto uf = pw::synthesize(1.0, f, grid);
  const auto ug = pw::synthesize(1.0, g, grid);
  const auto uc = pw::synthesize(1.0, combo, grid);
  double worst = 0.0;
  for (size_t i = 0; i < uc.v.size(); ++i) {
    worst = std::max(worst, std::abs(uc.v[i] - (a * uf.v[i] + b * ug.v[i])));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("plane-wave limit") {
  SECTION("unit modulus and explicit phase") {
    const double theta = kPi / 6.0;
    const pw::GridSpec grid{64, 64, kPi};
    const auto u = pw::plane_wave_limit(1.0, theta, grid);
    double worst = 0.0;
    for (int ix = 0; ix < 64; ++ix) {
      for (int iy = 0; iy < 64; ++iy) {
        const double x1 = grid.x1_at(ix);
        const double x2 = grid.x2_at(iy);
        const cplx ref =
            std::exp(cplx{0.0, -x1 * std::sin(2.0 * theta) + x2 * std::cos(2.0 * theta)});
        worst = std::max(worst, std::abs(u.at(ix, iy) - ref));
        CHECK(std::abs(std::abs(u.at(ix, iy)) - 1.0) < 1e-14);
      }
    }
    CHECK(worst < 1e-13);
  }
  SECTION("no variation along the stripe direction") {
    // At theta = pi/8 the stripe direction 2*theta = pi/4 is the lattice
    // diagonal, so a central difference between diagonal neighbours is an
    // on-lattice directional derivative along the stripes.
    const pw::GridSpec grid{64, 64, kPi};
    const auto u = pw::plane_wave_limit(1.0, kPi / 8.0, grid);
    const double step = grid.pitch_x() * std::sqrt(2.0);
    double worst = 0.0;
    for (int ix = 1; ix < 63; ++ix) {
      for (int iy = 1; iy < 63; ++iy) {
        worst = std::max(worst,
                         std::abs(u.at(ix + 1, iy + 1) - u.at(ix - 1, iy - 1)) / (2.0 * step));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("uniform weights synthesize the radial kernel") {
  const pw::GridSpec grid{256, 256, 8.0 * kPi};
  const auto u = pw::bessel_limit(1.0, grid);

  SECTION("origin value is pi") {
    CHECK(std::abs(u.at(128, 128) - cplx{kPi, 0.0}) < 1e-12);
  }
  SECTION("matches the series kernel out to radius 20") {
    double worst = 0.0;
    for (int ix = 0; ix < 256; ix += 2) {
      for (int iy = 0; iy < 256; iy += 2) {
        const double r = std::hypot(grid.x1_at(ix), grid.x2_at(iy));
        if (r > 20.0) continue;
        const double ref = kPi * static_cast<double>(oracle::bessel_j0(r));
        worst = std::max(worst, std::abs(u.at(ix, iy) - cplx{ref, 0.0}));
      }
    }
    CHECK(worst < 1e-8);
  }
  SECTION("rotationally symmetric on lattice symmetry orbits") {
    double worst = 0.0;
    for (int ix = 1; ix < 256; ix += 7) {
      for (int iy = 1; iy < 256; iy += 7) {
        worst = std::max(worst, std::abs(u.at(ix, iy) - u.at(iy, ix)));
        worst = std::max(worst, std::abs(u.at(ix, iy) - u.at(256 - ix, iy)));
      }
    }
    CHECK(worst < 1e-9);
  }
  SECTION("first zero of the ray quadrature sits at the kernel root") {
    double lo = 2.0, hi = 3.0;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (pw::detail::bessel_quadrature(1.0, mid, 256) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    CHECK(std::abs(0.5 * (lo + hi) - 2.404825557695773) < 1e-3);
  }
}

TEST_CASE("narrow states approach the plane-wave limit") {
  const pw::GridSpec grid{128, 128, kPi};
  const auto state = pw::ground_state(1.0, 50.0, 256);
  const auto u = pw::synthesize(1.0, state, grid);
  const auto ref = pw::plane_wave_limit(1.0, 0.0, grid);
  std::vector<double> a, b;
  a.reserve(u.v.size());
  b.reserve(u.v.size());
  for (size_t i = 0; i < u.v.size(); ++i) {
    a.push_back(u.v[i].real());
    b.push_back(ref.v[i].real());
  }
  CHECK(oracle::correlation(a, b) > 0.99);
}

TEST_CASE("rotating the state rotates the field") {
  const int n = 64;
  const pw::GridSpec grid{64, 64, 2.0 * kPi};

  pw::CoherentStateParams p0;
  p0.lambda = 0.5;
  p0.m = 256;
  pw::CoherentStateParams p1 = p0;
  p1.theta = kPi / 4.0;

  const auto u0 = pw::synthesize(1.0, pw::coherent_state(p0), grid);
  const auto u1 = pw::synthesize(1.0, pw::coherent_state(p1), grid);

  // theta = pi/4 rotates the field by pi/2: u1(x) = u0(r_{-pi/2} x), and
  // r_{-pi/2}(x1, x2) = (x2, -x1) lands back on the lattice.
  double worst = 0.0;
  for (int ix = 1; ix < n; ++ix) {
    for (int iy = 0; iy < n; ++iy) {
      worst = std::max(worst, std::abs(u1.at(ix, iy) - u0.at(iy, n - ix)));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("synthesis converges in the orientation sample count") {
  const pw::GridSpec grid{32, 32, 2.0 * kPi};
  pw::CoherentStateParams coarse;
  coarse.lambda = 0.5;
  coarse.m = 256;
  coarse.phase = pw::RandomSmoothPhase{};
  pw::CoherentStateParams fine = coarse;
  fine.m = 512;

  const auto uc = pw::synthesize(1.0, pw::coherent_state(coarse), grid);
  const auto uf = pw::synthesize(1.0, pw::coherent_state(fine), grid);
  double worst = 0.0;
  for (size_t i = 0; i < uc.v.size(); ++i) worst = std::max(worst, std::abs(uc.v[i] - uf.v[i]));
  CHECK(worst < 1e-9);
}

TEST_CASE("synthesized fields are carrier-band limited") {
  pw::CoherentStateParams p;
  p.lambda = 0.5;
  p.m = 256;
  p.phase = pw::RandomSmoothPhase{};
  const pw::GridSpec grid{256, 256, 8.0 * kPi};
  const auto u = pw::synthesize(1.0, pw::coherent_state(p), grid);
  const auto map = pw::activity_map(u, pw::ActivityMode::RealPart);

  pw::ComplexField zf(grid);
  for (size_t i = 0; i < map.size(); ++i) zf.v[i] = cplx{map[i], 0.0};
  const auto spec = pw::radial_power_spectrum(zf, 128, pw::SpectrumWindow::Hann);
  const auto ann = pw::annulus_metrics(spec, 1.0, 2.0 * spec.bin_width() / 1.0);
  CHECK(ann.fraction_in_annulus > 0.99);
}

TEST_CASE("activity maps") {
  const pw::GridSpec grid{64, 64, kPi};
  const auto u = pw::plane_wave_limit(1.0, 0.0, grid);

  const auto re = pw::activity_map(u, pw::ActivityMode::RealPart);
  const auto mod = pw::activity_map(u, pw::ActivityMode::Modulus);
  const auto ph = pw::activity_map(u, pw::ActivityMode::Phase);
  for (int ix = 0; ix < 64; ix += 5) {
    for (int iy = 0; iy < 64; iy += 5) {
      const size_t i = static_cast<size_t>(ix) * 64 + iy;
      CHECK_THAT(re[i], WithinAbs(std::cos(grid.x2_at(iy)), 1e-13));
      CHECK_THAT(mod[i], WithinAbs(1.0, 1e-13));
      CHECK_THAT(ph[i], WithinAbs(std::arg(u.at(ix, iy)), 0.0));
    }
  }

  SECTION("stripe wave vector lands on the expected lattice mode") {
    const pw::GridSpec wide{128, 128, 8.0 * kPi};
    const auto w = pw::plane_wave_limit(1.0, kPi / 4.0, wide);
    const auto m = pw::activity_map(w, pw::ActivityMode::RealPart);
    std::vector<cplx> z(m.size());
    for (size_t i = 0; i < m.size(); ++i) z[i] = cplx{m[i], 0.0};
    const auto f2 = pw::dft2(z, 128, 128);
    size_t best = 1;
    for (size_t i = 1; i < f2.size(); ++i) {
      if (std::norm(f2[i]) > std::norm(f2[best])) best = i;
    }
    const int b1 = static_cast<int>(best / 128);
    const int b2 = static_cast<int>(best % 128);
    const int m1 = b1 < 64 ? b1 : b1 - 128;
    const int m2 = b2 < 64 ? b2 : b2 - 128;
    // theta = pi/4 gives wave vector (-sin(pi/2), cos(pi/2)) = (-1, 0); with
    // half-width 8 pi that is lattice mode (-8, 0), up to conjugate symmetry.
    CHECK(std::abs(m1) == 8);
    CHECK(m2 == 0);
  }
}

TEST_CASE("worker count does not change the field") {
  pw::CoherentStateParams p;
  p.lambda = 0.5;
  p.m = 128;
  p.phase = pw::RandomSmoothPhase{};
  const pw::GridSpec grid{48, 48, 2.0 * kPi};
  const auto state = pw::coherent_state(p);

  ::setenv("PINWHEEL_WORKERS", "1", 1);
  const auto serial = pw::synthesize(1.0, state, grid);
  ::setenv("PINWHEEL_WORKERS", "5", 1);
  const auto parallel = pw::synthesize(1.0, state, grid);
  ::unsetenv("PINWHEEL_WORKERS");

  REQUIRE(serial.v.size() == parallel.v.size());
  for (size_t i = 0; i < serial.v.size(); ++i) CHECK(serial.v[i] == parallel.v[i]);
}
