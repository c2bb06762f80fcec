#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pinwheel/image.hpp"
#include "pinwheel/io.hpp"
#include "pinwheel/orientation.hpp"
#include "pinwheel/se2.hpp"

namespace pw = pinwheel;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

double angular_distance(double a, double b) {
  double d = std::abs(pw::normalize_orientation(a) - pw::normalize_orientation(b));
  return std::min(d, kPi - d);
}

// Stack of synthetic tuning curves a_j = cos^2(theta_j - beta(x)).
pw::ActivityStack synthetic_cos2_stack(const pw::GridSpec& grid, int n_orient,
                                       const std::function<double(double, double)>& beta) {
  pw::ActivityStack stack;
  stack.grid = grid;
  stack.orientations = pw::OrientationSampleSet{n_orient};
  stack.maps.resize(n_orient);
  for (int j = 0; j < n_orient; ++j) {
    stack.maps[j].resize(grid.count());
    const double theta = stack.orientations.angle(j);
    for (size_t ix = 0; ix < grid.nx; ++ix) {
      for (size_t iy = 0; iy < grid.ny; ++iy) {
        const double b = beta(grid.x1_at(ix), grid.x2_at(iy));
        const double c = std::cos(theta - b);
        stack.maps[j][ix * grid.ny + iy] = c * c;
      }
    }
  }
  return stack;
}

}  // namespace

TEST_CASE("orientation sample sets") {
  const pw::OrientationSampleSet set{8};
  for (int j = 0; j < 8; ++j) CHECK(set.angle(j) == kPi * j / 8.0);
  CHECK_THROWS_AS(pw::check_orientations(pw::OrientationSampleSet{1}), pw::ConfigError);
}

TEST_CASE("activity stacks from rotated states") {
  pw::CoherentStateParams base;
  base.lambda = 50.0;
  base.m = 256;
  const pw::GridSpec grid{64, 64, kPi};

  SECTION("orthogonal stripes a quarter label apart") {
    const auto stack =
        pw::activity_stack(base, pw::OrientationSampleSet{4}, grid, pw::ActivityMode::RealPart);
    REQUIRE(stack.maps.size() == 4);
    std::vector<double> horiz(grid.count()), vert(grid.count());
    for (size_t ix = 0; ix < 64; ++ix) {
      for (size_t iy = 0; iy < 64; ++iy) {
        horiz[ix * 64 + iy] = std::cos(grid.x2_at(iy));
        vert[ix * 64 + iy] = std::cos(grid.x1_at(ix));
      }
    }
    // theta = 0 has wave vector (0, 1); theta = pi/4 rotates it by pi/2 onto
    // (-1, 0). The two stripe patterns are orthogonal.
    CHECK(oracle::correlation(stack.maps[0], horiz) > 0.99);
    CHECK(oracle::correlation(stack.maps[1], vert) > 0.99);
    CHECK(std::abs(oracle::correlation(stack.maps[0], stack.maps[1])) < 0.2);
  }

  SECTION("theta = pi/2 map is the point reflection of theta = 0") {
    const auto stack =
        pw::activity_stack(base, pw::OrientationSampleSet{2}, grid, pw::ActivityMode::RealPart);
    double worst = 0.0;
    for (size_t ix = 1; ix < 64; ++ix) {
      for (size_t iy = 1; iy < 64; ++iy) {
        worst = std::max(worst, std::abs(stack.maps[1][ix * 64 + iy] -
                                         stack.maps[0][(64 - ix) * 64 + (64 - iy)]));
      }
    }
    CHECK(worst < 1e-8);
  }

  SECTION("zero-phase maps share value statistics up to rotation") {
    const auto stack =
        pw::activity_stack(base, pw::OrientationSampleSet{4}, grid, pw::ActivityMode::RealPart);
    // Restrict to the rotation-closed subgrid (indices >= 1) where a quarter
    // turn permutes lattice points.
    std::vector<double> v0, v1;
    for (size_t ix = 1; ix < 64; ++ix) {
      for (size_t iy = 1; iy < 64; ++iy) {
        v0.push_back(stack.maps[0][ix * 64 + iy]);
        v1.push_back(stack.maps[1][ix * 64 + iy]);
      }
    }
    std::sort(v0.begin(), v0.end());
    std::sort(v1.begin(), v1.end());
    double worst = 0.0;
    for (size_t i = 0; i < v0.size(); ++i) worst = std::max(worst, std::abs(v0[i] - v1[i]));
    CHECK(worst < 1e-8);
  }

  SECTION("random phases are reproducible") {
    pw::CoherentStateParams seeded = base;
    seeded.lambda = 0.5;
    seeded.phase = pw::RandomSmoothPhase{};
    const auto a =
        pw::activity_stack(seeded, pw::OrientationSampleSet{3}, grid, pw::ActivityMode::RealPart);
    const auto b =
        pw::activity_stack(seeded, pw::OrientationSampleSet{3}, grid, pw::ActivityMode::RealPart);
    REQUIRE(a.maps.size() == b.maps.size());
    for (size_t j = 0; j < a.maps.size(); ++j) CHECK(a.maps[j] == b.maps[j]);
  }
}

TEST_CASE("vector-sum estimator") {
  SECTION("recovers the angle of a cosine-squared tuning stack") {
    const pw::GridSpec grid{32, 32, 2.0};
    const auto stack = synthetic_cos2_stack(grid, 8, [](double x1, double x2) {
      return pw::normalize_orientation(0.3 + 0.25 * x1 + 0.6 * x2);
    });
    const auto omap = pw::vector_sum_orientation(stack);
    double worst = 0.0;
    for (size_t ix = 0; ix < grid.nx; ++ix) {
      for (size_t iy = 0; iy < grid.ny; ++iy) {
        const double b = pw::normalize_orientation(0.3 + 0.25 * grid.x1_at(ix) + 0.6 * grid.x2_at(iy));
        worst = std::max(worst, angular_distance(omap.preferred[ix * grid.ny + iy], b));
        CHECK(omap.selectivity[ix * grid.ny + iy] > 0.0);
      }
    }
    CHECK(worst < 1e-12);
  }
  SECTION("flat pixels carry zero selectivity and angle zero") {
    pw::ActivityStack stack;
    stack.grid = pw::GridSpec{8, 8, 1.0};
    stack.orientations = pw::OrientationSampleSet{8};
    stack.maps.assign(8, std::vector<double>(stack.grid.count(), 1.3));
    const auto omap = pw::vector_sum_orientation(stack);
    for (size_t i = 0; i < stack.grid.count(); ++i) {
      CHECK(omap.selectivity[i] == 0.0);
      CHECK(omap.preferred[i] == 0.0);
    }
  }
  SECTION("seeded default run covers orientations roughly uniformly") {
    const auto& omap = fixtures::default_pipeline().vec;
    std::vector<int> hist(18, 0);
    for (double p : omap.preferred) {
      int b = static_cast<int>(p / kPi * 18.0);
      if (b == 18) b = 17;
      ++hist[b];
    }
    const auto [lo, hi] = std::minmax_element(hist.begin(), hist.end());
    CHECK(*lo > 0);
    CHECK(static_cast<double>(*hi) / static_cast<double>(*lo) < 3.0);
  }
}

TEST_CASE("argmax estimator") {
  SECTION("constant-angle tuning stack returns that label") {
    const pw::GridSpec grid{16, 16, 1.0};
    const pw::OrientationSampleSet set{8};
    const double target = set.angle(3);
    const auto stack = synthetic_cos2_stack(grid, 8, [&](double, double) { return target; });
    const auto omap = pw::argmax_orientation(stack);
    for (double p : omap.preferred) CHECK(p == target);
  }
  SECTION("preferred angles are quantized to the label set") {
    const auto& omap = fixtures::default_pipeline().arg;
    std::set<double> distinct(omap.preferred.begin(), omap.preferred.end());
    CHECK(distinct.size() <= 8);
  }
  SECTION("agrees with vector sum on selective pixels") {
    const auto& pipe = fixtures::default_pipeline();
    int violations = 0;
    for (size_t i = 0; i < pipe.vec.preferred.size(); ++i) {
      if (pipe.vec.selectivity[i] <= 0.5) continue;
      if (angular_distance(pipe.vec.preferred[i], pipe.arg.preferred[i]) >= kPi / 8.0) {
        ++violations;
      }
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("pinwheel detection") {
  SECTION("radial field carries one positive half charge") {
    const pw::GridSpec grid{16, 16, 2.0};
    // Center the singularity on a plaquette center, not a sample node.
    const double c1 = 0.5 * (grid.x1_at(7) + grid.x1_at(8));
    const double c2 = 0.5 * (grid.x2_at(7) + grid.x2_at(8));
    pw::OrientationMap omap;
    omap.grid = grid;
    omap.preferred.resize(grid.count());
    omap.selectivity.assign(grid.count(), 1.0);
    for (size_t ix = 0; ix < 16; ++ix) {
      for (size_t iy = 0; iy < 16; ++iy) {
        omap.preferred[ix * 16 + iy] = pw::normalize_orientation(
            0.5 * std::atan2(grid.x2_at(iy) - c2, grid.x1_at(ix) - c1));
      }
    }
    const auto pins = pw::detect_pinwheels(omap);
    REQUIRE(pins.size() == 1);
    CHECK(pins[0].charge == 0.5);
    CHECK_THAT(pins[0].x1, WithinAbs(c1, 1e-12));
    CHECK_THAT(pins[0].x2, WithinAbs(c2, 1e-12));
    CHECK(pw::boundary_winding(omap) == 1);

    SECTION("mirroring flips the charge") {
      for (auto& p : omap.preferred) p = pw::normalize_orientation(-p);
      const auto flipped = pw::detect_pinwheels(omap);
      REQUIRE(flipped.size() == 1);
      CHECK(flipped[0].charge == -0.5);
      CHECK(pw::boundary_winding(omap) == -1);
    }
  }
  SECTION("uniform maps have no singularities") {
    pw::OrientationMap omap;
    omap.grid = pw::GridSpec{8, 8, 1.0};
    omap.preferred.assign(64, 0.77);
    omap.selectivity.assign(64, 0.5);
    CHECK(pw::detect_pinwheels(omap).empty());
    CHECK(pw::boundary_winding(omap) == 0);
  }
  SECTION("default pipeline: quantized charges balancing the boundary") {
    const auto& pipe = fixtures::default_pipeline();
    CHECK(pipe.pins.size() >= 10);
    double net = 0.0;
    for (const auto& p : pipe.pins) {
      CHECK(std::abs(p.charge) == 0.5);
      net += p.charge;
    }
    CHECK(2.0 * net == static_cast<double>(pipe.winding));
  }
}

TEST_CASE("global label rotation shifts the preferred angles") {
  pw::CoherentStateParams base;
  base.lambda = 0.5;
  base.m = 256;
  base.phase = pw::RandomSmoothPhase{};
  const pw::GridSpec grid{64, 64, 2.0 * kPi};
  const double delta = 0.35;

  auto stack = pw::activity_stack(base, pw::OrientationSampleSet{8}, grid,
                                  pw::ActivityMode::RealPart);
  auto shifted = stack;
  shifted.orientations.offset = delta;

  SECTION("vector sum") {
    const auto a = pw::vector_sum_orientation(stack);
    const auto b = pw::vector_sum_orientation(shifted);
    double worst = 0.0;
    for (size_t i = 0; i < a.preferred.size(); ++i) {
      worst = std::max(worst, angular_distance(b.preferred[i], a.preferred[i] + delta));
    }
    CHECK(worst < 1e-9);
  }
  SECTION("argmax relabeling") {
    const auto a = pw::argmax_orientation(stack);
    const auto b = pw::argmax_orientation(shifted);
    double worst = 0.0;
    for (size_t i = 0; i < a.preferred.size(); ++i) {
      worst = std::max(worst, angular_distance(b.preferred[i], a.preferred[i] + delta));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("pinwheel rendering") {
  SECTION("zero angle at full selectivity is pure red") {
    pw::OrientationMap omap;
    omap.grid = pw::GridSpec{8, 8, 1.0};
    omap.preferred.assign(64, 0.0);
    omap.selectivity.assign(64, 1.0);
    const auto img = pw::render_pinwheel_image(omap);
    REQUIRE(img.width == 8);
    REQUIRE(img.height == 8);
    for (size_t i = 0; i < img.pixels.size(); i += 3) {
      CHECK(img.pixels[i] == 255);
      CHECK(img.pixels[i + 1] == 0);
      CHECK(img.pixels[i + 2] == 0);
    }
  }
  SECTION("hue closes continuously at the orientation wrap") {
    pw::OrientationMap omap;
    omap.grid = pw::GridSpec{8, 8, 1.0};
    omap.preferred.assign(64, 1e-9);
    omap.selectivity.assign(64, 1.0);
    const auto near_zero = pw::render_pinwheel_image(omap);
    omap.preferred.assign(64, kPi - 1e-9);
    const auto near_pi = pw::render_pinwheel_image(omap);
    CHECK(near_zero.pixels[0] == 255);
    CHECK(near_pi.pixels[0] == 255);
    CHECK(near_zero.pixels[1] <= 1);
    CHECK(near_zero.pixels[2] == 0);
    CHECK(near_pi.pixels[1] == 0);
    CHECK(near_pi.pixels[2] <= 1);
  }
  SECTION("seeded 64x64 composite matches the stored golden image") {
    pw::CoherentStateParams base;
    base.lambda = 0.5;
    base.m = 256;
    base.phase = pw::RandomSmoothPhase{};
    const pw::GridSpec grid{64, 64, 8.0 * kPi};
    const auto stack = pw::activity_stack(base, pw::OrientationSampleSet{8}, grid,
                                          pw::ActivityMode::RealPart);
    const auto img = pw::render_pinwheel_image(pw::vector_sum_orientation(stack));
    const auto png = pw::encode_png(img);

    const std::string path = std::string(PINWHEEL_TEST_DATA_DIR) + "/golden_pinwheel_64.png";
    const auto golden = pw::read_binary_file(path);
    REQUIRE_FALSE(golden.empty());
    REQUIRE(png.size() == golden.size());
    size_t mismatches = 0;
    for (size_t i = 0; i < png.size(); ++i) {
      if (png[i] != static_cast<std::uint8_t>(golden[i])) ++mismatches;
    }
    CHECK(mismatches == 0);
  }
}
