#pragma once

// Lazily built shared pipeline outputs for the seeded default configuration,
// so the expensive 256x256 synthesis runs once per test binary.

#include "pinwheel/orientation.hpp"

namespace fixtures {

struct DefaultPipeline {
  pinwheel::ActivityStack stack;
  pinwheel::OrientationMap vec;
  pinwheel::OrientationMap arg;
  pinwheel::PinwheelList pins;
  long winding = 0;
};

inline const DefaultPipeline& default_pipeline() {
  static const DefaultPipeline p = [] {
    pinwheel::CoherentStateParams base;
    base.omega = 1.0;
    base.lambda = 0.5;
    base.m = 256;
    base.phase = pinwheel::RandomSmoothPhase{};
    const pinwheel::GridSpec grid{256, 256, 8.0 * std::numbers::pi};
    DefaultPipeline out;
    out.stack = pinwheel::activity_stack(base, pinwheel::OrientationSampleSet{8},
                                         grid, pinwheel::ActivityMode::RealPart);
    out.vec = pinwheel::vector_sum_orientation(out.stack);
    out.arg = pinwheel::argmax_orientation(out.stack);
    out.pins = pinwheel::detect_pinwheels(out.vec);
    out.winding = pinwheel::boundary_winding(out.vec);
    return out;
  }();
  return p;
}

}  // namespace fixtures
