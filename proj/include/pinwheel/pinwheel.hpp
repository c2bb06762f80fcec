#pragma once

// Umbrella header: SE(2) geometry, circle operators, coherent states, field
// synthesis, orientation maps, spectra, validation, and export helpers.

#include "pinwheel/circle.hpp"
#include "pinwheel/coherent.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/fft.hpp"
#include "pinwheel/image.hpp"
#include "pinwheel/io.hpp"
#include "pinwheel/operators.hpp"
#include "pinwheel/orientation.hpp"
#include "pinwheel/parallel.hpp"
#include "pinwheel/rng.hpp"
#include "pinwheel/se2.hpp"
#include "pinwheel/spectrum.hpp"
#include "pinwheel/synthesis.hpp"
#include "pinwheel/validation.hpp"
