#pragma once

#include "bmvc/types.hpp"

namespace bmvc {

// Noise level in 0-255 intensity units; mapped internally to the [0,1]
// domain as sigma/255.
struct DenoiseStrength {
  double sigma = 0.0;
};

// sigma -> TV weight mapping, calibrated once and pinned.
inline constexpr double kTvLambdaPerSigma = 0.5;

// Dual (fast gradient projection) iterations per TV call. Fixed count, no
// stopping test: outputs are deterministic and reproducible.
inline constexpr int kTvIterations = 100;

// Anisotropic total variation: sum of |forward differences| in both
// directions, zero flux across the image border.
double tv_value(const Frame& x);

// argmin_u 1/2 ||u - x||^2 + lambda * TV(u), solved in the dual with FISTA
// acceleration. Conserves the image mean exactly.
Frame tv_denoise(const Frame& x, double lambda, int iterations = kTvIterations);

// Classic non-local means: 5x5 patches, 11x11 search window.
Frame nlm_denoise(const Frame& x, double sigma_unit);

// The pluggable prior step of the decoder.
Frame denoise(const Frame& x, DenoiseStrength strength, DenoiserKind kind);

}  // namespace bmvc
