#pragma once

#include "bmvc/types.hpp"

namespace bmvc {

// 10 log10(1 / MSE) for [0,1] images; identical frames give +infinity.
double psnr(const Frame& ref, const Frame& test);

// Standard SSIM: K1=0.01, K2=0.03, L=1, 11x11 Gaussian window sigma=1.5,
// averaged over valid (fully interior) windows. Needs min dim >= 11.
double ssim(const Frame& ref, const Frame& test);

}  // namespace bmvc
