#pragma once

#include <cstdint>

#include "bmvc/color.hpp"
#include "bmvc/types.hpp"

namespace bmvc {

// Deterministic piecewise-smooth test images: a slow cosine background with a
// few constant disks and rectangles, values kept inside [0.02, 0.98]. Used by
// the test suite and the `testset` command.
Frame synthetic_frame(int height, int width, std::uint64_t seed);

ColorImage synthetic_color(int height, int width, std::uint64_t seed);

}  // namespace bmvc
