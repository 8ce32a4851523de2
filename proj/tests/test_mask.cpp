#include <cstdint>
#include <vector>

#include "bmvc/mask.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bmvc;

// Frozen output of the pinned bit stream (seed 42, row-major, one top bit per
// pixel).  Any change to the generator breaks decode of existing streams, so
// this is an exact bit-for-bit check.
TEST_CASE("mask bits for seed 42 on a 4x4 frame") {
  const MaskPlane m = generate_mask(42, 4, 4);
  const std::vector<std::uint8_t> want = {0, 0, 1, 1, 1, 1, 1, 1,
                                          1, 1, 1, 0, 1, 0, 1, 1};
  REQUIRE(m.bits.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) CHECK(m.bits[i] == want[i]);
}

TEST_CASE("mask is deterministic and seed-sensitive") {
  const MaskPlane a = generate_mask(7, 8, 8);
  const MaskPlane b = generate_mask(7, 8, 8);
  const MaskPlane c = generate_mask(8, 8, 8);
  CHECK(a.bits == b.bits);
  CHECK(a.bits != c.bits);
}

// Hand-checkable LUT on an explicit 4x4 mask split into 2x2 blocks.  Per
// block the in-block patterns are b0=[1,0,0,1], b1=[1,1,1,0], b2=[1,1,0,0],
// b3=[0,0,1,1], so the contributing-block list per in-block position can be
// read straight off.
TEST_CASE("LUT on a hand-built 4x4 mask") {
  MaskPlane m;
  m.height = 4;
  m.width = 4;
  m.bits = {1, 0, 1, 1,  //
            0, 1, 1, 0,  //
            1, 1, 0, 0,  //
            0, 0, 1, 1};
  const BlockGeometry g = make_geometry(4, 4, 2, 2);
  const MaskLut lut = build_lut(m, g);

  REQUIRE(lut.pixels() == 4);
  REQUIRE(lut.start.size() == 5);

  const std::vector<std::vector<int>> want = {
      {0, 1, 2}, {1, 2}, {1, 3}, {0, 3}};
  const std::vector<int> want_r = {3, 2, 2, 2};
  for (int p = 0; p < 4; ++p) {
    CHECK(lut.r[p] == want_r[p]);
    const int n = lut.start[p + 1] - lut.start[p];
    REQUIRE(n == static_cast<int>(want[p].size()));
    for (int k = 0; k < n; ++k)
      CHECK(lut.blocks[lut.start[p] + k] == want[p][k]);
  }
  CHECK(lut.max_r == 3);
  CHECK_FALSE(lut.has_zero_r);
}

// Same check on the generated seed-42 mask; the lists follow from the frozen
// bits above and the fixed block layout.
TEST_CASE("LUT on the 4x4 seed-42 mask") {
  const MaskPlane m = generate_mask(42, 4, 4);
  const BlockGeometry g = make_geometry(4, 4, 2, 2);
  const MaskLut lut = build_lut(m, g);

  const std::vector<std::vector<int>> want = {
      {1, 2, 3}, {1, 2}, {0, 1, 2, 3}, {0, 1, 3}};
  const std::vector<int> want_r = {3, 2, 4, 3};
  for (int p = 0; p < 4; ++p) {
    CHECK(lut.r[p] == want_r[p]);
    const int n = lut.start[p + 1] - lut.start[p];
    REQUIRE(n == static_cast<int>(want[p].size()));
    for (int k = 0; k < n; ++k)
      CHECK(lut.blocks[lut.start[p] + k] == want[p][k]);
  }
  CHECK(lut.max_r == 4);
  CHECK_FALSE(lut.has_zero_r);
}

TEST_CASE("LUT block lists are sorted ascending") {
  const MaskPlane m = generate_mask(3, 24, 24);
  const BlockGeometry g = make_geometry(24, 24, 6, 6);
  const MaskLut lut = build_lut(m, g);
  for (int p = 0; p < lut.pixels(); ++p)
    for (int k = lut.start[p] + 1; k < lut.start[p + 1]; ++k)
      CHECK(lut.blocks[k - 1] < lut.blocks[k]);
}

TEST_CASE("all-ones and all-zeros masks") {
  MaskPlane ones;
  ones.height = 4;
  ones.width = 4;
  ones.bits.assign(16, 1);
  const BlockGeometry g = make_geometry(4, 4, 2, 2);
  const MaskLut lo = build_lut(ones, g);
  for (int p = 0; p < 4; ++p) CHECK(lo.r[p] == 4);
  CHECK(lo.max_r == 4);
  CHECK_FALSE(lo.has_zero_r);
  CHECK(static_cast<int>(lo.blocks.size()) == 16);

  MaskPlane zeros = ones;
  zeros.bits.assign(16, 0);
  const MaskLut lz = build_lut(zeros, g);
  for (int p = 0; p < 4; ++p) CHECK(lz.r[p] == 0);
  CHECK(lz.max_r == 0);
  CHECK(lz.has_zero_r);
  CHECK(lz.blocks.empty());
}

// r must equal the diagonal of Phi Phi^T computed from a dense rebuild of the
// operator matrix.
TEST_CASE("r matches the dense Gram diagonal") {
  for (std::uint64_t seed : {1ULL, 9ULL, 77ULL}) {
    const MaskPlane m = generate_mask(seed, 8, 12);
    const BlockGeometry g = make_geometry(8, 12, 4, 4);
    const MaskLut lut = build_lut(m, g);
    const auto phi = testutil::dense_phi(m, g);
    const int rows = g.block_pixels();
    const int cols = g.frame_pixels();
    for (int i = 0; i < rows; ++i) {
      double diag = 0.0;
      for (int j = 0; j < cols; ++j)
        diag += phi[static_cast<size_t>(i) * cols + j] *
                phi[static_cast<size_t>(i) * cols + j];
      CHECK(static_cast<double>(lut.r[i]) == diag);
    }
  }
}

TEST_CASE("LUT size bookkeeping: entries equal mask ones") {
  const MaskPlane m = generate_mask(11, 16, 16);
  const BlockGeometry g = make_geometry(16, 16, 4, 4);
  const MaskLut lut = build_lut(m, g);
  int ones = 0;
  for (auto b : m.bits) ones += b;
  CHECK(static_cast<int>(lut.blocks.size()) == ones);
}

// The bit stream should be unbiased: at HD resolution the ones fraction
// concentrates tightly around 1/2 (stderr ~ 0.00035, so 0.004 is ~11 sigma).
TEST_CASE("ones fraction is close to one half at scale") {
  const MaskPlane m = generate_mask(42, 1080, 1920);
  double ones = 0;
  for (auto b : m.bits) ones += b;
  const double frac = ones / static_cast<double>(m.bits.size());
  CHECK(frac > 0.496);
  CHECK(frac < 0.504);
}

TEST_CASE("mask dims must match geometry when building the LUT") {
  const MaskPlane m = generate_mask(1, 8, 8);
  const BlockGeometry g = make_geometry(8, 12, 4, 4);
  CHECK_THROWS_AS(build_lut(m, g), DimensionError);
}
