#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "bmvc/baselines.hpp"
#include "bmvc/forward_operator.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bmvc;

namespace {

DecodeConfig identity_cfg(int iters) {
  DecodeConfig cfg;
  cfg.denoiser = DenoiserKind::identity;
  cfg.sigma_schedule = {{1.0, iters}};
  return cfg;
}

}  // namespace

// Frozen sampling patterns (pinned PRNG + partial Fisher-Yates, sorted).
TEST_CASE("random ds pattern for seed 123 on 8x8") {
  const RandomDsPattern p8 = make_random_ds(123, 8, 8, 8);
  const std::vector<std::int32_t> want8 = {23, 35, 37, 38, 47, 51, 57, 61};
  CHECK(p8.indices == want8);

  const RandomDsPattern p16 = make_random_ds(123, 8, 8, 16);
  const std::vector<std::int32_t> want16 = {5,  11, 23, 24, 35, 36, 37, 38,
                                            44, 47, 49, 51, 56, 57, 61, 63};
  CHECK(p16.indices == want16);
}

TEST_CASE("random ds pattern invariants") {
  const RandomDsPattern p = make_random_ds(9, 16, 12, 48);
  REQUIRE(p.indices.size() == 48);
  std::set<std::int32_t> uniq(p.indices.begin(), p.indices.end());
  CHECK(uniq.size() == 48);
  CHECK(std::is_sorted(p.indices.begin(), p.indices.end()));
  CHECK(p.indices.front() >= 0);
  CHECK(p.indices.back() < 16 * 12);

  // deterministic in seed
  CHECK(make_random_ds(9, 16, 12, 48).indices == p.indices);
  CHECK(make_random_ds(10, 16, 12, 48).indices != p.indices);
}

TEST_CASE("random ds at full rate is lossless") {
  const RandomDsPattern p = make_random_ds(4, 6, 6, 36);
  const Frame x = testutil::random_frame(6, 6, 80);
  const auto samples = random_ds_encode(x, p);
  const DecodeResult res = random_ds_decode(samples, p, identity_cfg(1));
  for (int i = 0; i < 36; ++i) CHECK(res.frame.data[i] == x.data[i]);
}

TEST_CASE("random ds with identity denoiser keeps samples, zeros the rest") {
  const RandomDsPattern p = make_random_ds(11, 8, 8, 16);
  const Frame x = testutil::random_frame(8, 8, 81);
  const auto samples = random_ds_encode(x, p);
  const DecodeResult res = random_ds_decode(samples, p, identity_cfg(3));

  std::set<std::int32_t> sampled(p.indices.begin(), p.indices.end());
  for (int i = 0; i < 64; ++i) {
    if (sampled.count(i))
      CHECK(res.frame.data[i] == x.data[i]);
    else
      CHECK(res.frame.data[i] == 0.0);
  }
  // the projection is a fixed point, so residuals vanish
  for (const auto& t : res.trace) CHECK(t.residual_l2 == 0.0);
}

TEST_CASE("random ds validates arguments") {
  CHECK_THROWS_AS(make_random_ds(1, 8, 8, 0), ConfigError);
  CHECK_THROWS_AS(make_random_ds(1, 8, 8, 65), ConfigError);
  CHECK_THROWS_AS(make_random_ds(1, 0, 8, 4), GeometryError);

  const RandomDsPattern p = make_random_ds(1, 8, 8, 4);
  CHECK_THROWS_AS(random_ds_encode(Frame(8, 4), p), DimensionError);
  CHECK_THROWS_AS(random_ds_decode(std::vector<double>(3, 0.0), p, identity_cfg(1)),
                  DimensionError);
}

TEST_CASE("block cs with selection rows resets the selected pixels") {
  // A picks pixels 0..m-1, so A A^T = I and the projection is a plain reset.
  constexpr int m = 5;
  std::vector<std::uint8_t> a(m * BlockCsOperator::kBlockPixels, 0);
  for (int i = 0; i < m; ++i) a[static_cast<size_t>(i) * BlockCsOperator::kBlockPixels + i] = 1;
  const BlockCsOperator op = BlockCsOperator::from_matrix(a, m);
  CHECK(op.y_max == 1.0);

  std::vector<double> x(BlockCsOperator::kBlockPixels, 0.25);
  const double y[m] = {0.9, 0.8, 0.7, 0.6, 0.5};
  op.project_block(x.data(), y);
  for (int i = 0; i < m; ++i) CHECK(x[i] == doctest::Approx(y[i]).epsilon(1e-12));
  for (size_t k = m; k < x.size(); ++k) CHECK(x[k] == 0.25);
}

TEST_CASE("block cs encode matches a dense multiply") {
  const BlockCsOperator op = BlockCsOperator::build(5, 36);
  const Frame x = testutil::random_frame(24, 24, 6);
  const auto y = block_cs_encode(x, op);
  REQUIRE(y.size() == 36);
  for (int i = 0; i < 36; ++i) {
    double want = 0.0;
    for (int k = 0; k < BlockCsOperator::kBlockPixels; ++k)
      want += op.matrix[static_cast<size_t>(i) * BlockCsOperator::kBlockPixels + k] * x.data[k];
    CHECK(std::abs(y[i] - want) <= 1e-12);
  }
}

TEST_CASE("block cs at full rank recovers the block exactly") {
  const BlockCsOperator op = BlockCsOperator::build(7, BlockCsOperator::kBlockPixels);
  const Frame x = testutil::random_frame(24, 24, 12);
  const auto y = block_cs_encode(x, op);
  const DecodeResult res = block_cs_decode(y, op, 24, 24, identity_cfg(1));
  // "exact" up to the conditioning of the 576x576 normal equations
  for (size_t i = 0; i < x.data.size(); ++i)
    CHECK(std::abs(res.frame.data[i] - x.data[i]) <= 1e-6);
}

TEST_CASE("block cs projection lands on the measurements") {
  const BlockCsOperator op = BlockCsOperator::build(3, 144);
  const Frame x = testutil::random_frame(48, 24, 13);
  const auto y = block_cs_encode(x, op);
  // project an arbitrary start onto {v : A v = y}, block by block (the
  // decoder does the same internally but clips its final output)
  Frame v(48, 24, 0.25);
  std::vector<double> block(BlockCsOperator::kBlockPixels);
  for (int b = 0; b < 2; ++b) {
    for (int r = 0; r < 24; ++r)
      for (int c = 0; c < 24; ++c) block[static_cast<size_t>(r) * 24 + c] = v.at(b * 24 + r, c);
    op.project_block(block.data(), y.data() + static_cast<size_t>(b) * op.m);
    for (int r = 0; r < 24; ++r)
      for (int c = 0; c < 24; ++c) v.at(b * 24 + r, c) = block[static_cast<size_t>(r) * 24 + c];
  }
  const auto back = block_cs_encode(v, op);
  for (size_t i = 0; i < y.size(); ++i) CHECK(std::abs(back[i] - y[i]) <= 1e-8);
}

TEST_CASE("block cs addition count and scale bookkeeping") {
  const BlockCsOperator op = BlockCsOperator::build(21, 36);
  std::uint64_t ones = 0;
  int max_row = 0;
  for (int i = 0; i < op.m; ++i) {
    int row = 0;
    for (int k = 0; k < BlockCsOperator::kBlockPixels; ++k)
      row += op.matrix[static_cast<size_t>(i) * BlockCsOperator::kBlockPixels + k];
    ones += row;
    max_row = std::max(max_row, row);
  }
  CHECK(op.y_max == static_cast<double>(max_row));

  const Frame x = testutil::random_frame(48, 48, 14);  // 4 blocks
  OpCounters ops;
  block_cs_encode(x, op, &ops);
  CHECK(ops.additions == 4 * ones);
  CHECK(ops.multiplications == 0);
}

TEST_CASE("block cs validates arguments") {
  CHECK_THROWS_AS(BlockCsOperator::build(1, 0), ConfigError);
  CHECK_THROWS_AS(BlockCsOperator::build(1, 577), ConfigError);

  CHECK_THROWS_AS(
      BlockCsOperator::from_matrix(std::vector<std::uint8_t>(100, 1), 5),
      DimensionError);

  // two identical rows: A A^T singular
  std::vector<std::uint8_t> dup(2 * BlockCsOperator::kBlockPixels, 1);
  CHECK_THROWS_AS(BlockCsOperator::from_matrix(dup, 2), DataError);

  const BlockCsOperator op = BlockCsOperator::build(2, 36);
  CHECK_THROWS_AS(block_cs_encode(Frame(25, 24), op), GeometryError);
  CHECK_THROWS_AS(
      block_cs_decode(std::vector<double>(35, 0.0), op, 24, 24, identity_cfg(1)),
      DimensionError);
}

TEST_CASE("build records resampling in final_seed") {
  const BlockCsOperator op = BlockCsOperator::build(17, 36);
  CHECK(op.seed == 17);
  CHECK(op.final_seed >= op.seed);
  CHECK(op.final_seed < op.seed + 64);
}

// The structural point of the comparison: summed-diagonal measurements stay
// small (max block count per pixel) while dense binary rows sum hundreds of
// pixels, so block CS burns far more quantizer range.
TEST_CASE("block cs needs a much larger scale at matched compression") {
  const MaskPlane m = generate_mask(42, 240, 240);
  const BmvcOperator diag = BmvcOperator::build(m, make_geometry(240, 240, 60, 60));
  const BlockCsOperator dense = BlockCsOperator::build(42, 36);  // Cr = 16 both
  CHECK(dense.y_max > 10.0 * diag.y_max);
}
