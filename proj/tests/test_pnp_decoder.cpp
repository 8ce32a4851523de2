#include <cmath>
#include <sstream>
#include <vector>

#include "bmvc/forward_operator.hpp"
#include "bmvc/metrics.hpp"
#include "bmvc/pnp_decoder.hpp"
#include "bmvc/synthetic.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bmvc;

namespace {

BmvcOperator make_op(std::uint64_t seed, int h, int w, int bh, int bw) {
  const MaskPlane m = generate_mask(seed, h, w);
  return BmvcOperator::build(m, make_geometry(h, w, bh, bw));
}

DecodeConfig identity_cfg(int iters) {
  DecodeConfig cfg;
  cfg.denoiser = DenoiserKind::identity;
  cfg.sigma_schedule = {{1.0, iters}};
  return cfg;
}

}  // namespace

TEST_CASE("single-block stream with a full mask decodes exactly") {
  MaskPlane ones;
  ones.height = 6;
  ones.width = 6;
  ones.bits.assign(36, 1);
  const BmvcOperator op = BmvcOperator::build(ones, make_geometry(6, 6, 6, 6));

  const Frame x = testutil::random_frame(6, 6, 3);
  const Measurement y = apply(op, x);

  const DecodeResult res = decode(y, op, identity_cfg(1));
  for (int i = 0; i < 36; ++i)
    CHECK(std::abs(res.frame.data[i] - x.data[i]) <= 1e-12);
}

TEST_CASE("identity denoiser makes the projection a fixed point") {
  const BmvcOperator op = make_op(6, 16, 16, 8, 8);
  const Frame x = testutil::random_frame(16, 16, 60);
  const Measurement y = apply(op, x);

  const DecodeResult res = decode(y, op, identity_cfg(5));

  // after the first projection every later iterate is identical, so the
  // residual trace is flat and tiny
  REQUIRE(res.trace.size() == 5);
  for (const auto& t : res.trace) CHECK(t.residual_l2 <= 1e-10);
}

TEST_CASE("trace follows the sigma schedule") {
  const BmvcOperator op = make_op(14, 8, 8, 4, 4);
  const Measurement y = apply(op, testutil::random_frame(8, 8, 1));

  DecodeConfig cfg;
  cfg.sigma_schedule = {{20.0, 2}, {10.0, 3}, {5.0, 1}};
  const DecodeResult res = decode(y, op, cfg);
  REQUIRE(res.trace.size() == 6);
  const std::vector<double> want = {20, 20, 10, 10, 10, 5};
  for (int i = 0; i < 6; ++i) {
    CHECK(res.trace[i].iteration == i + 1);
    CHECK(res.trace[i].sigma == want[i]);
    CHECK_FALSE(res.trace[i].has_psnr);
  }
}

TEST_CASE("decoding is deterministic") {
  const BmvcOperator op = make_op(23, 16, 16, 4, 4);
  const Measurement y = apply(op, synthetic_frame(16, 16, 5));
  DecodeConfig cfg;
  cfg.sigma_schedule = {{20.0, 4}, {10.0, 4}};
  const DecodeResult a = decode(y, op, cfg);
  const DecodeResult b = decode(y, op, cfg);
  CHECK(a.frame.data == b.frame.data);
  for (size_t i = 0; i < a.trace.size(); ++i)
    CHECK(a.trace[i].residual_l2 == b.trace[i].residual_l2);
}

TEST_CASE("reconstruction beats the raw initialization on a real instance") {
  const BmvcOperator op = make_op(42, 64, 64, 32, 32);
  const Frame x = synthetic_frame(64, 64, 7);
  const Measurement y = apply(op, x);

  // the zero-iteration baseline: mask-normalized backprojection
  const Frame v0 = decode(y, op, identity_cfg(1)).frame;

  const DecodeResult res = decode(y, op, DecodeConfig{});
  const double p0 = psnr(x, v0);
  const double p1 = psnr(x, res.frame);
  CHECK(p1 >= p0 + 5.0);
  CHECK(p1 > 20.0);
}

TEST_CASE("optional reference adds psnr to the trace") {
  const BmvcOperator op = make_op(31, 8, 8, 4, 4);
  const Frame x = testutil::random_frame(8, 8, 70);
  const Measurement y = apply(op, x);
  DecodeConfig cfg;
  cfg.sigma_schedule = {{10.0, 3}};
  const DecodeResult res = decode(y, op, cfg, nullptr, &x);
  for (const auto& t : res.trace) {
    CHECK(t.has_psnr);
    CHECK(std::isfinite(t.psnr));
  }
}

TEST_CASE("warm start is honored") {
  const BmvcOperator op = make_op(77, 8, 8, 2, 2);
  const Frame x = testutil::random_frame(8, 8, 71);
  const Measurement y = apply(op, x);

  // warm-starting at the truth with an identity denoiser stays at the truth
  const DecodeResult res = decode(y, op, identity_cfg(1), &x);
  for (size_t i = 0; i < x.data.size(); ++i)
    CHECK(std::abs(res.frame.data[i] - x.data[i]) <= 1e-12);
}

TEST_CASE("output is clipped to the unit range") {
  const BmvcOperator op = make_op(15, 16, 16, 8, 8);
  const Measurement y = apply(op, synthetic_frame(16, 16, 2));
  const DecodeResult res = decode(y, op, DecodeConfig{});
  for (double v : res.frame.data) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("measurement residual after a projection is zero on all pixels") {
  const BmvcOperator op = make_op(4, 32, 32, 16, 16);
  const Measurement y = apply(op, synthetic_frame(32, 32, 11));
  const Frame rec = decode(y, op, identity_cfg(1)).frame;
  const Measurement back = apply(op, rec);
  double worst = 0.0;
  for (size_t i = 0; i < y.values.size(); ++i)
    worst = std::max(worst, std::abs(back.values[i] - y.values[i]));
  CHECK(worst <= 1e-8 * op.y_max);
}

TEST_CASE("decode validates inputs") {
  const BmvcOperator op = make_op(9, 8, 8, 4, 4);
  const Measurement y(4, 4);

  DecodeConfig empty;
  empty.sigma_schedule.clear();
  CHECK_THROWS_AS(decode(y, op, empty), ConfigError);

  CHECK_THROWS_AS(decode(Measurement(2, 2), op, DecodeConfig{}),
                  DimensionError);

  Frame bad_init(4, 4);
  CHECK_THROWS_AS(decode(y, op, DecodeConfig{}, &bad_init), DimensionError);

  // a degenerate mask cannot support decoding at all
  MaskPlane zeros;
  zeros.height = 4;
  zeros.width = 4;
  zeros.bits.assign(16, 0);
  const BmvcOperator dead = BmvcOperator::build(zeros, make_geometry(4, 4, 2, 2));
  CHECK_THROWS_AS(decode(Measurement(2, 2), dead, DecodeConfig{}), DataError);
}

TEST_CASE("trace CSV layout") {
  TracePoint a{1, 0.5, 20.0, 0.0, false};
  TracePoint b{2, 0.25, 20.0, 31.5, true};

  std::ostringstream plain;
  write_trace_csv(plain, {a});
  CHECK(plain.str().substr(0, 25) == "iteration,residual,sigma\n");

  std::ostringstream with_psnr;
  write_trace_csv(with_psnr, {a, b});
  const std::string s = with_psnr.str();
  CHECK(s.substr(0, 30) == "iteration,residual,sigma,psnr\n");
  CHECK(s.find("\n2,0.25,20,31.5\n") != std::string::npos);
}
