#include "bmvc/pnp_decoder.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "bmvc/denoiser.hpp"
#include "bmvc/metrics.hpp"

namespace bmvc {

namespace {

Frame clip01(Frame f) {
  for (double& v : f.data) v = std::clamp(v, 0.0, 1.0);
  return f;
}

double residual_l2(const BmvcOperator& op, const Frame& v, const Measurement& y) {
  const Measurement fv = apply(op, v);
  double s = 0.0;
  for (size_t i = 0; i < y.values.size(); ++i) {
    const double d = y.values[i] - fv.values[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

DecodeResult decode(const Measurement& y, const BmvcOperator& op, const DecodeConfig& cfg,
                    const Frame* init, const Frame* reference) {
  validate(cfg);
  if (y.block_h != op.geom.block_h || y.block_w != op.geom.block_w)
    throw DimensionError("decode: measurement dims do not match operator");
  if (op.lut.max_r < 1) throw DataError("decode: degenerate mask, no pixel is measured");

  Frame v;
  if (init) {
    if (init->height != op.geom.frame_h || init->width != op.geom.frame_w)
      throw DimensionError("decode: init dims do not match operator");
    v = *init;
  } else {
    // Mask-normalized backprojection v0 = Phi^T R+ y: recovers the input
    // exactly when every pixel is measured once (Cr = 1).
    Measurement scaled = y;
    for (size_t i = 0; i < scaled.values.size(); ++i)
      scaled.values[i] = op.lut.r[i] > 0 ? scaled.values[i] / op.lut.r[i] : 0.0;
    v = apply_adjoint(op, scaled);
  }

  DecodeResult result;
  int iteration = 0;
  for (const auto& [sigma, count] : cfg.sigma_schedule)
    for (int k = 0; k < count; ++k) {
      Frame x = gap_project(op, v, y);
      v = denoise(x, DenoiseStrength{sigma}, cfg.denoiser);
      TracePoint tp;
      tp.iteration = ++iteration;
      tp.residual_l2 = residual_l2(op, v, y);
      tp.sigma = sigma;
      if (reference) {
        tp.psnr = psnr(*reference, clip01(v));
        tp.has_psnr = true;
      }
      result.trace.push_back(tp);
    }

  result.frame = clip01(std::move(v));
  return result;
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace) {
  bool with_psnr = false;
  for (const TracePoint& tp : trace) with_psnr = with_psnr || tp.has_psnr;
  out << (with_psnr ? "iteration,residual,sigma,psnr\n" : "iteration,residual,sigma\n");
  for (const TracePoint& tp : trace) {
    out << tp.iteration << ',' << tp.residual_l2 << ',' << tp.sigma;
    if (with_psnr) out << ',' << tp.psnr;
    out << '\n';
  }
}

}  // namespace bmvc
