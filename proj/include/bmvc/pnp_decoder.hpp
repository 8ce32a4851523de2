#pragma once

#include <iosfwd>
#include <vector>

#include "bmvc/forward_operator.hpp"
#include "bmvc/types.hpp"

namespace bmvc {

// One row per iteration: the data residual exposes non-convergence instead of
// letting the final clip hide it. psnr is filled only when a reference frame
// was supplied.
struct TracePoint {
  int iteration = 0;
  double residual_l2 = 0.0;
  double sigma = 0.0;
  double psnr = 0.0;
  bool has_psnr = false;
};

struct DecodeResult {
  Frame frame;
  std::vector<TracePoint> trace;
};

// Plug-and-play decoding: alternate the projection x = v + Phi^T R+ (y - Phi v)
// with a denoise step, walking the sigma schedule. Starts from the
// mask-normalized backprojection v0 = Phi^T R+ y unless `init` is given.
// Output is clipped to [0,1] at the end only.
DecodeResult decode(const Measurement& y, const BmvcOperator& op, const DecodeConfig& cfg,
                    const Frame* init = nullptr, const Frame* reference = nullptr);

// columns: iteration,residual,sigma[,psnr]
void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace);

}  // namespace bmvc
