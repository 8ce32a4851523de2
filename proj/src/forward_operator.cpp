#include "bmvc/forward_operator.hpp"

#include "lut_kernel.hpp"

namespace bmvc {

BmvcOperator BmvcOperator::build(const MaskPlane& mask, const BlockGeometry& geom) {
  BmvcOperator op;
  op.geom = geom;
  op.mask = mask;
  op.lut = build_lut(mask, geom);  // validates dims
  op.y_max = op.lut.max_r;
  return op;
}

Measurement apply(const BmvcOperator& op, const Frame& x) {
  if (x.height != op.geom.frame_h || x.width != op.geom.frame_w)
    throw DimensionError("apply: frame dims do not match operator");
  Measurement y(op.geom.block_h, op.geom.block_w);
  detail::lut_forward(x.data.data(), op.lut, op.geom, y.values.data(), nullptr);
  return y;
}

Frame apply_adjoint(const BmvcOperator& op, const Measurement& y) {
  if (y.block_h != op.geom.block_h || y.block_w != op.geom.block_w)
    throw DimensionError("adjoint: measurement dims do not match operator");
  const BlockGeometry& g = op.geom;
  Frame x(g.frame_h, g.frame_w);
  // Every frame pixel belongs to exactly one (block, in-block) pair, so the
  // scatter is a masked broadcast of y over the block tiling.
  for (int r = 0; r < g.frame_h; ++r) {
    const int ir = r % g.block_h;
    for (int c = 0; c < g.frame_w; ++c) {
      const size_t p = static_cast<size_t>(r) * g.frame_w + c;
      if (op.mask.bits[p]) x.data[p] = y.values[static_cast<size_t>(ir) * g.block_w + c % g.block_w];
    }
  }
  return x;
}

Frame gap_project(const BmvcOperator& op, const Frame& v, const Measurement& y) {
  if (v.height != op.geom.frame_h || v.width != op.geom.frame_w)
    throw DimensionError("gap_project: frame dims do not match operator");
  if (y.block_h != op.geom.block_h || y.block_w != op.geom.block_w)
    throw DimensionError("gap_project: measurement dims do not match operator");

  const BlockGeometry& g = op.geom;
  Measurement fv = apply(op, v);
  // d = R+ (y - Phi v); pixels with r_i = 0 carry no measurement, d_i = 0.
  std::vector<double> d(fv.values.size());
  for (size_t i = 0; i < d.size(); ++i)
    d[i] = op.lut.r[i] > 0 ? (y.values[i] - fv.values[i]) / op.lut.r[i] : 0.0;

  Frame x = v;
  for (int r = 0; r < g.frame_h; ++r) {
    const int ir = r % g.block_h;
    for (int c = 0; c < g.frame_w; ++c) {
      const size_t p = static_cast<size_t>(r) * g.frame_w + c;
      if (op.mask.bits[p]) x.data[p] += d[static_cast<size_t>(ir) * g.block_w + c % g.block_w];
    }
  }
  return x;
}

}  // namespace bmvc
