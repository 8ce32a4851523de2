#pragma once

#include <vector>

#include "bmvc/mask.hpp"
#include "bmvc/types.hpp"

namespace bmvc {

// The sensing matrix Phi in operator form. Phi is a concatenation of diagonal
// blocks (one per image block), so Phi Phi^T is diagonal with entries r_i and
// everything here is element-wise: no matrix is ever materialized.
struct BmvcOperator {
  BlockGeometry geom;
  MaskPlane mask;
  MaskLut lut;
  double y_max = 0.0;  // max_i r_i

  static BmvcOperator build(const MaskPlane& mask, const BlockGeometry& geom);
};

// Phi x — identical to encoder::encode (shared kernel).
Measurement apply(const BmvcOperator& op, const Frame& x);

// Phi^T y: frame pixel p receives y at p's in-block position iff the mask is
// set at p.
Frame apply_adjoint(const BmvcOperator& op, const Measurement& y);

// Euclidean projection of v onto {x : Phi x = y}:
//   x = v + Phi^T R+ (y - Phi v),  R+ = diag(1/r_i, or 0 where r_i = 0).
// Where r_i > 0 the result satisfies (Phi x)_i = y_i exactly; r_i = 0 pixels
// carry no measurement and are left at v.
Frame gap_project(const BmvcOperator& op, const Frame& v, const Measurement& y);

}  // namespace bmvc
