#include "bmvc/denoiser.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bmvc {

double tv_value(const Frame& x) {
  const int h = x.height, w = x.width;
  double s = 0.0;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) {
      const size_t k = static_cast<size_t>(i) * w + j;
      if (j + 1 < w) s += std::abs(x.data[k + 1] - x.data[k]);
      if (i + 1 < h) s += std::abs(x.data[k + w] - x.data[k]);
    }
  return s;
}

// Dual formulation: u = x + lambda * div(p,q) with |p|,|q| <= 1 pointwise;
// fast (FISTA-accelerated) projected gradient on the dual, step 1/(8 lambda)
// from the Lipschitz bound of the discrete Laplacian. The divergence
// telescopes to zero total flux, so the mean of u equals the mean of x.
Frame tv_denoise(const Frame& x, double lambda, int iterations) {
  if (lambda <= 0.0) return x;
  const int h = x.height, w = x.width;
  const size_t n = x.size();
  std::vector<double> p(n, 0.0), q(n, 0.0), rp(n, 0.0), rq(n, 0.0), pn(n), qn(n), u(n);
  const double step = 1.0 / (8.0 * lambda);

  auto primal_from = [&](const std::vector<double>& a, const std::vector<double>& b) {
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < w; ++j) {
        const size_t k = static_cast<size_t>(i) * w + j;
        double d = a[k] + b[k];
        if (j > 0) d -= a[k - 1];
        if (i > 0) d -= b[k - w];
        u[k] = x.data[k] + lambda * d;
      }
  };

  double t = 1.0;
  for (int it = 0; it < iterations; ++it) {
    primal_from(rp, rq);
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < w; ++j) {
        const size_t k = static_cast<size_t>(i) * w + j;
        // Forward differences; the dual field is structurally zero on the
        // last column/row (zero flux across the border).
        pn[k] = j + 1 < w ? std::clamp(rp[k] + step * (u[k + 1] - u[k]), -1.0, 1.0) : 0.0;
        qn[k] = i + 1 < h ? std::clamp(rq[k] + step * (u[k + w] - u[k]), -1.0, 1.0) : 0.0;
      }
    const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double beta = (t - 1.0) / tn;
    for (size_t k = 0; k < n; ++k) {
      rp[k] = pn[k] + beta * (pn[k] - p[k]);
      rq[k] = qn[k] + beta * (qn[k] - q[k]);
    }
    p.swap(pn);
    q.swap(qn);
    t = tn;
  }
  primal_from(p, q);

  Frame out(h, w);
  out.data = std::move(u);
  return out;
}

Frame nlm_denoise(const Frame& x, double sigma_unit) {
  if (sigma_unit <= 0.0) return x;
  constexpr int kPatch = 2;   // 5x5 patches
  constexpr int kSearch = 5;  // 11x11 window
  const int h = x.height, w = x.width;
  const double sigma2 = sigma_unit * sigma_unit;
  const double inv_h2 = 1.0 / (0.16 * sigma2);  // filtering bandwidth 0.4 sigma
  const double patch_norm = 1.0 / ((2 * kPatch + 1) * (2 * kPatch + 1));

  auto at = [&](int r, int c) {  // clamped border
    return x.data[static_cast<size_t>(std::clamp(r, 0, h - 1)) * w + std::clamp(c, 0, w - 1)];
  };

  Frame out(h, w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) {
      double acc = 0.0, wsum = 0.0;
      for (int di = -kSearch; di <= kSearch; ++di)
        for (int dj = -kSearch; dj <= kSearch; ++dj) {
          double d2 = 0.0;
          for (int pi = -kPatch; pi <= kPatch; ++pi)
            for (int pj = -kPatch; pj <= kPatch; ++pj) {
              const double diff = at(i + pi, j + pj) - at(i + di + pi, j + dj + pj);
              d2 += diff * diff;
            }
          d2 *= patch_norm;
          // Noise-compensated distance: identical patches under noise differ
          // by 2 sigma^2 in expectation.
          const double wgt = std::exp(-std::max(d2 - 2.0 * sigma2, 0.0) * inv_h2);
          acc += wgt * at(i + di, j + dj);
          wsum += wgt;
        }
      out.at(i, j) = acc / wsum;
    }
  return out;
}

Frame denoise(const Frame& x, DenoiseStrength strength, DenoiserKind kind) {
  for (double v : x.data)
    if (!std::isfinite(v)) throw DataError("denoise: non-finite input");
  switch (kind) {
    case DenoiserKind::identity:
      return x;
    case DenoiserKind::tv:
      return tv_denoise(x, kTvLambdaPerSigma * strength.sigma / 255.0);
    case DenoiserKind::nlm:
      return nlm_denoise(x, strength.sigma / 255.0);
  }
  throw ConfigError("denoise: unknown kind");
}

}  // namespace bmvc
