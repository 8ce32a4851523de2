#include "bmvc/metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace bmvc {

double psnr(const Frame& ref, const Frame& test) {
  if (ref.height != test.height || ref.width != test.width)
    throw DimensionError("psnr: frame dims differ");
  double se = 0.0;
  for (size_t i = 0; i < ref.size(); ++i) {
    const double d = ref.data[i] - test.data[i];
    se += d * d;
  }
  if (se == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(static_cast<double>(ref.size()) / se);
}

namespace {

constexpr int kWin = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;  // (K1 L)^2, L = 1
constexpr double kC2 = 0.03 * 0.03;

std::vector<double> gaussian_kernel() {
  std::vector<double> k(kWin);
  double sum = 0.0;
  for (int i = 0; i < kWin; ++i) {
    const double d = i - (kWin - 1) / 2.0;
    k[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

// Valid-mode separable Gaussian filter: output is (h-10) x (w-10).
std::vector<double> smooth_valid(const std::vector<double>& img, int h, int w,
                                 const std::vector<double>& k) {
  const int ow = w - kWin + 1, oh = h - kWin + 1;
  std::vector<double> rows(static_cast<size_t>(h) * ow);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < ow; ++j) {
      double s = 0.0;
      for (int t = 0; t < kWin; ++t) s += k[t] * img[static_cast<size_t>(i) * w + j + t];
      rows[static_cast<size_t>(i) * ow + j] = s;
    }
  std::vector<double> out(static_cast<size_t>(oh) * ow);
  for (int i = 0; i < oh; ++i)
    for (int j = 0; j < ow; ++j) {
      double s = 0.0;
      for (int t = 0; t < kWin; ++t) s += k[t] * rows[static_cast<size_t>(i + t) * ow + j];
      out[static_cast<size_t>(i) * ow + j] = s;
    }
  return out;
}

}  // namespace

double ssim(const Frame& ref, const Frame& test) {
  if (ref.height != test.height || ref.width != test.width)
    throw DimensionError("ssim: frame dims differ");
  if (ref.height < kWin || ref.width < kWin)
    throw DimensionError("ssim: frame smaller than the 11x11 window");

  const int h = ref.height, w = ref.width;
  const size_t n = ref.size();
  std::vector<double> aa(n), bb(n), ab(n);
  for (size_t i = 0; i < n; ++i) {
    aa[i] = ref.data[i] * ref.data[i];
    bb[i] = test.data[i] * test.data[i];
    ab[i] = ref.data[i] * test.data[i];
  }

  const std::vector<double> k = gaussian_kernel();
  const std::vector<double> mu1 = smooth_valid(ref.data, h, w, k);
  const std::vector<double> mu2 = smooth_valid(test.data, h, w, k);
  const std::vector<double> m11 = smooth_valid(aa, h, w, k);
  const std::vector<double> m22 = smooth_valid(bb, h, w, k);
  const std::vector<double> m12 = smooth_valid(ab, h, w, k);

  double acc = 0.0;
  for (size_t i = 0; i < mu1.size(); ++i) {
    const double v1 = m11[i] - mu1[i] * mu1[i];
    const double v2 = m22[i] - mu2[i] * mu2[i];
    const double cov = m12[i] - mu1[i] * mu2[i];
    acc += (2.0 * mu1[i] * mu2[i] + kC1) * (2.0 * cov + kC2) /
           ((mu1[i] * mu1[i] + mu2[i] * mu2[i] + kC1) * (v1 + v2 + kC2));
  }
  return acc / static_cast<double>(mu1.size());
}

}  // namespace bmvc
