#include "bmvc/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bmvc/denoiser.hpp"
#include "bmvc/metrics.hpp"
#include "bmvc/prng.hpp"

namespace bmvc {

namespace {

Frame clip01(Frame f) {
  for (double& v : f.data) v = std::clamp(v, 0.0, 1.0);
  return f;
}

double psnr_clipped(const Frame& ref, const Frame& v) { return psnr(ref, clip01(v)); }

}  // namespace

RandomDsPattern make_random_ds(std::uint64_t seed, int height, int width, int sample_count) {
  if (height < 1 || width < 1) throw GeometryError("random ds: dimensions must be positive");
  const int n = height * width;
  if (sample_count < 1 || sample_count > n)
    throw ConfigError("random ds: sample count must be in [1, pixels]");

  // Partial Fisher-Yates: only the first sample_count slots are settled.
  std::vector<std::int32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  Xoshiro256ss rng(seed);
  for (int k = 0; k < sample_count; ++k) {
    const int j = k + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - k)));
    std::swap(idx[k], idx[j]);
  }

  RandomDsPattern p;
  p.height = height;
  p.width = width;
  p.seed = seed;
  p.indices.assign(idx.begin(), idx.begin() + sample_count);
  std::sort(p.indices.begin(), p.indices.end());
  return p;
}

std::vector<double> random_ds_encode(const Frame& frame, const RandomDsPattern& pattern) {
  if (frame.height != pattern.height || frame.width != pattern.width)
    throw DimensionError("random ds: frame dims do not match pattern");
  std::vector<double> samples(pattern.indices.size());
  for (size_t k = 0; k < samples.size(); ++k) samples[k] = frame.data[pattern.indices[k]];
  return samples;
}

DecodeResult random_ds_decode(const std::vector<double>& samples, const RandomDsPattern& pattern,
                              const DecodeConfig& cfg, const Frame* reference) {
  validate(cfg);
  if (samples.size() != pattern.indices.size())
    throw DimensionError("random ds: sample count does not match pattern");

  // The sampling operator satisfies S S^T = I, so the projection just resets
  // the sampled pixels; everything else is inpainted by the prior.
  auto project = [&](Frame& f) {
    for (size_t k = 0; k < samples.size(); ++k) f.data[pattern.indices[k]] = samples[k];
  };

  Frame v(pattern.height, pattern.width);
  project(v);  // scatter initialization

  DecodeResult result;
  int iteration = 0;
  for (const auto& [sigma, count] : cfg.sigma_schedule)
    for (int k = 0; k < count; ++k) {
      Frame x = v;
      project(x);
      v = denoise(x, DenoiseStrength{sigma}, cfg.denoiser);
      double s = 0.0;
      for (size_t i = 0; i < samples.size(); ++i) {
        const double d = samples[i] - v.data[pattern.indices[i]];
        s += d * d;
      }
      TracePoint tp;
      tp.iteration = ++iteration;
      tp.residual_l2 = std::sqrt(s);
      tp.sigma = sigma;
      if (reference) {
        tp.psnr = psnr_clipped(*reference, v);
        tp.has_psnr = true;
      }
      result.trace.push_back(tp);
    }

  result.frame = clip01(std::move(v));
  return result;
}

namespace {

// Lower Cholesky factor of the SPD matrix g (m x m); empty result if g is
// numerically singular — the caller resamples.
std::vector<double> cholesky(const std::vector<double>& g, int m) {
  double dmax = 1.0;
  for (int i = 0; i < m; ++i) dmax = std::max(dmax, g[static_cast<size_t>(i) * m + i]);
  std::vector<double> l(static_cast<size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = g[static_cast<size_t>(i) * m + j];
      for (int k = 0; k < j; ++k)
        s -= l[static_cast<size_t>(i) * m + k] * l[static_cast<size_t>(j) * m + k];
      if (i == j) {
        if (s <= 1e-9 * dmax) return {};
        l[static_cast<size_t>(i) * m + i] = std::sqrt(s);
      } else {
        l[static_cast<size_t>(i) * m + j] = s / l[static_cast<size_t>(j) * m + j];
      }
    }
  return l;
}

// Solve (L L^T) z = b.
void chol_solve(const std::vector<double>& l, int m, double* b) {
  for (int i = 0; i < m; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= l[static_cast<size_t>(i) * m + k] * b[k];
    b[i] = s / l[static_cast<size_t>(i) * m + i];
  }
  for (int i = m - 1; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k < m; ++k) s -= l[static_cast<size_t>(k) * m + i] * b[k];
    b[i] = s / l[static_cast<size_t>(i) * m + i];
  }
}

BlockCsOperator finish_operator(std::vector<std::uint8_t> a, int m) {
  constexpr int n = BlockCsOperator::kBlockPixels;
  std::vector<double> gram(static_cast<size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k)
        s += a[static_cast<size_t>(i) * n + k] & a[static_cast<size_t>(j) * n + k];
      gram[static_cast<size_t>(i) * m + j] = gram[static_cast<size_t>(j) * m + i] = s;
    }
  BlockCsOperator op;
  op.m = m;
  op.chol = cholesky(gram, m);
  if (op.chol.empty()) return op;  // singular; caller decides
  op.matrix = std::move(a);
  int row_max = 0;
  for (int i = 0; i < m; ++i)
    row_max = std::max(row_max, static_cast<int>(gram[static_cast<size_t>(i) * m + i]));
  op.y_max = row_max;  // row sum of a binary row = its diagonal Gram entry
  return op;
}

}  // namespace

BlockCsOperator BlockCsOperator::build(std::uint64_t seed, int m) {
  if (m < 1 || m > kBlockPixels)
    throw ConfigError("block cs: measurements per block must be in [1,576]");
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t s = seed + attempt;
    Xoshiro256ss rng(s);
    std::vector<std::uint8_t> a(static_cast<size_t>(m) * kBlockPixels);
    for (auto& bit : a) bit = static_cast<std::uint8_t>(rng.next_bit());
    BlockCsOperator op = finish_operator(std::move(a), m);
    if (!op.chol.empty()) {
      op.seed = seed;
      op.final_seed = s;
      return op;
    }
  }
  throw DataError("block cs: could not draw an invertible sensing matrix");
}

BlockCsOperator BlockCsOperator::from_matrix(const std::vector<std::uint8_t>& a, int m) {
  if (m < 1 || m > kBlockPixels || a.size() != static_cast<size_t>(m) * kBlockPixels)
    throw DimensionError("block cs: matrix must be M x 576");
  BlockCsOperator op = finish_operator(a, m);
  if (op.chol.empty()) throw DataError("block cs: A A^T is singular");
  return op;
}

void BlockCsOperator::project_block(double* x, const double* y) const {
  constexpr int n = kBlockPixels;
  std::vector<double> resid(m);
  for (int i = 0; i < m; ++i) {
    double s = 0.0;
    const std::uint8_t* row = matrix.data() + static_cast<size_t>(i) * n;
    for (int k = 0; k < n; ++k)
      if (row[k]) s += x[k];
    resid[i] = y[i] - s;
  }
  chol_solve(chol, m, resid.data());
  for (int i = 0; i < m; ++i) {
    const std::uint8_t* row = matrix.data() + static_cast<size_t>(i) * n;
    for (int k = 0; k < n; ++k)
      if (row[k]) x[k] += resid[i];
  }
}

namespace {

constexpr int kB = BlockCsOperator::kBlockSize;

void gather_block(const Frame& f, int br, int bc, double* blk) {
  for (int r = 0; r < kB; ++r)
    for (int c = 0; c < kB; ++c)
      blk[r * kB + c] = f.data[static_cast<size_t>(br * kB + r) * f.width + bc * kB + c];
}

void scatter_block(Frame& f, int br, int bc, const double* blk) {
  for (int r = 0; r < kB; ++r)
    for (int c = 0; c < kB; ++c)
      f.data[static_cast<size_t>(br * kB + r) * f.width + bc * kB + c] = blk[r * kB + c];
}

}  // namespace

std::vector<double> block_cs_encode(const Frame& frame, const BlockCsOperator& op,
                                    OpCounters* counters) {
  if (frame.height % kB != 0 || frame.width % kB != 0)
    throw GeometryError("block cs: frame dims must be multiples of 24");
  const int by = frame.height / kB, bx = frame.width / kB;
  std::vector<double> out;
  out.reserve(static_cast<size_t>(by) * bx * op.m);
  std::vector<double> blk(BlockCsOperator::kBlockPixels);
  std::uint64_t adds = 0;
  for (int br = 0; br < by; ++br)
    for (int bc = 0; bc < bx; ++bc) {
      gather_block(frame, br, bc, blk.data());
      for (int i = 0; i < op.m; ++i) {
        const std::uint8_t* row = op.matrix.data() + static_cast<size_t>(i) * blk.size();
        double s = 0.0;
        for (size_t k = 0; k < blk.size(); ++k)
          if (row[k]) {
            s += blk[k];
            ++adds;
          }
        out.push_back(s);
      }
    }
  if (counters) counters->additions += adds;
  return out;
}

DecodeResult block_cs_decode(const std::vector<double>& measurements, const BlockCsOperator& op,
                             int frame_h, int frame_w, const DecodeConfig& cfg,
                             const Frame* reference) {
  validate(cfg);
  if (frame_h % kB != 0 || frame_w % kB != 0)
    throw GeometryError("block cs: frame dims must be multiples of 24");
  const int by = frame_h / kB, bx = frame_w / kB;
  const size_t blocks = static_cast<size_t>(by) * bx;
  if (measurements.size() != blocks * op.m)
    throw DimensionError("block cs: measurement count does not match geometry");

  std::vector<double> blk(BlockCsOperator::kBlockPixels);
  auto project = [&](Frame& f) {
    size_t pos = 0;
    for (int br = 0; br < by; ++br)
      for (int bc = 0; bc < bx; ++bc) {
        gather_block(f, br, bc, blk.data());
        op.project_block(blk.data(), measurements.data() + pos);
        scatter_block(f, br, bc, blk.data());
        pos += op.m;
      }
  };

  Frame v(frame_h, frame_w);
  project(v);  // v0 = A^T (A A^T)^{-1} y per block

  DecodeResult result;
  int iteration = 0;
  for (const auto& [sigma, count] : cfg.sigma_schedule)
    for (int k = 0; k < count; ++k) {
      Frame x = v;
      project(x);
      v = denoise(x, DenoiseStrength{sigma}, cfg.denoiser);

      double s = 0.0;
      size_t pos = 0;
      for (int br = 0; br < by; ++br)
        for (int bc = 0; bc < bx; ++bc) {
          gather_block(v, br, bc, blk.data());
          for (int i = 0; i < op.m; ++i) {
            const std::uint8_t* row = op.matrix.data() + static_cast<size_t>(i) * blk.size();
            double yi = 0.0;
            for (size_t k2 = 0; k2 < blk.size(); ++k2)
              if (row[k2]) yi += blk[k2];
            const double d = measurements[pos + i] - yi;
            s += d * d;
          }
          pos += op.m;
        }
      TracePoint tp;
      tp.iteration = ++iteration;
      tp.residual_l2 = std::sqrt(s);
      tp.sigma = sigma;
      if (reference) {
        tp.psnr = psnr_clipped(*reference, v);
        tp.has_psnr = true;
      }
      result.trace.push_back(tp);
    }

  result.frame = clip01(std::move(v));
  return result;
}

}  // namespace bmvc
