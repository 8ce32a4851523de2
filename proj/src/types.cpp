#include "bmvc/types.hpp"

namespace bmvc {

BlockGeometry make_geometry(int frame_h, int frame_w, int block_h, int block_w) {
  if (frame_h < 1 || frame_w < 1 || block_h < 1 || block_w < 1)
    throw GeometryError("geometry: dimensions must be positive");
  if (frame_h % block_h != 0 || frame_w % block_w != 0)
    throw GeometryError("geometry: block " + std::to_string(block_h) + "x" +
                        std::to_string(block_w) + " does not divide frame " +
                        std::to_string(frame_h) + "x" + std::to_string(frame_w));
  BlockGeometry g;
  g.frame_h = frame_h;
  g.frame_w = frame_w;
  g.block_h = block_h;
  g.block_w = block_w;
  g.blocks_y = frame_h / block_h;
  g.blocks_x = frame_w / block_w;
  g.block_count = g.blocks_y * g.blocks_x;
  return g;
}

std::vector<std::int32_t> block_index_map(const BlockGeometry& g) {
  std::vector<std::int32_t> map(static_cast<size_t>(g.block_count) * g.block_pixels());
  size_t k = 0;
  for (int b = 0; b < g.block_count; ++b)
    for (int i = 0; i < g.block_pixels(); ++i) map[k++] = frame_index(g, b, i);
  return map;
}

void validate(const DecodeConfig& cfg) {
  if (cfg.sigma_schedule.empty()) throw ConfigError("decode config: empty sigma schedule");
  for (const auto& [sigma, count] : cfg.sigma_schedule) {
    if (!(sigma > 0.0)) throw ConfigError("decode config: sigma must be positive");
    if (count < 1) throw ConfigError("decode config: iteration count must be positive");
  }
}

}  // namespace bmvc
