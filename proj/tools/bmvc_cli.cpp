#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bmvc/container.hpp"
#include "bmvc/denoiser.hpp"
#include "bmvc/image_io.hpp"
#include "bmvc/mask.hpp"
#include "bmvc/metrics.hpp"
#include "bmvc/pipeline.hpp"
#include "bmvc/pnp_decoder.hpp"
#include "bmvc/synthetic.hpp"
#include "svg_plot.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kDefaultSchedule = "20x20,10x20,5x20";

// Semantic flag problems found after CLI parsing; mapped to exit code 2.
struct UsageError {
  std::string message;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::pair<int, int> parse_size(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos) throw UsageError{"expected HxW, got '" + s + "'"};
  try {
    const int h = std::stoi(s.substr(0, x));
    const int w = std::stoi(s.substr(x + 1));
    if (h < 1 || w < 1) throw UsageError{"dimensions must be positive: '" + s + "'"};
    return {h, w};
  } catch (const std::logic_error&) {
    throw UsageError{"expected HxW, got '" + s + "'"};
  }
}

std::vector<std::pair<double, int>> parse_schedule(const std::string& s) {
  std::vector<std::pair<double, int>> out;
  for (const std::string& part : split(s, ',')) {
    const auto x = part.find('x');
    if (x == std::string::npos)
      throw UsageError{"schedule entries are SIGMAxCOUNT, got '" + part + "'"};
    try {
      const double sigma = std::stod(part.substr(0, x));
      const int count = std::stoi(part.substr(x + 1));
      if (sigma <= 0.0 || count < 1) throw UsageError{"bad schedule entry '" + part + "'"};
      out.emplace_back(sigma, count);
    } catch (const std::logic_error&) {
      throw UsageError{"bad schedule entry '" + part + "'"};
    }
  }
  if (out.empty()) throw UsageError{"schedule is empty"};
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const std::string& part : split(s, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::logic_error&) {
      throw UsageError{std::string(what) + ": bad value '" + part + "'"};
    }
    if (out.back() < 1) throw UsageError{std::string(what) + ": values must be positive"};
  }
  if (out.empty()) throw UsageError{std::string(what) + ": empty list"};
  return out;
}

bmvc::DenoiserKind parse_denoiser(const std::string& name) {
  if (name == "tv") return bmvc::DenoiserKind::tv;
  if (name == "nlm") return bmvc::DenoiserKind::nlm;
  if (name == "identity") return bmvc::DenoiserKind::identity;
  throw UsageError{"unknown denoiser '" + name + "' (tv, nlm, identity)"};
}

std::uint8_t parse_codec(const std::string& name) {
  if (name == "bmvc") return bmvc::kCodecBmvc;
  if (name == "rds") return bmvc::kCodecRandomDs;
  if (name == "bcs") return bmvc::kCodecBlockCs;
  throw UsageError{"unknown codec '" + name + "' (bmvc, rds, bcs)"};
}

const char* codec_name(std::uint8_t id) {
  switch (id) {
    case bmvc::kCodecBmvc:
      return "bmvc";
    case bmvc::kCodecRandomDs:
      return "rds";
    default:
      return "bcs";
  }
}

// Truncate a schedule to an exact total, stretching the last level if the
// request exceeds it.
std::vector<std::pair<double, int>> cap_schedule(std::vector<std::pair<double, int>> sched,
                                                 int total) {
  if (total < 1) throw UsageError{"--iters must be positive"};
  std::vector<std::pair<double, int>> out;
  int left = total;
  for (const auto& [sigma, count] : sched) {
    const int take = std::min(count, left);
    if (take > 0) out.emplace_back(sigma, take);
    left -= take;
    if (left == 0) break;
  }
  if (left > 0) out.back().second += left;
  return out;
}

bmvc::DecodeConfig build_decode_config(const std::string& denoiser, const std::string& schedule,
                                       int iters) {
  bmvc::DecodeConfig cfg;
  cfg.denoiser = parse_denoiser(denoiser);
  cfg.sigma_schedule = parse_schedule(schedule);
  if (iters > 0) cfg.sigma_schedule = cap_schedule(cfg.sigma_schedule, iters);
  return cfg;
}

// Block dims giving exactly `cr` blocks, as square as possible; empty when no
// divisor pair of cr splits the frame evenly.
std::optional<std::pair<int, int>> find_bmvc_blocks(int h, int w, int cr) {
  std::optional<std::pair<int, int>> best;
  int best_gap = 1 << 30;
  for (int a = 1; a <= cr; ++a) {
    if (cr % a != 0) continue;
    const int b = cr / a;
    if (h % a != 0 || w % b != 0) continue;
    const int bh = h / a, bw = w / b;
    if (std::abs(bh - bw) < best_gap) {
      best_gap = std::abs(bh - bw);
      best = {bh, bw};
    }
  }
  return best;
}

bmvc::CodecSettings derive_settings(std::uint8_t codec, int h, int w, const std::string& block,
                                    int cr, int samples, int measurements, std::uint64_t seed,
                                    int bits, bool color, int chroma_factor) {
  bmvc::CodecSettings s;
  s.codec_id = codec;
  s.seed = seed;
  s.bits = bits;
  s.color_mode = color ? bmvc::kColorYuv : bmvc::kColorGray;
  s.chroma_factor = chroma_factor;
  const long pixels = static_cast<long>(h) * w;

  switch (codec) {
    case bmvc::kCodecBmvc:
      if (!block.empty() && cr > 0) throw UsageError{"give either --block or --cr, not both"};
      if (!block.empty()) {
        std::tie(s.block_h, s.block_w) = parse_size(block);
      } else if (cr > 0) {
        const auto dims = find_bmvc_blocks(h, w, cr);
        if (!dims)
          throw UsageError{"no block split of " + std::to_string(h) + "x" + std::to_string(w) +
                           " gives " + std::to_string(cr) + " blocks"};
        std::tie(s.block_h, s.block_w) = *dims;
      } else {
        throw UsageError{"bmvc needs --block HxW or --cr N"};
      }
      break;
    case bmvc::kCodecRandomDs: {
      long n = samples;
      if (n == 0 && cr > 0) n = std::lround(static_cast<double>(pixels) / cr);
      if (n < 1) throw UsageError{"rds needs --samples N or --cr N"};
      s.sample_count = static_cast<std::uint32_t>(std::min(n, pixels));
      break;
    }
    case bmvc::kCodecBlockCs: {
      int m = measurements;
      if (m == 0 && cr > 0) m = static_cast<int>(std::lround(576.0 / cr));
      if (m < 1) throw UsageError{"bcs needs --measurements M or --cr N"};
      s.measurements_per_block = std::min(m, 576);
      break;
    }
  }
  return s;
}

// Reference for Y-plane metrics: a PGM directly, or the luma of a PPM.
bmvc::Frame load_reference(const std::string& path) {
  const auto bytes = bmvc::read_file(path);
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6')
    return bmvc::rgb_to_yuv(bmvc::parse_ppm(bytes.data(), bytes.size())).y;
  return bmvc::parse_pgm(bytes.data(), bytes.size());
}

// ---------------------------------------------------------------- encode ---

struct EncodeArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::string codec = "bmvc";
  std::string block;
  int cr = 0;
  int samples = 0;
  int measurements = 0;
  int bits = 8;
  std::uint64_t seed = 42;
  bool color = false;
  int chroma_factor = 4;
  bool stats = false;
};

void run_encode(const EncodeArgs& a) {
  const std::uint8_t codec_id = parse_codec(a.codec);

  std::vector<bmvc::Frame> grays;
  std::vector<bmvc::ColorImage> colors;
  int h = 0, w = 0;
  for (const std::string& path : a.inputs) {
    if (a.color) {
      colors.push_back(bmvc::read_ppm(path));
      h = colors.front().height;
      w = colors.front().width;
    } else {
      grays.push_back(bmvc::read_pgm(path));
      h = grays.front().height;
      w = grays.front().width;
    }
  }

  const bmvc::CodecSettings settings = derive_settings(
      codec_id, h, w, a.block, a.cr, a.samples, a.measurements, a.seed, a.bits, a.color,
      a.chroma_factor);
  bmvc::Stream stream;
  stream.header = bmvc::make_header(settings, h, w);
  const bmvc::Codec engine(stream.header);

  bmvc::OpCounters counters;
  bmvc::OpCounters* ctr = a.stats ? &counters : nullptr;
  for (const auto& f : grays) stream.frames.push_back(engine.encode_frame(f, ctr));
  for (const auto& f : colors) stream.frames.push_back(engine.encode_frame(f, ctr));
  stream.header.frame_count = static_cast<std::uint32_t>(stream.frames.size());

  bmvc::save_stream(a.output, stream);

  if (a.stats) {
    const size_t bytes = bmvc::kHeaderBytes +
                         2 * bmvc::codes_per_frame(stream.header) * stream.frames.size();
    const double cr_actual = static_cast<double>(h) * w /
                             static_cast<double>(bmvc::luma_codes_per_frame(stream.header));
    std::cout << "frames: " << stream.frames.size() << "\n"
              << "additions: " << counters.additions << "\n"
              << "multiplications: " << counters.multiplications << "\n"
              << "compressed bytes: " << bytes << "\n"
              << "luma compression ratio: " << cr_actual << "\n";
  }
}

// ---------------------------------------------------------------- decode ---

struct DecodeArgs {
  std::string input;
  std::string output;
  std::string denoiser = "tv";
  std::string schedule = kDefaultSchedule;
  std::string reference;
  std::string trace;
  int iters = 0;
  int frame = 0;
};

void run_decode(const DecodeArgs& a) {
  const bmvc::Stream stream = bmvc::load_stream(a.input);
  if (a.frame < 0 || static_cast<size_t>(a.frame) >= stream.frames.size())
    throw bmvc::DataError("frame index out of range (stream has " +
                          std::to_string(stream.frames.size()) + " frames)");

  const bmvc::DecodeConfig cfg = build_decode_config(a.denoiser, a.schedule, a.iters);
  const bmvc::Codec engine(stream.header);

  std::optional<bmvc::Frame> ref;
  if (!a.reference.empty()) ref = load_reference(a.reference);

  const bmvc::DecodeOutput out =
      engine.decode_frame(stream.frames[a.frame], cfg, ref ? &*ref : nullptr);

  if (out.rgb)
    bmvc::write_ppm(a.output, *out.rgb);
  else
    bmvc::write_pgm(a.output, out.y);

  if (ref)
    std::cout << "psnr=" << bmvc::psnr(*ref, out.y) << " ssim=" << bmvc::ssim(*ref, out.y)
              << "\n";

  if (!a.trace.empty()) {
    std::ofstream tf(a.trace, std::ios::trunc);
    if (!tf) throw bmvc::DataError("cannot open for writing: " + a.trace);
    bmvc::write_trace_csv(tf, out.trace);
  }
}

// ----------------------------------------------------------------- bench ---

struct BenchArgs {
  std::string images;
  std::string out;
  std::string codecs = "bmvc";
  std::string crs = "4,16,64";
  std::string bits = "8";
  std::string denoiser = "tv";
  std::string schedule = kDefaultSchedule;
  std::uint64_t seed = 42;
  int iters = 0;
};

struct BenchRow {
  std::string image;
  std::string codec;
  int cr = 0;
  double cr_actual = 0.0;
  int bits = 0;
  double psnr = 0.0;
  double ssim = 0.0;
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  size_t bytes = 0;
  double seconds = 0.0;
  std::uint64_t effective_seed = 0;
};

void run_bench(const BenchArgs& a) {
  std::vector<std::uint8_t> codecs;
  for (const std::string& name : split(a.codecs, ',')) codecs.push_back(parse_codec(name));
  if (codecs.empty()) throw UsageError{"--codecs: empty list"};
  const std::vector<int> crs = parse_int_list(a.crs, "--cr");
  const std::vector<int> bits_list = parse_int_list(a.bits, "--bits");
  const bmvc::DecodeConfig cfg = build_decode_config(a.denoiser, a.schedule, a.iters);

  std::vector<std::string> image_paths;
  if (!fs::is_directory(a.images)) throw bmvc::DataError("not a directory: " + a.images);
  for (const auto& entry : fs::directory_iterator(a.images))
    if (entry.is_regular_file() && entry.path().extension() == ".pgm")
      image_paths.push_back(entry.path().string());
  std::sort(image_paths.begin(), image_paths.end());
  if (image_paths.empty()) throw bmvc::DataError("no .pgm images in " + a.images);

  fs::create_directories(a.out);

  std::vector<BenchRow> rows;
  for (const std::string& path : image_paths) {
    const bmvc::Frame img = bmvc::read_pgm(path);
    for (std::uint8_t codec_id : codecs)
      for (int cr : crs)
        for (int bits : bits_list) {
          const bmvc::CodecSettings settings = derive_settings(
              codec_id, img.height, img.width, "", cr, 0, 0, a.seed, bits, false, 1);
          bmvc::Stream stream;
          stream.header = bmvc::make_header(settings, img.height, img.width);
          const bmvc::Codec engine(stream.header);

          BenchRow row;
          row.image = fs::path(path).filename().string();
          row.codec = codec_name(codec_id);
          row.cr = cr;
          row.bits = bits;
          row.effective_seed = engine.effective_seed();

          bmvc::OpCounters counters;
          stream.frames.push_back(engine.encode_frame(img, &counters));
          stream.header.frame_count = 1;
          row.additions = counters.additions;
          row.multiplications = counters.multiplications;
          row.bytes = bmvc::write_stream(stream).size();
          row.cr_actual = static_cast<double>(img.height) * img.width /
                          static_cast<double>(bmvc::luma_codes_per_frame(stream.header));

          const auto t0 = std::chrono::steady_clock::now();
          const bmvc::DecodeOutput out = engine.decode_frame(stream.frames[0], cfg);
          row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          row.psnr = bmvc::psnr(img, out.y);
          row.ssim = bmvc::ssim(img, out.y);
          rows.push_back(row);

          std::cout << row.image << " codec=" << row.codec << " cr=" << row.cr
                    << " bits=" << row.bits << " psnr=" << row.psnr << " ssim=" << row.ssim
                    << "\n";
        }
  }

  const std::string csv_path = (fs::path(a.out) / "results.csv").string();
  {
    std::ofstream csv(csv_path, std::ios::trunc);
    if (!csv) throw bmvc::DataError("cannot open for writing: " + csv_path);
    csv << "image,codec,cr,cr_actual,bits,psnr_db,ssim,encode_additions,"
           "encode_multiplications,compressed_bytes,decode_seconds,effective_seed\n";
    for (const BenchRow& r : rows)
      csv << r.image << ',' << r.codec << ',' << r.cr << ',' << r.cr_actual << ',' << r.bits
          << ',' << r.psnr << ',' << r.ssim << ',' << r.additions << ',' << r.multiplications
          << ',' << r.bytes << ',' << r.seconds << ',' << r.effective_seed << "\n";
  }

  // Mean PSNR over the image set, one series per codec.
  auto mean_psnr = [&](std::uint8_t codec_id, int cr, int bits) {
    double s = 0.0;
    int n = 0;
    for (const BenchRow& r : rows)
      if (r.codec == codec_name(codec_id) && r.cr == cr && r.bits == bits) {
        s += r.psnr;
        ++n;
      }
    return n ? s / n : 0.0;
  };

  const std::string cr_svg = (fs::path(a.out) / "psnr_vs_cr.svg").string();
  {
    std::vector<plot::Series> series;
    for (std::uint8_t codec_id : codecs) {
      plot::Series s;
      s.label = codec_name(codec_id);
      for (int cr : crs) {
        s.x.push_back(cr);
        s.y.push_back(mean_psnr(codec_id, cr, bits_list.front()));
      }
      series.push_back(std::move(s));
    }
    plot::write_svg(cr_svg, "mean PSNR vs compression ratio", "compression ratio", "PSNR (dB)",
                    series);
  }

  const std::string bits_svg = (fs::path(a.out) / "psnr_vs_bits.svg").string();
  {
    std::vector<plot::Series> series;
    for (std::uint8_t codec_id : codecs) {
      plot::Series s;
      s.label = codec_name(codec_id);
      for (int bits : bits_list) {
        s.x.push_back(bits);
        s.y.push_back(mean_psnr(codec_id, crs.front(), bits));
      }
      series.push_back(std::move(s));
    }
    plot::write_svg(bits_svg, "mean PSNR vs quantization bits", "bits", "PSNR (dB)", series);
  }

  json manifest;
  manifest["version"] = kVersion;
  manifest["seed"] = a.seed;
  manifest["codecs"] = a.codecs;
  manifest["cr"] = a.crs;
  manifest["bits"] = a.bits;
  manifest["denoiser"] = a.denoiser;
  manifest["schedule"] = a.schedule;
  manifest["images"] = image_paths;
  manifest["outputs"] = {{"csv", csv_path}, {"psnr_vs_cr", cr_svg}, {"psnr_vs_bits", bits_svg}};
  json jruns = json::array();
  for (const BenchRow& r : rows)
    jruns.push_back({{"image", r.image},
                     {"codec", r.codec},
                     {"cr", r.cr},
                     {"cr_actual", r.cr_actual},
                     {"bits", r.bits},
                     {"psnr_db", r.psnr},
                     {"ssim", r.ssim},
                     {"encode_additions", r.additions},
                     {"encode_multiplications", r.multiplications},
                     {"compressed_bytes", r.bytes},
                     {"decode_seconds", r.seconds},
                     {"effective_seed", r.effective_seed}});
  manifest["runs"] = std::move(jruns);

  const std::string manifest_path = (fs::path(a.out) / "manifest.json").string();
  std::ofstream mf(manifest_path, std::ios::trunc);
  if (!mf) throw bmvc::DataError("cannot open for writing: " + manifest_path);
  mf << manifest.dump(2) << "\n";

  std::cout << "wrote " << csv_path << ", " << cr_svg << ", " << bits_svg << ", " << manifest_path
            << "\n";
}

// ------------------------------------------------------- mask / testset ---

struct MaskArgs {
  std::string size;
  std::string output;
  std::uint64_t seed = 42;
};

void run_mask(const MaskArgs& a) {
  const auto [h, w] = parse_size(a.size);
  bmvc::write_pbm(a.output, bmvc::generate_mask(a.seed, h, w));
}

struct TestsetArgs {
  std::string out;
  std::string size = "64x64";
  int count = 5;
  bool color = false;
  std::uint64_t seed = 1;
};

void run_testset(const TestsetArgs& a) {
  if (a.count < 1) throw UsageError{"--count must be positive"};
  const auto [h, w] = parse_size(a.size);
  fs::create_directories(a.out);
  for (int i = 0; i < a.count; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "synth_%03d.%s", i, a.color ? "ppm" : "pgm");
    const std::string path = (fs::path(a.out) / name).string();
    if (a.color)
      bmvc::write_ppm(path, bmvc::synthetic_color(h, w, a.seed + i));
    else
      bmvc::write_pgm(path, bmvc::synthetic_frame(h, w, a.seed + i));
    std::cout << path << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block-modulating video compression codec"};
  app.require_subcommand(1);

  EncodeArgs enc;
  CLI::App* cmd_enc = app.add_subcommand("encode", "compress images into a .bmvc stream");
  cmd_enc->add_option("-i,--input", enc.inputs, "input image(s): PGM, or PPM with --color")
      ->required();
  cmd_enc->add_option("-o,--output", enc.output, "output .bmvc path")->required();
  cmd_enc->add_option("--codec", enc.codec, "bmvc | rds | bcs");
  cmd_enc->add_option("--block", enc.block, "BMVC block dims HxW");
  cmd_enc->add_option("--cr", enc.cr, "target compression ratio (alternative to --block)");
  cmd_enc->add_option("--samples", enc.samples, "random DS: sampled pixel count");
  cmd_enc->add_option("--measurements", enc.measurements, "block CS: measurements per block");
  cmd_enc->add_option("--bits", enc.bits, "quantizer bit depth")->check(CLI::Range(8, 16));
  cmd_enc->add_option("--seed", enc.seed, "mask / pattern seed");
  cmd_enc->add_flag("--color", enc.color, "treat inputs as PPM color images");
  cmd_enc->add_option("--chroma-factor", enc.chroma_factor, "chroma decimation per dimension");
  cmd_enc->add_flag("--stats", enc.stats, "print op counters and compressed size");

  DecodeArgs dec;
  CLI::App* cmd_dec = app.add_subcommand("decode", "reconstruct an image from a .bmvc stream");
  cmd_dec->add_option("-i,--input", dec.input, "input .bmvc path")->required();
  cmd_dec->add_option("-o,--output", dec.output, "output image path")->required();
  cmd_dec->add_option("--denoiser", dec.denoiser, "tv | nlm | identity");
  cmd_dec->add_option("--schedule", dec.schedule, "sigma schedule, e.g. 20x20,10x20,5x20");
  cmd_dec->add_option("--iters", dec.iters, "cap total iterations");
  cmd_dec->add_option("--frame", dec.frame, "frame index to decode");
  cmd_dec->add_option("--reference", dec.reference, "ground truth for PSNR/SSIM");
  cmd_dec->add_option("--trace", dec.trace, "write per-iteration trace CSV here");

  BenchArgs bench;
  CLI::App* cmd_bench = app.add_subcommand("bench", "grid benchmark: images x codecs x Cr x bits");
  cmd_bench->add_option("--images", bench.images, "directory of .pgm test images")->required();
  cmd_bench->add_option("--out", bench.out, "output directory")->required();
  cmd_bench->add_option("--codecs", bench.codecs, "comma list: bmvc,rds,bcs");
  cmd_bench->add_option("--cr", bench.crs, "comma list of compression ratios");
  cmd_bench->add_option("--bits", bench.bits, "comma list of bit depths");
  cmd_bench->add_option("--seed", bench.seed, "mask / pattern seed");
  cmd_bench->add_option("--denoiser", bench.denoiser, "tv | nlm | identity");
  cmd_bench->add_option("--schedule", bench.schedule, "sigma schedule");
  cmd_bench->add_option("--iters", bench.iters, "cap total iterations");

  MaskArgs mask;
  CLI::App* cmd_mask = app.add_subcommand("mask", "export the binary mask for a seed as PBM");
  cmd_mask->add_option("--size", mask.size, "mask dims HxW")->required();
  cmd_mask->add_option("-o,--output", mask.output, "output .pbm path")->required();
  cmd_mask->add_option("--seed", mask.seed, "mask seed");

  TestsetArgs testset;
  CLI::App* cmd_testset = app.add_subcommand("testset", "generate synthetic test images");
  cmd_testset->add_option("--out", testset.out, "output directory")->required();
  cmd_testset->add_option("--size", testset.size, "image dims HxW");
  cmd_testset->add_option("--count", testset.count, "number of images");
  cmd_testset->add_flag("--color", testset.color, "write PPM color images");
  cmd_testset->add_option("--seed", testset.seed, "base seed (image i uses seed+i)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_enc)
      run_encode(enc);
    else if (*cmd_dec)
      run_decode(dec);
    else if (*cmd_bench)
      run_bench(bench);
    else if (*cmd_mask)
      run_mask(mask);
    else if (*cmd_testset)
      run_testset(testset);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
