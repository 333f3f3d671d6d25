// Command-line front end. Talks to the library only through the C API.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "yiqmark/yiqmark.h"

namespace {

using nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kValidation = 3 };

struct ImageDeleter {
  void operator()(ym_image* p) const { ym_image_free(p); }
};
struct GrayDeleter {
  void operator()(ym_gray* p) const { ym_gray_free(p); }
};
struct BitsDeleter {
  void operator()(ym_bits* p) const { ym_bits_free(p); }
};
struct ConfigDeleter {
  void operator()(ym_config* p) const { ym_config_free(p); }
};
using ImagePtr = std::unique_ptr<ym_image, ImageDeleter>;
using GrayPtr = std::unique_ptr<ym_gray, GrayDeleter>;
using BitsPtr = std::unique_ptr<ym_bits, BitsDeleter>;
using ConfigPtr = std::unique_ptr<ym_config, ConfigDeleter>;

// Carries a library failure up to main() with the exit code it maps to.
struct Failure {
  int exit_code;
  std::string message;
};

void check(ym_status st, const std::string& context) {
  if (st == YM_OK) return;
  const int code = (st == YM_ERR_MISSING_FILE || st == YM_ERR_UNSUPPORTED_FORMAT ||
                    st == YM_ERR_CORRUPT_DATA || st == YM_ERR_IO_FAILURE)
                       ? kIo
                       : kValidation;
  throw Failure{code, context + ": " + ym_status_string(st) + " (" + ym_last_error() + ")"};
}

ym_format format_for(const std::string& path, const std::string& explicit_format) {
  if (explicit_format == "ppm") return YM_FORMAT_PPM;
  if (explicit_format == "png") return YM_FORMAT_PNG;
  const auto dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return (ext == "ppm" || ext == "pgm" || ext == "pnm") ? YM_FORMAT_PPM : YM_FORMAT_PNG;
}

ImagePtr load_image(const std::string& path) {
  ym_image* img = nullptr;
  check(ym_image_read(path.c_str(), &img), "reading " + path);
  return ImagePtr(img);
}

BitsPtr load_watermark(const std::string& path, int threshold) {
  ym_gray* g = nullptr;
  check(ym_gray_read(path.c_str(), &g), "reading " + path);
  GrayPtr gray(g);
  ym_bits* bits = nullptr;
  check(ym_binarize(gray.get(), static_cast<uint8_t>(threshold), &bits), "binarizing " + path);
  return BitsPtr(bits);
}

void save_bits(const ym_bits* bits, const std::string& path, const std::string& format) {
  ym_gray* g = nullptr;
  check(ym_bits_to_gray(bits, &g), "converting watermark");
  GrayPtr gray(g);
  check(ym_gray_write(gray.get(), path.c_str(), format_for(path, format)), "writing " + path);
}

// 8-pixel cells per side of a square cover; the natural watermark side.
uint32_t natural_wm_side(const ym_image* img) {
  const uint64_t blocks = uint64_t{ym_image_width(img) / 8} * (ym_image_height(img) / 8);
  const auto side = static_cast<uint32_t>(std::llround(std::sqrt(static_cast<double>(blocks))));
  if (uint64_t{side} * side != blocks || side == 0) {
    throw Failure{kValidation, "image does not carry a square watermark; pass --wm-side"};
  }
  return side;
}

ordered_json psnr_json(double db) {
  if (std::isinf(db)) return nullptr;
  return db;
}

const char* channel_name(ym_channel c) {
  return c == YM_CHANNEL_Y ? "y" : c == YM_CHANNEL_I ? "i" : "q";
}

ym_channel parse_channel(const std::string& s) {
  if (s == "y" || s == "Y") return YM_CHANNEL_Y;
  if (s == "i" || s == "I") return YM_CHANNEL_I;
  if (s == "q" || s == "Q") return YM_CHANNEL_Q;
  throw Failure{kValidation, "unknown channel '" + s + "'"};
}

struct KeyOptions {
  std::string channel = "q";
  double k = 4.0;
  uint64_t key1 = 15;
  uint64_t pn_seed = 15;
  int64_t threshold = 0;
  uint64_t count_a = 3;
  uint64_t count_b = 5;

  void add_to(CLI::App& app, bool with_strength) {
    app.add_option("--channel", channel, "Embedding channel (y, i or q)")
        ->check(CLI::IsMember({"y", "i", "q", "Y", "I", "Q"}))
        ->capture_default_str();
    if (with_strength) {
      app.add_option("--k", k, "Flexing factor (embedding strength)")->capture_default_str();
    }
    app.add_option("--key1", key1, "Key driving the watermark PN sum")->capture_default_str();
    app.add_option("--pn-seed", pn_seed, "Seed of the mid-band PN pair")->capture_default_str();
    app.add_option("--threshold", threshold, "Key-schedule threshold T")->capture_default_str();
    app.add_option("--count-a", count_a, "Scramble count when sum > T")->capture_default_str();
    app.add_option("--count-b", count_b, "Scramble count otherwise")->capture_default_str();
  }

  ConfigPtr make(uint32_t wm_side, bool with_strength) const {
    ym_config* c = nullptr;
    check(ym_config_create(&c), "creating configuration");
    ConfigPtr cfg(c);
    check(ym_config_set_channel(cfg.get(), parse_channel(channel)), "--channel");
    if (with_strength) check(ym_config_set_strength(cfg.get(), k), "--k");
    check(ym_config_set_keys(cfg.get(), key1, pn_seed, threshold, count_a, count_b), "keys");
    check(ym_config_set_wm_side(cfg.get(), wm_side), "--wm-side");
    return cfg;
  }
};

ordered_json keys_json(const ym_config* cfg) {
  uint64_t k1 = 0, seed = 0, ca = 0, cb = 0;
  int64_t t = 0;
  ym_config_keys(cfg, &k1, &seed, &t, &ca, &cb);
  return {{"k1", k1}, {"pn_seed", seed}, {"threshold", t}, {"count_a", ca}, {"count_b", cb}};
}

ordered_json mask_json(const ym_config* cfg) {
  ordered_json m = ordered_json::array();
  for (size_t i = 0; i < ym_config_mask_length(cfg); ++i) {
    uint8_t r = 0, c = 0;
    ym_config_mask_position(cfg, i, &r, &c);
    m.push_back({r, c});
  }
  return m;
}

void print(const ordered_json& j) { std::cout << j.dump() << "\n"; }

struct Attack {
  std::string label;
  bool none = true;
  ym_attack_kind kind = YM_ATTACK_JPEG;
  double param = 0.0;
};

Attack parse_attack(const std::string& text) {
  Attack a;
  a.label = text;
  if (text == "none") return a;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Failure{kValidation, "attack '" + text + "' must look like kind:param"};
  }
  const std::string kind = text.substr(0, colon);
  a.none = false;
  try {
    std::size_t used = 0;
    a.param = std::stod(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw Failure{kValidation, "bad attack parameter in '" + text + "'"};
  }
  if (kind == "scale") a.kind = YM_ATTACK_SCALE;
  else if (kind == "rotate") a.kind = YM_ATTACK_ROTATE;
  else if (kind == "jpeg") a.kind = YM_ATTACK_JPEG;
  else if (kind == "gaussian" || kind == "gaussian_noise") a.kind = YM_ATTACK_GAUSSIAN_NOISE;
  else if (kind == "salt_pepper") a.kind = YM_ATTACK_SALT_PEPPER;
  else throw Failure{kValidation, "unknown attack kind '" + kind + "'"};
  return a;
}

ym_attack_kind attack_kind_from_name(const std::string& kind) {
  return parse_attack(kind + ":0").kind;
}

// Reads `key = value` lines; `#` starts a comment.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kIo, "cannot read config file " + path};
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Failure{kUsage, path + ":" + std::to_string(lineno) + ": expected key = value"};
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    for (char& c : key) {
      if (c == '_') c = '-';
    }
    if (key.empty()) throw Failure{kUsage, path + ":" + std::to_string(lineno) + ": empty key"};
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

// Splices config-file entries into argv as flags, skipping any the user
// already passed on the command line.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string config_path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path.empty()) return args;

  auto given = [&](const std::string& flag) {
    for (const auto& a : rest) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::vector<std::string> out;
  std::size_t insert_at = rest.size() > 1 ? 2 : rest.size();  // after program and subcommand
  out.insert(out.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(insert_at));
  for (const auto& [key, value] : read_config_file(config_path)) {
    const std::string flag = "--" + key;
    if (given(flag)) continue;
    if (value == "true") {
      out.push_back(flag);
    } else if (value != "false") {
      out.push_back(flag);
      out.push_back(value);
    }
  }
  out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(insert_at), rest.end());
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  args = expand_config(args);

  CLI::App app{"yiqmark: blind DWT-DCT colour image watermarking"};
  app.set_version_flag("--version", std::string(ym_version()));
  app.require_subcommand(1);
  app.add_option("--config", "Plain-text key = value file; flags win on conflict");

  // embed
  auto* embed = app.add_subcommand("embed", "Embed a binary watermark into a cover image");
  KeyOptions embed_keys;
  std::string cover_path, wm_path, out_path, out_format;
  int wm_threshold = 128;
  embed->add_option("--cover", cover_path, "Cover image (PNG or PPM)")->required();
  embed->add_option("--watermark", wm_path, "Watermark image (gray or RGB)")->required();
  embed->add_option("--out", out_path, "Watermarked output image")->required();
  embed->add_option("--format", out_format, "Output format (png or ppm); default from extension")
      ->check(CLI::IsMember({"png", "ppm"}));
  embed->add_option("--wm-threshold", wm_threshold, "Binarization threshold for the watermark")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();
  embed_keys.add_to(*embed, true);

  // extract
  auto* extract = app.add_subcommand("extract", "Blindly recover a watermark");
  KeyOptions extract_keys;
  std::string image_path, rec_path, ref_path;
  uint32_t wm_side = 0;
  extract->add_option("--image", image_path, "Watermarked image")->required();
  extract->add_option("--out", rec_path, "Recovered watermark image (0/255)")->required();
  extract->add_option("--format", out_format, "Output format (png or ppm)")
      ->check(CLI::IsMember({"png", "ppm"}));
  extract->add_option("--wm-side", wm_side, "Watermark side; default from the image size");
  extract->add_option("--ref", ref_path, "Original watermark, to report nc and ber");
  extract->add_option("--wm-threshold", wm_threshold, "Binarization threshold for --ref")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();
  extract_keys.add_to(*extract, true);

  // attack
  auto* attack = app.add_subcommand("attack", "Apply a robustness attack");
  std::string kind;
  double param = 0.0;
  uint64_t seed = 1;
  attack->add_option("--image", image_path, "Input image")->required();
  attack->add_option("--out", out_path, "Attacked output image")->required();
  attack->add_option("--format", out_format, "Output format (png or ppm)")
      ->check(CLI::IsMember({"png", "ppm"}));
  attack->add_option("--kind", kind, "scale | rotate | jpeg | gaussian_noise | salt_pepper")
      ->required()
      ->check(CLI::IsMember({"scale", "rotate", "jpeg", "gaussian", "gaussian_noise",
                             "salt_pepper"}));
  attack->add_option("--param", param, "Factor, degrees, quality, sigma or fraction")->required();
  attack->add_option("--seed", seed, "Noise seed")->capture_default_str();

  // psnr
  auto* psnr_cmd = app.add_subcommand("psnr", "PSNR between two RGB images");
  std::string test_path;
  psnr_cmd->add_option("--ref", ref_path, "Reference image")->required();
  psnr_cmd->add_option("--test", test_path, "Test image")->required();

  // nc
  auto* nc_cmd = app.add_subcommand("nc", "Normalized correlation and BER of two watermarks");
  nc_cmd->add_option("--ref", ref_path, "Original watermark")->required();
  nc_cmd->add_option("--test", test_path, "Recovered watermark")->required();
  nc_cmd->add_option("--wm-threshold", wm_threshold, "Binarization threshold")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();

  // hist
  auto* hist = app.add_subcommand("hist", "256-bin histogram of one RGB channel as CSV");
  std::string rgb_channel = "r";
  std::string csv_path;
  hist->add_option("--image", image_path, "Input image")->required();
  hist->add_option("--rgb-channel", rgb_channel, "r, g or b")
      ->check(CLI::IsMember({"r", "g", "b"}))
      ->capture_default_str();
  hist->add_option("--out", csv_path, "CSV output; standard output when omitted");

  // bench
  auto* bench = app.add_subcommand("bench", "Sweep covers x channels x k x attacks");
  KeyOptions bench_keys;
  std::vector<std::string> covers;
  std::string k_values = "1,2,3,4";
  std::string channels = "y,i,q";
  std::string attacks = "none";
  uint64_t wm_seed = 1;
  uint64_t attack_seed = 1;
  bool no_timing = false;
  bench->add_option("--cover", covers, "Cover image; repeat for several")->required();
  bench->add_option("--watermark", wm_path, "Watermark image; random when omitted");
  bench->add_option("--wm-seed", wm_seed, "Seed of the random watermark")->capture_default_str();
  bench->add_option("--wm-threshold", wm_threshold, "Binarization threshold")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();
  bench->add_option("--k-values", k_values, "Comma-separated flexing factors")
      ->capture_default_str();
  bench->add_option("--channels", channels, "Comma-separated channels")->capture_default_str();
  bench->add_option("--attacks", attacks,
                    "Comma-separated attacks: none, jpeg:Q, scale:F, rotate:DEG, gaussian:SIGMA, "
                    "salt_pepper:FRACTION")
      ->capture_default_str();
  bench->add_option("--attack-seed", attack_seed, "Seed for noise attacks")->capture_default_str();
  bench->add_option("--out", out_path, "JSON report; standard output when omitted");
  bench->add_flag("--no-timing", no_timing, "Report runtime_ms as 0 for byte-stable output");
  bench_keys.add_to(*bench, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::ValidationError& e) {
    // Well-formed command line, bad value: same class as library validation failures.
    app.exit(e);
    return kValidation;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (app.got_subcommand(embed)) {
    ImagePtr cover = load_image(cover_path);
    BitsPtr wm = load_watermark(wm_path, wm_threshold);
    ConfigPtr cfg = embed_keys.make(ym_bits_side(wm.get()), true);
    ym_image* o = nullptr;
    ym_embed_report report{};
    check(ym_embed(cover.get(), wm.get(), cfg.get(), &o, &report), "embedding");
    ImagePtr out(o);
    check(ym_image_write(out.get(), out_path.c_str(), format_for(out_path, out_format)),
          "writing " + out_path);
    print({{"psnr_db", psnr_json(report.psnr_db)},
           {"channel", channel_name(report.channel)},
           {"k", report.k},
           {"scramble_iterations", report.scramble_iterations},
           {"blocks_modified", report.blocks_modified},
           {"wm_side", ym_bits_side(wm.get())}});
    return kOk;
  }

  if (app.got_subcommand(extract)) {
    ImagePtr img = load_image(image_path);
    const uint32_t side = wm_side != 0 ? wm_side : natural_wm_side(img.get());
    ConfigPtr cfg = extract_keys.make(side, false);
    ym_bits* b = nullptr;
    check(ym_extract(img.get(), cfg.get(), &b), "extracting");
    BitsPtr bits(b);
    save_bits(bits.get(), rec_path, out_format);
    uint64_t ones = 0;
    const uint8_t* data = ym_bits_data(bits.get());
    for (uint64_t i = 0; i < uint64_t{side} * side; ++i) ones += data[i];
    ordered_json j{{"wm_side", side}, {"ones", ones}};
    if (!ref_path.empty()) {
      BitsPtr ref = load_watermark(ref_path, wm_threshold);
      double nc = 0.0, ber = 0.0;
      check(ym_nc(ref.get(), bits.get(), &nc), "nc");
      check(ym_ber(ref.get(), bits.get(), &ber), "ber");
      j["nc"] = nc;
      j["ber"] = ber;
    }
    print(j);
    return kOk;
  }

  if (app.got_subcommand(attack)) {
    ImagePtr img = load_image(image_path);
    ym_image* o = nullptr;
    check(ym_attack(img.get(), attack_kind_from_name(kind), param, seed, &o), "attack");
    ImagePtr out(o);
    check(ym_image_write(out.get(), out_path.c_str(), format_for(out_path, out_format)),
          "writing " + out_path);
    double db = 0.0;
    check(ym_psnr(img.get(), out.get(), &db), "psnr");
    print({{"kind", kind}, {"param", param}, {"psnr_db", psnr_json(db)}});
    return kOk;
  }

  if (app.got_subcommand(psnr_cmd)) {
    ImagePtr a = load_image(ref_path);
    ImagePtr b = load_image(test_path);
    double db = 0.0;
    check(ym_psnr(a.get(), b.get(), &db), "psnr");
    print({{"psnr_db", psnr_json(db)}});
    return kOk;
  }

  if (app.got_subcommand(nc_cmd)) {
    BitsPtr a = load_watermark(ref_path, wm_threshold);
    BitsPtr b = load_watermark(test_path, wm_threshold);
    double nc = 0.0, ber = 0.0;
    check(ym_nc(a.get(), b.get(), &nc), "nc");
    check(ym_ber(a.get(), b.get(), &ber), "ber");
    print({{"nc", nc}, {"ber", ber}});
    return kOk;
  }

  if (app.got_subcommand(hist)) {
    ImagePtr img = load_image(image_path);
    const ym_rgb_channel c = rgb_channel == "r" ? YM_RGB_R : rgb_channel == "g" ? YM_RGB_G : YM_RGB_B;
    uint64_t bins[256] = {};
    check(ym_histogram(img.get(), c, bins), "histogram");
    std::ostringstream csv;
    for (int i = 0; i < 256; ++i) csv << i << "," << bins[i] << "\n";
    if (csv_path.empty()) {
      std::cout << csv.str();
    } else {
      std::ofstream f(csv_path, std::ios::binary | std::ios::trunc);
      f << csv.str();
      if (!f) throw Failure{kIo, "cannot write " + csv_path};
    }
    return kOk;
  }

  if (app.got_subcommand(bench)) {
    std::vector<double> ks;
    for (const auto& s : split(k_values, ',')) {
      try {
        ks.push_back(std::stod(s));
      } catch (const std::exception&) {
        throw Failure{kValidation, "bad --k-values entry '" + s + "'"};
      }
    }
    std::vector<std::string> chans = split(channels, ',');
    std::vector<Attack> atks;
    for (const auto& a : split(attacks, ',')) atks.push_back(parse_attack(a));
    if (ks.empty() || chans.empty() || atks.empty()) {
      throw Failure{kValidation, "bench needs at least one k, channel and attack"};
    }

    ordered_json cells = ordered_json::array();
    for (const auto& cover_file : covers) {
      ImagePtr cover = load_image(cover_file);
      BitsPtr wm;
      std::string wm_source;
      if (!wm_path.empty()) {
        wm = load_watermark(wm_path, wm_threshold);
        wm_source = wm_path;
      } else {
        ym_bits* b = nullptr;
        check(ym_bits_random(natural_wm_side(cover.get()), wm_seed, &b), "random watermark");
        wm.reset(b);
        wm_source = "random:" + std::to_string(wm_seed);
      }
      for (const auto& ch : chans) {
        for (double k : ks) {
          KeyOptions opts = bench_keys;
          opts.channel = ch;
          opts.k = k;
          ConfigPtr cfg = opts.make(ym_bits_side(wm.get()), true);
          for (const Attack& atk : atks) {
            const auto t0 = std::chrono::steady_clock::now();
            ym_image* o = nullptr;
            ym_embed_report report{};
            check(ym_embed(cover.get(), wm.get(), cfg.get(), &o, &report), "embedding " + cover_file);
            ImagePtr marked(o);
            ImagePtr attacked;
            if (!atk.none) {
              ym_image* a = nullptr;
              check(ym_attack(marked.get(), atk.kind, atk.param, attack_seed, &a), atk.label);
              attacked.reset(a);
            }
            ym_bits* r = nullptr;
            check(ym_extract(attacked ? attacked.get() : marked.get(), cfg.get(), &r), "extracting");
            BitsPtr rec(r);
            double nc = 0.0, ber = 0.0;
            check(ym_nc(wm.get(), rec.get(), &nc), "nc");
            check(ym_ber(wm.get(), rec.get(), &ber), "ber");
            const auto t1 = std::chrono::steady_clock::now();
            const double ms =
                no_timing ? 0.0 : std::chrono::duration<double, std::milli>(t1 - t0).count();
            cells.push_back({{"tool", "yiqmark"},
                             {"version", ym_version()},
                             {"cover", cover_file},
                             {"watermark", wm_source},
                             {"wm_side", ym_bits_side(wm.get())},
                             {"channel", channel_name(ym_config_channel(cfg.get()))},
                             {"k", k},
                             {"attack", atk.label},
                             {"attack_seed", attack_seed},
                             {"keys", keys_json(cfg.get())},
                             {"mask", mask_json(cfg.get())},
                             {"scramble_iterations", report.scramble_iterations},
                             {"psnr_db", psnr_json(report.psnr_db)},
                             {"nc", nc},
                             {"ber", ber},
                             {"runtime_ms", ms}});
          }
        }
      }
    }
    const std::string text = cells.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
      f << text;
      if (!f) throw Failure{kIo, "cannot write " + out_path};
    }
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "yiqmark: " << f.message << "\n";
    return f.exit_code;
  }
}
