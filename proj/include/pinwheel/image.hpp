#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "pinwheel/errors.hpp"

namespace pinwheel {

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, top row first
};

struct RgbImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // RGB triples, row-major, top row first
};

// Deterministic 8-bit quantization: round half away from zero.
inline std::uint8_t quantize8(double x) {
  const long v = std::lround(x * 255.0);
  return static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
}

// hue in [0, 2pi), sat/val in [0, 1].
inline std::array<std::uint8_t, 3> hsv_to_rgb(double hue, double sat, double val) {
  const double two_pi = 2.0 * std::numbers::pi;
  double h = std::fmod(hue, two_pi);
  if (h < 0.0) h += two_pi;
  const double sector = h * 3.0 / std::numbers::pi;  // [0, 6)
  const int i = static_cast<int>(sector) % 6;
  const double frac = sector - std::floor(sector);
  const double p = val * (1.0 - sat);
  const double q = val * (1.0 - sat * frac);
  const double t = val * (1.0 - sat * (1.0 - frac));
  double r = 0.0, g = 0.0, b = 0.0;
  switch (i) {
    case 0: r = val; g = t; b = p; break;
    case 1: r = q; g = val; b = p; break;
    case 2: r = p; g = val; b = t; break;
    case 3: r = p; g = q; b = val; break;
    case 4: r = t; g = p; b = val; break;
    default: r = val; g = p; b = q; break;
  }
  return {quantize8(r), quantize8(g), quantize8(b)};
}

// Linear min-max gray normalization; the constants are returned so callers
// can record them in a sidecar.
struct GrayNormalization {
  double minimum = 0.0;
  double maximum = 0.0;
};

inline GrayImage to_gray_image(const std::vector<double>& values, std::size_t width,
                               std::size_t height, GrayNormalization* norm_out = nullptr) {
  if (values.size() != width * height) throw ConfigError("to_gray_image: size mismatch");
  double lo = values.empty() ? 0.0 : values[0];
  double hi = lo;
  for (const double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi - lo;
  GrayImage img{width, height, std::vector<std::uint8_t>(width * height, 0)};
  // values are indexed [ix * height + iy] with iy increasing upward; image
  // rows run top to bottom.
  for (std::size_t row = 0; row < height; ++row) {
    for (std::size_t col = 0; col < width; ++col) {
      const double v = values[col * height + (height - 1 - row)];
      img.pixels[row * width + col] = span > 0.0 ? quantize8((v - lo) / span) : 0;
    }
  }
  if (norm_out) *norm_out = GrayNormalization{lo, hi};
  return img;
}

inline void write_pgm(const std::string& path, const GrayImage& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("write_pgm: cannot open " + path);
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw ConfigError("write_pgm: write failed for " + path);
}

namespace detail {

inline std::uint32_t crc32(const std::uint8_t* data, std::size_t n, std::uint32_t crc = 0) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  crc ^= 0xFFFFFFFFu;
  for (std::size_t i = 0; i < n; ++i) crc = table[(crc ^ data[i]) & 0xFFu] ^ (crc >> 8);
  return crc ^ 0xFFFFFFFFu;
}

inline std::uint32_t adler32(const std::uint8_t* data, std::size_t n) {
  std::uint32_t a = 1, b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    a = (a + data[i]) % 65521u;
    b = (b + a) % 65521u;
  }
  return (b << 16) | a;
}

inline void push_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline void push_chunk(std::vector<std::uint8_t>& out, const char type[4],
                       const std::vector<std::uint8_t>& payload) {
  push_u32_be(out, static_cast<std::uint32_t>(payload.size()));
  std::vector<std::uint8_t> body(type, type + 4);
  body.insert(body.end(), payload.begin(), payload.end());
  out.insert(out.end(), body.begin(), body.end());
  push_u32_be(out, crc32(body.data(), body.size()));
}

// zlib stream with stored (uncompressed) deflate blocks: byte-exact output
// with no compressor dependency.
inline std::vector<std::uint8_t> zlib_stored(const std::vector<std::uint8_t>& raw) {
  std::vector<std::uint8_t> z{0x78, 0x01};
  std::size_t pos = 0;
  do {
    const std::size_t len = std::min<std::size_t>(65535, raw.size() - pos);
    const bool final = pos + len == raw.size();
    z.push_back(final ? 1 : 0);
    z.push_back(static_cast<std::uint8_t>(len & 0xFF));
    z.push_back(static_cast<std::uint8_t>(len >> 8));
    z.push_back(static_cast<std::uint8_t>(~len & 0xFF));
    z.push_back(static_cast<std::uint8_t>((~len >> 8) & 0xFF));
    z.insert(z.end(), raw.begin() + static_cast<std::ptrdiff_t>(pos),
             raw.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  } while (pos < raw.size());
  push_u32_be(z, adler32(raw.data(), raw.size()));
  return z;
}

}  // namespace detail

inline std::vector<std::uint8_t> encode_png(const RgbImage& img) {
  if (img.pixels.size() != img.width * img.height * 3)
    throw ConfigError("encode_png: size mismatch");
  std::vector<std::uint8_t> out{0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  std::vector<std::uint8_t> ihdr;
  detail::push_u32_be(ihdr, static_cast<std::uint32_t>(img.width));
  detail::push_u32_be(ihdr, static_cast<std::uint32_t>(img.height));
  ihdr.insert(ihdr.end(), {8, 2, 0, 0, 0});  // 8-bit RGB, no interlace
  detail::push_chunk(out, "IHDR", ihdr);
  std::vector<std::uint8_t> raw;
  raw.reserve(img.height * (1 + 3 * img.width));
  for (std::size_t row = 0; row < img.height; ++row) {
    raw.push_back(0);  // filter: none
    const std::size_t base = row * img.width * 3;
    raw.insert(raw.end(), img.pixels.begin() + static_cast<std::ptrdiff_t>(base),
               img.pixels.begin() + static_cast<std::ptrdiff_t>(base + img.width * 3));
  }
  detail::push_chunk(out, "IDAT", detail::zlib_stored(raw));
  detail::push_chunk(out, "IEND", {});
  return out;
}

inline void write_png(const std::string& path, const RgbImage& img) {
  const auto bytes = encode_png(img);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("write_png: cannot open " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ConfigError("write_png: write failed for " + path);
}

}  // namespace pinwheel
