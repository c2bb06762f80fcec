#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "pinwheel/errors.hpp"
#include "pinwheel/orientation.hpp"
#include "pinwheel/se2.hpp"
#include "pinwheel/spectrum.hpp"
#include "pinwheel/synthesis.hpp"

namespace pinwheel {

// All numeric text output goes through %.17g: round-trip exact for doubles
// and stable across runs, which the byte-identical contract relies on.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("write_text_file: cannot open " + path);
  out << content;
  if (!out) throw ConfigError("write_text_file: write failed for " + path);
}

inline std::string read_binary_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("read_binary_file: cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// FNV-1a over the raw bytes; recorded in sidecars so artifacts are
// self-checking.
inline std::string fnv1a64_hex(const void* data, std::size_t n) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
  return fnv1a64_hex(bytes.data(), bytes.size());
}

inline std::string csv_of_circle_function(const CircleFunction& f) {
  const auto phi = circle_nodes(f.size());
  std::string out = "phi,re,im\n";
  for (std::size_t j = 0; j < f.size(); ++j)
    out += format_g17(phi[j]) + "," + format_g17(f.v[j].real()) + "," +
           format_g17(f.v[j].imag()) + "\n";
  return out;
}

inline std::string csv_of_field(const ComplexField& field) {
  std::string out = "x1,x2,re,im\n";
  const GridSpec& g = field.grid;
  for (std::size_t ix = 0; ix < g.nx; ++ix)
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
      const cplx v = field.at(ix, iy);
      out += format_g17(g.x1_at(ix)) + "," + format_g17(g.x2_at(iy)) + "," +
             format_g17(v.real()) + "," + format_g17(v.imag()) + "\n";
    }
  return out;
}

inline std::string csv_of_orientation_map(const OrientationMap& omap) {
  std::string out = "x1,x2,preferred,selectivity\n";
  const GridSpec& g = omap.grid;
  for (std::size_t ix = 0; ix < g.nx; ++ix)
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
      const std::size_t i = ix * g.ny + iy;
      out += format_g17(g.x1_at(ix)) + "," + format_g17(g.x2_at(iy)) + "," +
             format_g17(omap.preferred[i]) + "," + format_g17(omap.selectivity[i]) + "\n";
    }
  return out;
}

inline std::string csv_of_fan(const std::vector<std::vector<PlanarPoint>>& fan, double s_max) {
  std::string out = "curve_id,s,x1,x2\n";
  for (std::size_t c = 0; c < fan.size(); ++c) {
    const auto& curve = fan[c];
    const double h = s_max / static_cast<double>(curve.size() - 1);
    for (std::size_t i = 0; i < curve.size(); ++i)
      out += std::to_string(c) + "," + format_g17(h * static_cast<double>(i)) + "," +
             format_g17(curve[i].x1) + "," + format_g17(curve[i].x2) + "\n";
  }
  return out;
}

inline std::string csv_of_spectrum(const RadialSpectrum& spec) {
  std::string out = "bin_center_k,power\n";
  for (std::size_t b = 0; b < spec.power.size(); ++b)
    out += format_g17(spec.bin_center(b)) + "," + format_g17(spec.power[b]) + "\n";
  return out;
}

// Minimal SVG polyline export; world coordinates are mapped to a square
// viewport with a small margin.
inline std::string svg_of_polylines(const std::vector<std::vector<PlanarPoint>>& curves,
                                    int pixels = 640) {
  double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
  bool first = true;
  for (const auto& curve : curves)
    for (const auto& p : curve) {
      if (first) {
        lo_x = hi_x = p.x1;
        lo_y = hi_y = p.x2;
        first = false;
      }
      lo_x = std::min(lo_x, p.x1);
      hi_x = std::max(hi_x, p.x1);
      lo_y = std::min(lo_y, p.x2);
      hi_y = std::max(hi_y, p.x2);
    }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double margin = 0.05 * span;
  const double scale = pixels / (span + 2.0 * margin);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(pixels) + "\" height=\"" + std::to_string(pixels) + "\">\n";
  for (const auto& curve : curves) {
    out += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (const auto& p : curve) {
      const double px = (p.x1 - lo_x + margin) * scale;
      const double py = pixels - (p.x2 - lo_y + margin) * scale;  // y up
      out += format_g17(px) + "," + format_g17(py) + " ";
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pinwheel
