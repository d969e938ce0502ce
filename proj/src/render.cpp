#include "molandscape/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <ostream>

#include <zlib.h>

namespace molandscape {

namespace {

constexpr Rgb kWhite{255, 255, 255};
constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kGray{160, 160, 160};

std::uint8_t channel(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

// Low heights light, high heights dark.
Rgb background_gray(double t) {
  const std::uint8_t v = channel(235.0 - 195.0 * t);
  return {v, v, v};
}

void put_u32(std::string& s, std::uint32_t v) {
  s.push_back(static_cast<char>((v >> 24) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>(v & 0xff));
}

void write_chunk(std::ostream& out, const char* type, const std::string& data) {
  std::string chunk;
  put_u32(chunk, static_cast<std::uint32_t>(data.size()));
  chunk.append(type, 4);
  chunk += data;
  const auto* crc_begin = reinterpret_cast<const Bytef*>(chunk.data() + 4);
  const uLong crc = crc32(crc32(0L, Z_NULL, 0), crc_begin, static_cast<uInt>(chunk.size() - 4));
  put_u32(chunk, static_cast<std::uint32_t>(crc));
  out.write(chunk.data(), static_cast<std::streamsize>(chunk.size()));
}

}  // namespace

Rgb blue_red(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return {channel(255.0 * t), 0, channel(255.0 * (1.0 - t))};
}

PlotArtifact::PlotArtifact(std::size_t w, std::size_t h, Rgb fill)
    : width(w), height(h), pixels(3 * w * h) {
  for (std::size_t i = 0; i < w * h; ++i) {
    pixels[3 * i] = fill.r;
    pixels[3 * i + 1] = fill.g;
    pixels[3 * i + 2] = fill.b;
  }
}

Rgb PlotArtifact::pixel(std::size_t column, std::size_t row) const {
  const std::size_t k = 3 * (row * width + column);
  return {pixels[k], pixels[k + 1], pixels[k + 2]};
}

void PlotArtifact::set_pixel(std::size_t column, std::size_t row, Rgb c) {
  const std::size_t k = 3 * (row * width + column);
  pixels[k] = c.r;
  pixels[k + 1] = c.g;
  pixels[k + 2] = c.b;
}

Rgb PlotArtifact::at_grid(std::size_t j1, std::size_t j2) const { return pixel(j1, height - 1 - j2); }

void PlotArtifact::set_grid(std::size_t j1, std::size_t j2, Rgb c) { set_pixel(j1, height - 1 - j2, c); }

std::vector<double> normalized_heights(const HeightField& h, bool log_scale) {
  std::vector<double> v = h.heights.values;
  if (log_scale) {
    for (double& x : v) x = std::log1p(x);
  }
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double min = v.empty() ? 0.0 : *lo;
  const double range = v.empty() ? 0.0 : *hi - *lo;
  for (double& x : v) x = range > 0.0 ? (x - min) / range : 0.0;
  return v;
}

namespace {

void record_range(PlotArtifact& img, const HeightField& h) {
  const auto& v = h.heights.values;
  if (v.empty()) return;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  img.height_min = *lo;
  img.height_max = *hi;
}

}  // namespace

PlotArtifact render_heatmap(const HeightField& h, bool log_scale) {
  const Grid& g = h.heights.grid;
  PlotArtifact img(g.n1(), g.n2());
  record_range(img, h);
  const auto t = normalized_heights(h, log_scale);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto [j1, j2] = g.coords(i);
    img.set_grid(j1, j2, blue_red(t[i]));
  }
  return img;
}

PlotArtifact render_critical(const CriticalityMap& map) {
  const Grid& g = map.grid;
  PlotArtifact img(g.n1(), g.n2(), kWhite);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto [j1, j2] = g.coords(i);
    if (is_efficient(map.classes[i])) {
      img.set_grid(j1, j2, kBlack);
    } else if (map.classes[i] == PointClass::CriticalOnly) {
      img.set_grid(j1, j2, kGray);
    }
  }
  if (map.count_efficient() == 0) img.warnings.emplace_back("no locally efficient points found");
  return img;
}

PlotArtifact compose_plot(const HeightField& gfh, const EfficientSetDecomposition& d, bool log_scale) {
  const Grid& g = gfh.heights.grid;
  PlotArtifact img(g.n1(), g.n2());
  record_range(img, gfh);
  const auto t = normalized_heights(gfh, log_scale);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto [j1, j2] = g.coords(i);
    img.set_grid(j1, j2, background_gray(t[i]));
  }

  if (d.n_efficient == 0) {
    img.warnings.emplace_back("no locally efficient points found; background only");
    return img;
  }
  const double max_rank = static_cast<double>(d.max_rank());
  std::map<std::size_t, Rgb> legend;
  for (const auto& c : d.components) {
    for (std::size_t p : c.points) {
      const std::size_t r = d.rank[p];
      const Rgb color = blue_red(max_rank > 0.0 ? static_cast<double>(r) / max_rank : 0.0);
      legend.emplace(r, color);
      const auto [j1, j2] = g.coords(p);
      img.set_grid(j1, j2, color);
    }
  }
  img.rank_colors.assign(legend.begin(), legend.end());
  return img;
}

void write_ppm(std::ostream& out, const PlotArtifact& img) {
  out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
}

void write_png(std::ostream& out, const PlotArtifact& img) {
  static constexpr std::array<unsigned char, 8> kSignature{0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  out.write(reinterpret_cast<const char*>(kSignature.data()), kSignature.size());

  std::string header;
  put_u32(header, static_cast<std::uint32_t>(img.width));
  put_u32(header, static_cast<std::uint32_t>(img.height));
  header += std::string{8, 2, 0, 0, 0};  // 8-bit depth, truecolor, deflate, filter 0, no interlace
  write_chunk(out, "IHDR", header);

  const std::size_t stride = 3 * img.width;
  std::vector<Bytef> raw;
  raw.reserve((stride + 1) * img.height);
  for (std::size_t row = 0; row < img.height; ++row) {
    raw.push_back(0);
    raw.insert(raw.end(), img.pixels.begin() + static_cast<std::ptrdiff_t>(row * stride),
               img.pixels.begin() + static_cast<std::ptrdiff_t>((row + 1) * stride));
  }
  uLongf packed_size = compressBound(static_cast<uLong>(raw.size()));
  std::string packed(packed_size, '\0');
  if (compress2(reinterpret_cast<Bytef*>(packed.data()), &packed_size, raw.data(),
                static_cast<uLong>(raw.size()), Z_BEST_COMPRESSION) != Z_OK) {
    throw std::runtime_error("png: zlib compression failed");
  }
  packed.resize(packed_size);
  write_chunk(out, "IDAT", packed);
  write_chunk(out, "IEND", {});
}

}  // namespace molandscape
