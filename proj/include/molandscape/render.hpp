/**
 * @file render.hpp
 * @brief Raster rendering of height fields, criticality maps and PLOT
 *        composites, and PPM/PNG writers.
 *
 * A raster has exactly n1 x n2 pixels. Grid point (j1, j2) is drawn in
 * column j1 and row n2 - 1 - j2, so x2 increases upward.
 */

#ifndef MOLANDSCAPE_RENDER_HPP
#define MOLANDSCAPE_RENDER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "molandscape/criticality.hpp"
#include "molandscape/landscape.hpp"

namespace molandscape {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

/// Linear blue (t = 0) to red (t = 1); t is clamped to [0, 1].
Rgb blue_red(double t);

struct PlotArtifact {
  std::size_t width = 0;
  std::size_t height = 0;
  /// Row-major RGB triples, top row first.
  std::vector<std::uint8_t> pixels;
  /// Raw height range before display scaling.
  double height_min = 0.0;
  double height_max = 0.0;
  /// Dominance rank to overlay color, for ranks present in the image.
  std::vector<std::pair<std::size_t, Rgb>> rank_colors;
  std::vector<std::string> warnings;

  PlotArtifact(std::size_t w, std::size_t h, Rgb fill = {});

  [[nodiscard]] Rgb pixel(std::size_t column, std::size_t row) const;
  void set_pixel(std::size_t column, std::size_t row, Rgb c);
  /// Pixel showing grid point (j1, j2).
  [[nodiscard]] Rgb at_grid(std::size_t j1, std::size_t j2) const;
  void set_grid(std::size_t j1, std::size_t j2, Rgb c);
};

/// Heights mapped to [0, 1], through log(1 + h) when log_scale is set. Constant fields map to 0.
std::vector<double> normalized_heights(const HeightField& h, bool log_scale);

/// Blue-to-red heatmap of a GFH or cost landscape.
PlotArtifact render_heatmap(const HeightField& h, bool log_scale = true);

/// White background, gray CriticalOnly points, black locally efficient points.
PlotArtifact render_critical(const CriticalityMap& map);

/**
 * @brief PLOT composite: grayscale GFH background (low = light) with the
 *        locally efficient points colored by dominance rank, blue for rank 0
 *        to red for the largest rank.
 */
PlotArtifact compose_plot(const HeightField& gfh, const EfficientSetDecomposition& d,
                          bool log_scale = true);

/// Binary P6 portable pixmap.
void write_ppm(std::ostream& out, const PlotArtifact& img);

/// 8-bit RGB PNG (zlib-compressed, filter type 0).
void write_png(std::ostream& out, const PlotArtifact& img);

}  // namespace molandscape

#endif  // MOLANDSCAPE_RENDER_HPP
