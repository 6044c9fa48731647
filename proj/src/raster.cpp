#include "crystalproj/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace crystalproj {

RasterImage render(const ProjectedPattern& p, const RenderWindow& w,
                   int resolution, int levels) {
  if (resolution < 16) throw std::invalid_argument("resolution must be >= 16");
  if (levels < 2) throw std::invalid_argument("need at least two levels");
  if (!(w.width > 0) || !(w.height > 0))
    throw std::invalid_argument("window must have positive size");

  RasterImage img;
  img.window = w;
  img.width = resolution;
  img.height = std::max(
      16, static_cast<int>(std::lround(resolution * w.height / w.width)));
  img.samples.resize(static_cast<size_t>(img.width) * img.height);

  double px = w.width / img.width;
  double py = w.height / img.height;
  for (int row = 0; row < img.height; ++row) {
    double y = w.cy + w.height / 2 - (row + 0.5) * py;
    for (int col = 0; col < img.width; ++col) {
      double x = w.cx - w.width / 2 + (col + 0.5) * px;
      img.samples[row * img.width + col] = eval(p, {x, y});
    }
  }

  auto [mn_it, mx_it] = std::minmax_element(img.samples.begin(),
                                            img.samples.end());
  double mn = *mn_it, mx = *mx_it;
  img.quantized.resize(img.samples.size());
  double span = mx - mn;
  // Degenerate range (constant or numerically zero pattern): one flat level.
  if (!(span > 1e-13 * (std::abs(mn) + std::abs(mx) + 1))) {
    std::fill(img.quantized.begin(), img.quantized.end(), uint8_t{128});
    return img;
  }
  for (size_t i = 0; i < img.samples.size(); ++i) {
    int bin = static_cast<int>((img.samples[i] - mn) / span * levels);
    bin = std::clamp(bin, 0, levels - 1);
    img.quantized[i] =
        static_cast<uint8_t>(std::lround(255.0 * bin / (levels - 1)));
  }
  return img;
}

void write_pgm(const RasterImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.quantized.data()),
            static_cast<std::streamsize>(img.quantized.size()));
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

namespace {

// Bilinear interpolation in window coordinates; caller guarantees the point
// is at least one pixel away from the border.
double bilinear(const RasterImage& img, double x, double y) {
  double px = img.window.width / img.width;
  double py = img.window.height / img.height;
  double fc = (x - (img.window.cx - img.window.width / 2)) / px - 0.5;
  double fr = ((img.window.cy + img.window.height / 2) - y) / py - 0.5;
  int c0 = static_cast<int>(std::floor(fc));
  int r0 = static_cast<int>(std::floor(fr));
  double tc = fc - c0, tr = fr - r0;
  c0 = std::clamp(c0, 0, img.width - 2);
  r0 = std::clamp(r0, 0, img.height - 2);
  double v00 = img.sample(r0, c0), v01 = img.sample(r0, c0 + 1);
  double v10 = img.sample(r0 + 1, c0), v11 = img.sample(r0 + 1, c0 + 1);
  return (1 - tr) * ((1 - tc) * v00 + tc * v01) +
         tr * ((1 - tc) * v10 + tc * v11);
}

}  // namespace

double rotation_deviation(const RasterImage& img, double angle_degrees,
                          double cx, double cy) {
  double theta = angle_degrees * std::numbers::pi / 180.0;
  double ct = std::cos(theta), st = std::sin(theta);
  double px = img.window.width / img.width;
  double py = img.window.height / img.height;
  double x_lo = img.window.cx - img.window.width / 2 + 1.5 * px;
  double x_hi = img.window.cx + img.window.width / 2 - 1.5 * px;
  double y_lo = img.window.cy - img.window.height / 2 + 1.5 * py;
  double y_hi = img.window.cy + img.window.height / 2 - 1.5 * py;

  double worst = 0;
  for (int row = 0; row < img.height; ++row) {
    double y = img.window.cy + img.window.height / 2 - (row + 0.5) * py;
    for (int col = 0; col < img.width; ++col) {
      double x = img.window.cx - img.window.width / 2 + (col + 0.5) * px;
      // Inverse rotation about (cx, cy).
      double dx = x - cx, dy = y - cy;
      double rx = cx + ct * dx + st * dy;
      double ry = cy - st * dx + ct * dy;
      if (rx < x_lo || rx > x_hi || ry < y_lo || ry > y_hi) continue;
      worst = std::max(worst,
                       std::abs(bilinear(img, rx, ry) - img.sample(row, col)));
    }
  }
  return worst;
}

}  // namespace crystalproj
