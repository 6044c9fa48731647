#pragma once
// Contour-style rasterization of projected patterns: samples on a pixel
// grid, uniform level quantization between the sample extremes, binary PGM
// output, and the bilinear rotation-symmetry check used by the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "crystalproj/pattern.hpp"

namespace crystalproj {

struct RenderWindow {
  double cx = 0, cy = 0;
  double width = 2, height = 2;
};

struct RasterImage {
  int width = 0, height = 0;
  RenderWindow window;
  std::vector<double> samples;     // row major, row 0 at the window top
  std::vector<uint8_t> quantized;  // 8-bit grayscale after level binning

  double sample(int row, int col) const { return samples[row * width + col]; }
};

// resolution = pixels across the window width; rows follow the aspect ratio.
RasterImage render(const ProjectedPattern& p, const RenderWindow& w,
                   int resolution, int levels);

void write_pgm(const RasterImage& img, const std::string& path);

// Max |S(R^-1(x - c) + c) - S(x)| over pixels whose rotated preimage stays
// inside the window, with bilinear resampling on the pre-quantization grid.
double rotation_deviation(const RasterImage& img, double angle_degrees,
                          double cx, double cy);

}  // namespace crystalproj
