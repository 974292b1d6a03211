#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agentbd/geometry.hpp"

namespace agentbd {

struct Color {
  uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Color&) const = default;
};

// Row-major 8-bit RGB raster.
class Image {
 public:
  Image() = default;
  Image(int width, int height, Color fill = Color{0, 0, 0});

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<uint8_t>& data() const { return data_; }
  std::vector<uint8_t>& data() { return data_; }

  Color get(int x, int y) const {
    size_t i = idx(x, y);
    return Color{data_[i], data_[i + 1], data_[i + 2]};
  }
  void set(int x, int y, Color c) {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return;
    size_t i = idx(x, y);
    data_[i] = c.r;
    data_[i + 1] = c.g;
    data_[i + 2] = c.b;
  }

  void fill_rect(const RectPx& r, Color c);
  void fill_rounded_rect(const RectPx& r, int radius, Color c);
  void draw_rect_border(const RectPx& r, int thickness, Color c);
  void draw_line(int x0, int y0, int x1, int y1, Color c);

  bool operator==(const Image& o) const {
    return width_ == o.width_ && height_ == o.height_ && data_ == o.data_;
  }

 private:
  size_t idx(int x, int y) const {
    return (static_cast<size_t>(y) * width_ + x) * 3;
  }
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> data_;
};

// Binary PPM (P6); lossless and byte-deterministic.
void write_ppm(const Image& img, const std::string& path);
Image read_ppm(const std::string& path);

// Box-filter downsample/resample with fractional pixel coverage.
Image resize_area(const Image& src, int out_width, int out_height);

// Mean per-pixel L1 distance across RGB channels; images must match in size.
double pixel_l1_distance(const Image& a, const Image& b);

// Tight bounding box of differing pixels; w==0 means identical.
RectPx diff_bounding_box(const Image& a, const Image& b);

}  // namespace agentbd
