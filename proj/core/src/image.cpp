#include "agentbd/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace agentbd {

Image::Image(int width, int height, Color fill) : width_(width), height_(height) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("Image: non-positive size");
  data_.resize(static_cast<size_t>(width) * height * 3);
  for (size_t i = 0; i < data_.size(); i += 3) {
    data_[i] = fill.r;
    data_[i + 1] = fill.g;
    data_[i + 2] = fill.b;
  }
}

void Image::fill_rect(const RectPx& r, Color c) {
  int x0 = std::max(0, r.x), y0 = std::max(0, r.y);
  int x1 = std::min(width_, r.x + r.w), y1 = std::min(height_, r.y + r.h);
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) set(x, y, c);
}

void Image::fill_rounded_rect(const RectPx& r, int radius, Color c) {
  radius = std::min({radius, r.w / 2, r.h / 2});
  if (radius <= 0) {
    fill_rect(r, c);
    return;
  }
  int x0 = std::max(0, r.x), y0 = std::max(0, r.y);
  int x1 = std::min(width_, r.x + r.w), y1 = std::min(height_, r.y + r.h);
  const double rr = static_cast<double>(radius) * radius;
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      int dx = 0, dy = 0;
      if (x < r.x + radius) dx = r.x + radius - x;
      else if (x >= r.x + r.w - radius) dx = x - (r.x + r.w - radius - 1);
      if (y < r.y + radius) dy = r.y + radius - y;
      else if (y >= r.y + r.h - radius) dy = y - (r.y + r.h - radius - 1);
      if (dx > 0 && dy > 0 && dx * dx + dy * dy > rr) continue;
      set(x, y, c);
    }
  }
}

void Image::draw_rect_border(const RectPx& r, int thickness, Color c) {
  fill_rect(RectPx{r.x, r.y, r.w, thickness}, c);
  fill_rect(RectPx{r.x, r.y + r.h - thickness, r.w, thickness}, c);
  fill_rect(RectPx{r.x, r.y, thickness, r.h}, c);
  fill_rect(RectPx{r.x + r.w - thickness, r.y, thickness, r.h}, c);
}

void Image::draw_line(int x0, int y0, int x1, int y1, Color c) {
  int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
  int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    set(x0, y0, c);
    if (x0 == x1 && y0 == y1) break;
    int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

void write_ppm(const Image& img, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_ppm: cannot open " + path);
  f << "P6\n" << img.width() << " " << img.height() << "\n255\n";
  f.write(reinterpret_cast<const char*>(img.data().data()),
          static_cast<std::streamsize>(img.data().size()));
  if (!f) throw std::runtime_error("write_ppm: short write to " + path);
}

Image read_ppm(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_ppm: cannot open " + path);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  f >> magic >> w >> h >> maxval;
  if (magic != "P6" || maxval != 255 || w <= 0 || h <= 0)
    throw std::runtime_error("read_ppm: unsupported format in " + path);
  f.get();  // single whitespace after header
  Image img(w, h);
  f.read(reinterpret_cast<char*>(img.data().data()),
         static_cast<std::streamsize>(img.data().size()));
  if (!f) throw std::runtime_error("read_ppm: truncated data in " + path);
  return img;
}

Image resize_area(const Image& src, int out_width, int out_height) {
  if (out_width <= 0 || out_height <= 0)
    throw std::invalid_argument("resize_area: non-positive output size");
  if (out_width == src.width() && out_height == src.height()) return src;
  Image out(out_width, out_height);
  const double sx = static_cast<double>(src.width()) / out_width;
  const double sy = static_cast<double>(src.height()) / out_height;
  for (int oy = 0; oy < out_height; ++oy) {
    const double fy0 = oy * sy, fy1 = (oy + 1) * sy;
    const int iy0 = static_cast<int>(std::floor(fy0));
    const int iy1 = std::min(src.height(), static_cast<int>(std::ceil(fy1)));
    for (int ox = 0; ox < out_width; ++ox) {
      const double fx0 = ox * sx, fx1 = (ox + 1) * sx;
      const int ix0 = static_cast<int>(std::floor(fx0));
      const int ix1 = std::min(src.width(), static_cast<int>(std::ceil(fx1)));
      double acc[3] = {0, 0, 0};
      double area = 0;
      for (int iy = iy0; iy < iy1; ++iy) {
        const double cy = std::min(fy1, iy + 1.0) - std::max(fy0, static_cast<double>(iy));
        for (int ix = ix0; ix < ix1; ++ix) {
          const double cx = std::min(fx1, ix + 1.0) - std::max(fx0, static_cast<double>(ix));
          const double cov = cx * cy;
          Color c = src.get(ix, iy);
          acc[0] += cov * c.r;
          acc[1] += cov * c.g;
          acc[2] += cov * c.b;
          area += cov;
        }
      }
      out.set(ox, oy,
              Color{static_cast<uint8_t>(std::lround(acc[0] / area)),
                    static_cast<uint8_t>(std::lround(acc[1] / area)),
                    static_cast<uint8_t>(std::lround(acc[2] / area))});
    }
  }
  return out;
}

double pixel_l1_distance(const Image& a, const Image& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw std::invalid_argument("pixel_l1_distance: size mismatch");
  double total = 0;
  for (size_t i = 0; i < a.data().size(); ++i)
    total += std::abs(static_cast<int>(a.data()[i]) - static_cast<int>(b.data()[i]));
  return total / static_cast<double>(a.data().size());
}

RectPx diff_bounding_box(const Image& a, const Image& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw std::invalid_argument("diff_bounding_box: size mismatch");
  int minx = a.width(), miny = a.height(), maxx = -1, maxy = -1;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      if (!(a.get(x, y) == b.get(x, y))) {
        minx = std::min(minx, x);
        miny = std::min(miny, y);
        maxx = std::max(maxx, x);
        maxy = std::max(maxy, y);
      }
    }
  }
  if (maxx < 0) return RectPx{0, 0, 0, 0};
  return RectPx{minx, miny, maxx - minx + 1, maxy - miny + 1};
}

}  // namespace agentbd
