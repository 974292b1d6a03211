#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace agentbd {

struct ScreenGeometry {
  int width_px = 1080;
  int height_px = 2400;

  bool valid() const { return width_px >= 64 && height_px >= 64; }

  void validate() const {
    if (!valid())
      throw std::invalid_argument("ScreenGeometry: sides must be >= 64 px, got " + str());
  }

  double diagonal_px() const {
    return std::sqrt(static_cast<double>(width_px) * width_px +
                     static_cast<double>(height_px) * height_px);
  }

  std::string str() const {
    return std::to_string(width_px) + "x" + std::to_string(height_px);
  }

  bool operator==(const ScreenGeometry&) const = default;
};

// Axis-aligned rectangle in normalized [0,1] screen units.
struct RectN {
  double x = 0, y = 0, w = 0, h = 0;

  bool inside_unit() const {
    return x >= 0 && y >= 0 && w > 0 && h > 0 && x + w <= 1.0 + 1e-12 && y + h <= 1.0 + 1e-12;
  }
  double cx() const { return x + w / 2; }
  double cy() const { return y + h / 2; }
};

struct RectPx {
  int x = 0, y = 0, w = 0, h = 0;
  bool operator==(const RectPx&) const = default;
};

inline RectPx to_pixels(const RectN& r, const ScreenGeometry& g) {
  int x0 = static_cast<int>(std::lround(r.x * g.width_px));
  int y0 = static_cast<int>(std::lround(r.y * g.height_px));
  int x1 = static_cast<int>(std::lround((r.x + r.w) * g.width_px));
  int y1 = static_cast<int>(std::lround((r.y + r.h) * g.height_px));
  return RectPx{x0, y0, x1 - x0, y1 - y0};
}

}  // namespace agentbd
