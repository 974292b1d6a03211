#include "agentbd/notification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "agentbd/rng.hpp"

namespace agentbd {

namespace {
constexpr Color kFrameBg{242, 242, 246};
constexpr Color kFrameBorder{198, 198, 208};
constexpr Color kTextBar{120, 122, 130};
constexpr Color kTitleBar{70, 72, 80};
}  // namespace

void NotificationSpec::validate(const ScreenGeometry& g) const {
  g.validate();
  if (!anchor.inside_unit())
    throw std::invalid_argument("NotificationSpec: anchor outside the screen");
  if (icon_size <= 0)
    throw std::invalid_argument("NotificationSpec: icon_size must be positive");
  if (icon_area_fraction(g) >= 0.02)
    throw std::invalid_argument(
        "NotificationSpec: icon area must stay below 2% of the screen at " + g.str());
  const RectPx icon = notification_icon_rect(*this, g);
  const RectPx frame = to_pixels(anchor, g);
  if (icon.x < frame.x || icon.y < frame.y || icon.x + icon.w > frame.x + frame.w ||
      icon.y + icon.h > frame.y + frame.h)
    throw std::invalid_argument("NotificationSpec: icon slot does not fit in the frame");
}

double NotificationSpec::icon_area_fraction(const ScreenGeometry& g) const {
  const double side = icon_size * g.width_px;
  return side * side / (static_cast<double>(g.width_px) * g.height_px);
}

RectPx notification_icon_rect(const NotificationSpec& spec, const ScreenGeometry& g) {
  const RectPx frame = to_pixels(spec.anchor, g);
  const int side = std::max(2, static_cast<int>(std::lround(spec.icon_size * g.width_px)));
  const int margin = std::max(1, static_cast<int>(std::lround(0.02 * g.width_px)));
  return RectPx{frame.x + margin, frame.y + (frame.h - side) / 2, side, side};
}

Image render_notification(const Image& base, const std::optional<IconSpec>& icon,
                          const NotificationSpec& spec, uint64_t text_seed) {
  const ScreenGeometry g{base.width(), base.height()};
  spec.validate(g);

  Image out = base;
  const RectPx frame = to_pixels(spec.anchor, g);
  const int corner = std::max(2, frame.h / 6);
  out.fill_rounded_rect(frame, corner, kFrameBg);
  out.draw_rect_border(frame, std::max(1, g.width_px / 400), kFrameBorder);

  const RectPx islot = notification_icon_rect(spec, g);

  // Body text is benign-looking noise: a title bar plus word-like bars,
  // fully determined by text_seed and independent of the icon choice.
  Rng rng(derive_seed(text_seed, "notification-body"));
  const int text_x0 = islot.x + islot.w + std::max(2, g.width_px / 50);
  const int text_x1 = frame.x + frame.w - std::max(2, g.width_px / 40);
  const int bar_h = std::max(1, frame.h / 9);
  int y = frame.y + frame.h / 5;
  for (int line = 0; line < 3 && y + bar_h < frame.y + frame.h; ++line) {
    int x = text_x0;
    const Color bar = line == 0 ? kTitleBar : kTextBar;
    const int words = static_cast<int>(rng.uniform_int(2, 5));
    for (int wird = 0; wird < words && x < text_x1; ++wird) {
      int w = static_cast<int>(rng.uniform_int(bar_h * 2, bar_h * 7));
      w = std::min(w, text_x1 - x);
      out.fill_rect(RectPx{x, y, w, bar_h}, bar);
      x += w + bar_h;
    }
    y += bar_h * 2;
  }

  if (icon) {
    const Image glyph = render_icon(*icon, islot.w);
    for (int dy = 0; dy < islot.h; ++dy)
      for (int dx = 0; dx < islot.w; ++dx)
        out.set(islot.x + dx, islot.y + dy, glyph.get(dx, dy));
  }
  return out;
}

}  // namespace agentbd
