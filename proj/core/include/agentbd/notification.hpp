#pragma once

#include <cstdint>
#include <optional>

#include "agentbd/geometry.hpp"
#include "agentbd/icons.hpp"
#include "agentbd/image.hpp"

namespace agentbd {

// Layout of the synthetic notification overlay. The anchor and icon slot are
// normalized, so the overlay lands at the same relative position at every
// resolution; triggers always occupy the same on-screen slot.
struct NotificationSpec {
  RectN anchor{0.04, 0.02, 0.92, 0.11};
  double icon_size = 0.10;        // icon side as a fraction of screen width
  uint64_t body_text_seed = 0;    // default body seed when none is supplied

  void validate(const ScreenGeometry& g) const;

  // Icon area must stay in the small-trigger regime.
  double icon_area_fraction(const ScreenGeometry& g) const;
};

// Pixel rectangle of the icon slot; identical for every record at one
// geometry.
RectPx notification_icon_rect(const NotificationSpec& spec, const ScreenGeometry& g);

// Composites a notification frame over `base`. With no icon the frame is
// rendered empty; pixels outside the anchor rectangle are untouched.
Image render_notification(const Image& base, const std::optional<IconSpec>& icon,
                          const NotificationSpec& spec, uint64_t text_seed);

}  // namespace agentbd
