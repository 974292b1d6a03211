#include "agentbd/icons.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "agentbd/rng.hpp"

namespace agentbd {

namespace {

Color hsv_to_rgb(double h, double s, double v) {
  h = std::fmod(std::fmod(h, 360.0) + 360.0, 360.0);
  const double c = v * s;
  const double x = c * (1.0 - std::abs(std::fmod(h / 60.0, 2.0) - 1.0));
  const double m = v - c;
  double r = 0, g = 0, b = 0;
  if (h < 60) { r = c; g = x; }
  else if (h < 120) { r = x; g = c; }
  else if (h < 180) { g = c; b = x; }
  else if (h < 240) { g = x; b = c; }
  else if (h < 300) { r = x; b = c; }
  else { r = c; b = x; }
  auto to8 = [&](double q) { return static_cast<uint8_t>(std::lround((q + m) * 255.0)); };
  return Color{to8(r), to8(g), to8(b)};
}

constexpr int kGlyphGrid = 6;

// Mirrored 6x6 bit pattern; mirroring makes glyphs read as icon-like marks.
std::array<uint64_t, 1> glyph_bits(uint64_t seed) {
  uint64_t s = seed;
  uint64_t raw = splitmix64(s);
  uint64_t bits = 0;
  for (int y = 0; y < kGlyphGrid; ++y) {
    for (int x = 0; x < kGlyphGrid / 2; ++x) {
      const int src = y * 3 + x;
      if ((raw >> src) & 1ull) {
        bits |= 1ull << (y * kGlyphGrid + x);
        bits |= 1ull << (y * kGlyphGrid + (kGlyphGrid - 1 - x));
      }
    }
  }
  if (bits == 0) bits = 0x0000000c30c30000ull;  // never fully blank
  return {bits};
}

}  // namespace

Image render_icon(const IconSpec& spec, int side_px) {
  if (side_px < 2) throw std::invalid_argument("render_icon: side_px too small");
  Image img(side_px, side_px, spec.palette[0]);
  const auto bits = glyph_bits(spec.glyph_seed)[0];
  // Rounded icon plate with a thin accent ring, glyph cells on top.
  const int ring = std::max(1, side_px / 16);
  img.fill_rounded_rect(RectPx{0, 0, side_px, side_px}, side_px / 4, spec.palette[0]);
  img.draw_rect_border(RectPx{0, 0, side_px, side_px}, ring, spec.palette[2]);
  const double cell = static_cast<double>(side_px - 2 * ring) / kGlyphGrid;
  for (int gy = 0; gy < kGlyphGrid; ++gy) {
    for (int gx = 0; gx < kGlyphGrid; ++gx) {
      if (!((bits >> (gy * kGlyphGrid + gx)) & 1ull)) continue;
      const int x0 = ring + static_cast<int>(std::floor(gx * cell));
      const int y0 = ring + static_cast<int>(std::floor(gy * cell));
      const int x1 = ring + static_cast<int>(std::floor((gx + 1) * cell));
      const int y1 = ring + static_cast<int>(std::floor((gy + 1) * cell));
      img.fill_rect(RectPx{x0, y0, std::max(1, x1 - x0), std::max(1, y1 - y0)},
                    spec.palette[1]);
    }
  }
  return img;
}

void TriggerCatalog::add_trigger(IconSpec icon, Action target) {
  entries_.emplace_back(icon.icon_id, std::move(target));
  icons_[icon.icon_id] = std::move(icon);
}

void TriggerCatalog::add_benign(IconSpec icon) {
  benign_.push_back(icon.icon_id);
  icons_[icon.icon_id] = std::move(icon);
}

void TriggerCatalog::validate() const {
  std::set<std::string> trigger_ids;
  for (const auto& [id, target] : entries_) {
    if (!trigger_ids.insert(id).second)
      throw std::invalid_argument("TriggerCatalog: duplicate trigger id " + id);
    if (!target.valid())
      throw std::invalid_argument("TriggerCatalog: target for " + id +
                                  " is missing fixed argument values");
  }
  for (size_t i = 0; i < entries_.size(); ++i)
    for (size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i].second == entries_[j].second)
        throw std::invalid_argument("TriggerCatalog: targets must be one-to-one (" +
                                    entries_[i].first + " vs " + entries_[j].first + ")");
  std::set<std::string> benign_ids;
  for (const auto& id : benign_) {
    if (!benign_ids.insert(id).second)
      throw std::invalid_argument("TriggerCatalog: duplicate benign id " + id);
    if (trigger_ids.count(id))
      throw std::invalid_argument("TriggerCatalog: benign icon " + id + " is also a trigger");
  }
  for (const auto& [id, spec] : icons_)
    if (spec.icon_id != id)
      throw std::invalid_argument("TriggerCatalog: icon spec id mismatch for " + id);
}

bool TriggerCatalog::is_trigger(const std::string& icon_id) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == icon_id; });
}

bool TriggerCatalog::is_benign(const std::string& icon_id) const {
  return std::find(benign_.begin(), benign_.end(), icon_id) != benign_.end();
}

const Action& TriggerCatalog::target_for(const std::string& icon_id) const {
  for (const auto& [id, target] : entries_)
    if (id == icon_id) return target;
  throw std::invalid_argument("TriggerCatalog: unknown trigger id " + icon_id);
}

const IconSpec& TriggerCatalog::icon(const std::string& icon_id) const {
  auto it = icons_.find(icon_id);
  if (it == icons_.end())
    throw std::invalid_argument("TriggerCatalog: unknown icon id " + icon_id);
  return it->second;
}

TriggerCatalog make_default_catalog(int n_triggers, int n_benign) {
  if (n_triggers < 1 || n_triggers > kNumActionTypes)
    throw std::invalid_argument("make_default_catalog: n_triggers must be in [1, 10]");
  if (n_benign < 0) throw std::invalid_argument("make_default_catalog: n_benign < 0");

  const std::vector<Action> preference = {
      Action::complete(),
      Action::home(),
      Action::click(0.5, 0.9),
      Action::type_text("http://attacker.example"),
      Action::scroll(ScrollDirection::kUp),
      Action::back(),
      Action::impossible(),
      Action::recent(),
      Action::long_press(0.25, 0.4),
      Action::enter(),
  };

  // Golden-angle hue spacing keeps all icons (trigger and benign) pairwise
  // distinct at small render sizes.
  auto make_icon = [](int index, const std::string& id) {
    const double hue = std::fmod(index * 137.50776405003785, 360.0);
    IconSpec spec;
    spec.icon_id = id;
    spec.glyph_seed = 0xabd1c0ull * 31 + static_cast<uint64_t>(index) * 7919;
    spec.palette = {hsv_to_rgb(hue, 0.80, 0.95), hsv_to_rgb(hue + 150.0, 0.85, 0.55),
                    hsv_to_rgb(hue + 40.0, 0.60, 0.35)};
    return spec;
  };

  TriggerCatalog catalog;
  char buf[16];
  for (int i = 0; i < n_triggers; ++i) {
    std::snprintf(buf, sizeof(buf), "icon%02d", i);
    catalog.add_trigger(make_icon(i, buf), preference[static_cast<size_t>(i)]);
  }
  for (int i = 0; i < n_benign; ++i) {
    std::snprintf(buf, sizeof(buf), "benign%02d", i);
    catalog.add_benign(make_icon(n_triggers + i, buf));
  }
  catalog.validate();
  return catalog;
}

double min_pairwise_icon_distance(const TriggerCatalog& catalog, int side_px) {
  std::vector<Image> rendered;
  std::vector<std::string> ids;
  for (const auto& [id, _] : catalog.entries()) ids.push_back(id);
  for (const auto& id : catalog.benign_icons()) ids.push_back(id);
  for (const auto& id : ids) rendered.push_back(render_icon(catalog.icon(id), side_px));
  double best = 1e300;
  for (size_t i = 0; i < rendered.size(); ++i)
    for (size_t j = i + 1; j < rendered.size(); ++j)
      best = std::min(best, pixel_l1_distance(rendered[i], rendered[j]));
  return rendered.size() < 2 ? 0.0 : best;
}

}  // namespace agentbd
