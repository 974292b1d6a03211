#include "agentbd/scenegen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "agentbd/rng.hpp"

namespace agentbd {

namespace {

constexpr std::array<const char*, kNumTaskFamilies> kFamilyNames = {
    "widget_tap", "form_fill", "list_scroll", "navigation", "terminal"};

struct NamedColor {
  const char* name;
  Color color;
};

constexpr std::array<NamedColor, 8> kWidgetColors = {{
    {"red", {214, 64, 54}},
    {"green", {66, 166, 86}},
    {"blue", {58, 108, 216}},
    {"yellow", {232, 198, 60}},
    {"purple", {148, 82, 202}},
    {"orange", {238, 140, 52}},
    {"teal", {48, 178, 176}},
    {"pink", {232, 118, 168}},
}};

const std::vector<std::string> kTypeWords = {"alpha", "bravo", "cargo", "delta",
                                             "echo",  "fox",   "golf",  "hotel",
                                             "india", "julia", "kilo",  "lima"};

const std::vector<std::string> kDirWords = {"up", "down", "left", "right"};

constexpr Color kStatusStrip{58, 60, 66};
constexpr Color kDoneBanner{118, 208, 138};
constexpr Color kErrorBanner{216, 84, 74};
constexpr Color kFieldBg{252, 252, 252};
constexpr Color kFieldFocus{252, 244, 196};
constexpr Color kBorderGray{136, 138, 146};
constexpr Color kBarGray{168, 170, 178};
constexpr Color kBarDark{104, 106, 114};

ScrollDirection to_scroll_dir(const std::string& word) {
  if (word == "up") return ScrollDirection::kUp;
  if (word == "down") return ScrollDirection::kDown;
  if (word == "left") return ScrollDirection::kLeft;
  return ScrollDirection::kRight;
}

class SceneCanvas {
 public:
  SceneCanvas(const ScreenGeometry& g, Color bg) : g_(g), img_(g.width_px, g.height_px, bg) {
    img_.fill_rect(to_pixels(RectN{0, 0, 1.0, 0.03}, g_), kStatusStrip);
  }

  void button(const RectN& r, Color c) {
    const RectPx px = to_pixels(r, g_);
    img_.fill_rounded_rect(px, std::max(2, px.h / 4), c);
  }

  void tile(const RectN& r, Color c) {
    const RectPx px = to_pixels(r, g_);
    img_.fill_rounded_rect(px, std::max(2, px.h / 6), c);
  }

  void field(const RectN& r, Color border, bool focused, bool filled, Rng& rng) {
    const RectPx px = to_pixels(r, g_);
    img_.fill_rect(px, focused ? kFieldFocus : kFieldBg);
    img_.draw_rect_border(px, std::max(2, (focused ? 3 : 1) * g_.width_px / 320), border);
    if (filled) text_bars(RectN{r.x + 0.02, r.y + r.h * 0.3, r.w - 0.04, r.h * 0.4}, 1, rng);
  }

  // Word-like decorative bars inside a region.
  void text_bars(const RectN& region, int lines, Rng& rng) {
    const RectPx px = to_pixels(region, g_);
    const int bar_h = std::max(1, px.h / (2 * lines));
    int y = px.y;
    for (int line = 0; line < lines; ++line) {
      int x = px.x;
      const int words = static_cast<int>(rng.uniform_int(2, 5));
      for (int w = 0; w < words; ++w) {
        int bw = static_cast<int>(rng.uniform_int(bar_h * 2, bar_h * 6));
        bw = std::min(bw, px.x + px.w - x);
        if (bw <= 0) break;
        img_.fill_rect(RectPx{x, y, bw, bar_h}, kBarGray);
        x += bw + bar_h;
      }
      y += bar_h * 2;
    }
  }

  void list_rows(bool horizontal, int offset, Rng& rng) {
    const RectN area{0.08, 0.22, 0.84, 0.64};
    const RectPx px = to_pixels(area, g_);
    const int n = 9;
    if (!horizontal) {
      const int row_h = px.h / n;
      for (int i = 0; i < n; ++i) {
        const int shade = ((i + offset) % 2 == 0) ? 224 : 206;
        const int jitter = static_cast<int>(rng.uniform_int(0, row_h / 4));
        img_.fill_rect(RectPx{px.x, px.y + i * row_h, px.w - jitter, row_h - row_h / 5},
                       Color{static_cast<uint8_t>(shade), static_cast<uint8_t>(shade),
                             static_cast<uint8_t>(shade + 6)});
      }
    } else {
      const int col_w = px.w / n;
      for (int i = 0; i < n; ++i) {
        const int shade = ((i + offset) % 2 == 0) ? 224 : 206;
        const int jitter = static_cast<int>(rng.uniform_int(0, col_w / 4));
        img_.fill_rect(RectPx{px.x + i * col_w, px.y, col_w - col_w / 5, px.h - jitter},
                       Color{static_cast<uint8_t>(shade), static_cast<uint8_t>(shade),
                             static_cast<uint8_t>(shade + 6)});
      }
    }
  }

  void header_with_back_mark() {
    const RectN bar{0.0, 0.16, 1.0, 0.07};
    const RectPx px = to_pixels(bar, g_);
    img_.fill_rect(px, Color{92, 96, 150});
    img_.fill_rect(RectPx{px.x + px.w / 24, px.y + px.h / 4, px.w / 16, px.h / 2}, Color{240, 240, 244});
  }

  void keyboard() {
    const RectN area{0.02, 0.64, 0.96, 0.30};
    const RectPx px = to_pixels(area, g_);
    img_.fill_rect(px, Color{208, 210, 216});
    const int rows = 4, cols = 9;
    const int kw = px.w / cols, kh = px.h / rows;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        img_.fill_rounded_rect(RectPx{px.x + c * kw + kw / 8, px.y + r * kh + kh / 8,
                                      kw * 3 / 4, kh * 3 / 4},
                               2, Color{246, 246, 250});
  }

  void done_banner() {
    const RectPx px = to_pixels(RectN{0.18, 0.44, 0.64, 0.08}, g_);
    img_.fill_rounded_rect(px, px.h / 3, kDoneBanner);
    img_.fill_rect(RectPx{px.x + px.w / 8, px.y + px.h / 3, px.w / 4, px.h / 3}, Color{255, 255, 255});
  }

  void error_banner() {
    const RectPx px = to_pixels(RectN{0.18, 0.44, 0.64, 0.08}, g_);
    img_.fill_rounded_rect(px, px.h / 3, kErrorBanner);
    img_.draw_line(px.x + px.w / 8, px.y + px.h / 5, px.x + px.w / 4, px.y + 4 * px.h / 5,
                   Color{255, 255, 255});
    img_.draw_line(px.x + px.w / 4, px.y + px.h / 5, px.x + px.w / 8, px.y + 4 * px.h / 5,
                   Color{255, 255, 255});
  }

  Image take() { return std::move(img_); }

 private:
  ScreenGeometry g_;
  Image img_;
};

Color scene_background(Rng& rng) {
  const int base = static_cast<int>(rng.uniform_int(228, 246));
  return Color{static_cast<uint8_t>(base), static_cast<uint8_t>(base),
               static_cast<uint8_t>(std::min(255, base + static_cast<int>(rng.uniform_int(0, 6))))};
}

// Non-overlapping grid slots for buttons/tiles in the widget area.
std::vector<RectN> grid_slots(int cols, int rows, double w, double h) {
  std::vector<RectN> slots;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const double cx = (c + 0.5) / cols;
      const double cy = 0.26 + (r + 0.5) * (0.62 / rows);
      slots.push_back(RectN{cx - w / 2, cy - h / 2, w, h});
    }
  return slots;
}

struct SceneSeeds {
  Rng layout;   // widget placement and choices
  Rng decor;    // decorative bars
  Color bg;
};

SceneSeeds make_seeds(uint64_t seed) {
  SceneSeeds s{Rng(derive_seed(seed, "scene-layout")), Rng(derive_seed(seed, "scene-decor")),
               Color{}};
  s.bg = scene_background(s.layout);
  return s;
}

Episode make_widget_tap(uint64_t seed, const ScreenGeometry& g) {
  SceneSeeds s = make_seeds(seed);
  const int n = static_cast<int>(s.layout.uniform_int(2, 4));
  auto slots = grid_slots(2, 3, 0.36, 0.10);
  s.layout.shuffle(slots);
  std::vector<int> color_ids(kWidgetColors.size());
  for (size_t i = 0; i < color_ids.size(); ++i) color_ids[i] = static_cast<int>(i);
  s.layout.shuffle(color_ids);
  const int target = static_cast<int>(s.layout.uniform_int(0, n - 1));

  Episode ep{seed, TaskFamily::kWidgetTap, g,
             std::string("tap the ") + kWidgetColors[color_ids[target]].name + " button",
             {}};

  auto draw = [&](bool done) {
    SceneCanvas canvas(g, s.bg);
    Rng decor = s.decor;  // same decor for both steps
    canvas.text_bars(RectN{0.08, 0.08, 0.6, 0.04}, 1, decor);
    for (int i = 0; i < n; ++i)
      canvas.button(slots[i], kWidgetColors[color_ids[i]].color);
    if (done) canvas.done_banner();
    return canvas.take();
  };

  ep.steps.push_back(Step{draw(false), Action::click(slots[target].cx(), slots[target].cy())});
  ep.steps.push_back(Step{draw(true), Action::complete()});
  return ep;
}

Episode make_form_fill(uint64_t seed, const ScreenGeometry& g) {
  SceneSeeds s = make_seeds(seed);
  const int color_id = static_cast<int>(s.layout.uniform_int(0, kWidgetColors.size() - 1));
  const std::string word = s.layout.pick(kTypeWords);
  const RectN field{0.12, s.layout.uniform(0.32, 0.56), 0.76, 0.08};

  Episode ep{seed, TaskFamily::kFormFill, g,
             "type " + word + " in the " + kWidgetColors[color_id].name + " field", {}};

  auto draw = [&](bool focused, bool filled, bool done) {
    SceneCanvas canvas(g, s.bg);
    Rng decor = s.decor;
    canvas.text_bars(RectN{0.08, 0.08, 0.6, 0.04}, 1, decor);
    canvas.field(field, kWidgetColors[color_id].color, focused, filled, decor);
    if (done) canvas.done_banner();
    return canvas.take();
  };

  ep.steps.push_back(Step{draw(false, false, false), Action::click(field.cx(), field.cy())});
  ep.steps.push_back(Step{draw(true, false, false), Action::type_text(word)});
  ep.steps.push_back(Step{draw(true, true, false), Action::enter()});
  ep.steps.push_back(Step{draw(false, true, true), Action::complete()});
  return ep;
}

Episode make_list_scroll(uint64_t seed, const ScreenGeometry& g) {
  SceneSeeds s = make_seeds(seed);
  const std::string dir_word = s.layout.pick(kDirWords);
  const ScrollDirection dir = to_scroll_dir(dir_word);
  const bool horizontal = dir == ScrollDirection::kLeft || dir == ScrollDirection::kRight;
  const int scrolls = static_cast<int>(s.layout.uniform_int(1, 3));

  Episode ep{seed, TaskFamily::kListScroll, g, "scroll " + dir_word + " the list", {}};

  for (int i = 0; i <= scrolls; ++i) {
    SceneCanvas canvas(g, s.bg);
    Rng decor = s.decor;
    canvas.list_rows(horizontal, i, decor);
    const bool done = i == scrolls;
    if (done) canvas.done_banner();
    ep.steps.push_back(Step{canvas.take(), done ? Action::complete() : Action::scroll(dir)});
  }
  return ep;
}

Episode make_navigation(uint64_t seed, const ScreenGeometry& g) {
  SceneSeeds s = make_seeds(seed);
  const int variant = static_cast<int>(s.layout.uniform_int(0, 4));

  std::string instruction;
  Action first;
  const int color_id = static_cast<int>(s.layout.uniform_int(0, kWidgetColors.size() - 1));
  auto tiles = grid_slots(3, 4, 0.24, 0.08);
  s.layout.shuffle(tiles);
  const int n_tiles = 6;
  std::vector<int> tile_colors(kWidgetColors.size());
  for (size_t i = 0; i < tile_colors.size(); ++i) tile_colors[i] = static_cast<int>(i);
  s.layout.shuffle(tile_colors);
  // ensure the named tile is among the rendered ones
  int target_tile = static_cast<int>(s.layout.uniform_int(0, n_tiles - 1));
  tile_colors[target_tile] = color_id;
  for (int i = 0; i < n_tiles; ++i)
    if (i != target_tile && tile_colors[i] == color_id)
      std::swap(tile_colors[i], tile_colors[n_tiles]);

  switch (variant) {
    case 0:
      instruction = "go to the home screen";
      first = Action::home();
      break;
    case 1:
      instruction = "go back to the previous screen";
      first = Action::back();
      break;
    case 2:
      instruction = "open the recent apps view";
      first = Action::recent();
      break;
    case 3:
      instruction = std::string("hold the ") + kWidgetColors[color_id].name + " tile";
      first = Action::long_press(tiles[target_tile].cx(), tiles[target_tile].cy());
      break;
    default:
      instruction = "press the enter key";
      first = Action::enter();
      break;
  }

  Episode ep{seed, TaskFamily::kNavigation, g, instruction, {}};

  auto draw = [&](bool done) {
    SceneCanvas canvas(g, s.bg);
    Rng decor = s.decor;
    switch (variant) {
      case 0:
      case 3:
        for (int i = 0; i < n_tiles; ++i)
          canvas.tile(tiles[i], kWidgetColors[tile_colors[i]].color);
        break;
      case 1:
        canvas.header_with_back_mark();
        canvas.text_bars(RectN{0.08, 0.3, 0.8, 0.2}, 3, decor);
        break;
      case 2:
        canvas.text_bars(RectN{0.08, 0.26, 0.8, 0.3}, 4, decor);
        break;
      default:
        canvas.field(RectN{0.12, 0.4, 0.76, 0.08}, kBorderGray, true, true, decor);
        canvas.keyboard();
        break;
    }
    if (done) canvas.done_banner();
    return canvas.take();
  };

  ep.steps.push_back(Step{draw(false), first});
  ep.steps.push_back(Step{draw(true), Action::complete()});
  return ep;
}

Episode make_terminal(uint64_t seed, const ScreenGeometry& g) {
  SceneSeeds s = make_seeds(seed);
  const bool impossible = s.layout.bernoulli(0.5);

  Episode ep{seed, TaskFamily::kTerminal, g,
             impossible ? "report the task as impossible" : "finish the current task", {}};
  SceneCanvas canvas(g, s.bg);
  Rng decor = s.decor;
  canvas.text_bars(RectN{0.08, 0.24, 0.8, 0.12}, 2, decor);
  if (impossible)
    canvas.error_banner();
  else
    canvas.done_banner();
  ep.steps.push_back(Step{canvas.take(), impossible ? Action::impossible() : Action::complete()});
  return ep;
}

}  // namespace

const char* task_family_name(TaskFamily f) {
  return kFamilyNames[static_cast<size_t>(f)];
}

std::optional<TaskFamily> task_family_from_name(const std::string& s) {
  for (size_t i = 0; i < kFamilyNames.size(); ++i)
    if (s == kFamilyNames[i]) return static_cast<TaskFamily>(i);
  return std::nullopt;
}

TaskFamily family_for_index(uint64_t index) {
  return static_cast<TaskFamily>(index % kNumTaskFamilies);
}

Episode generate_episode(uint64_t seed, const ScreenGeometry& geometry, TaskFamily family) {
  geometry.validate();
  switch (family) {
    case TaskFamily::kWidgetTap: return make_widget_tap(seed, geometry);
    case TaskFamily::kFormFill: return make_form_fill(seed, geometry);
    case TaskFamily::kListScroll: return make_list_scroll(seed, geometry);
    case TaskFamily::kNavigation: return make_navigation(seed, geometry);
    case TaskFamily::kTerminal: return make_terminal(seed, geometry);
  }
  throw std::invalid_argument("generate_episode: unknown task family");
}

const std::vector<std::string>& instruction_vocabulary() {
  static const std::vector<std::string> vocab = [] {
    std::vector<std::string> v = {
        "tap",  "the",    "button", "type",   "in",     "field",  "scroll",
        "list", "go",     "to",     "home",   "screen", "back",   "previous",
        "open", "recent", "apps",   "view",   "hold",   "tile",   "press",
        "enter", "key",   "finish", "current", "task",  "report", "as",
        "impossible"};
    for (const auto& c : kWidgetColors) v.push_back(c.name);
    for (const auto& w : kTypeWords) v.push_back(w);
    for (const auto& d : kDirWords) v.push_back(d);
    return v;
  }();
  return vocab;
}

}  // namespace agentbd
