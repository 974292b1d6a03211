#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace agentbd {

// The ten-command alphabet of the toy agent. CLICK/LONG_PRESS take a
// normalized point, TYPE takes text, SCROLL takes a direction, the rest
// take no arguments.
enum class ActionType {
  kComplete,
  kClick,
  kType,
  kScroll,
  kHome,
  kBack,
  kImpossible,
  kRecent,
  kLongPress,
  kEnter,
};

inline constexpr int kNumActionTypes = 10;

enum class ScrollDirection { kUp, kDown, kLeft, kRight };

const char* action_type_name(ActionType t);
const char* direction_name(ScrollDirection d);
std::optional<ActionType> action_type_from_name(const std::string& s);
std::optional<ScrollDirection> direction_from_name(const std::string& s);

// Normalized screen coordinate, components in [0,1].
struct PointN {
  double x = 0;
  double y = 0;
  bool operator==(const PointN&) const = default;
};

struct Action {
  ActionType kind = ActionType::kComplete;
  std::optional<PointN> point;
  std::optional<std::string> text;
  std::optional<ScrollDirection> direction;

  static Action complete() { return Action{ActionType::kComplete, {}, {}, {}}; }
  static Action home() { return Action{ActionType::kHome, {}, {}, {}}; }
  static Action back() { return Action{ActionType::kBack, {}, {}, {}}; }
  static Action impossible() { return Action{ActionType::kImpossible, {}, {}, {}}; }
  static Action recent() { return Action{ActionType::kRecent, {}, {}, {}}; }
  static Action enter() { return Action{ActionType::kEnter, {}, {}, {}}; }
  static Action click(double x, double y) {
    return Action{ActionType::kClick, PointN{x, y}, {}, {}};
  }
  static Action long_press(double x, double y) {
    return Action{ActionType::kLongPress, PointN{x, y}, {}, {}};
  }
  static Action type_text(std::string t) {
    return Action{ActionType::kType, {}, std::move(t), {}};
  }
  static Action scroll(ScrollDirection d) {
    return Action{ActionType::kScroll, {}, {}, d};
  }

  bool takes_point() const {
    return kind == ActionType::kClick || kind == ActionType::kLongPress;
  }
  bool takes_text() const { return kind == ActionType::kType; }
  bool takes_direction() const { return kind == ActionType::kScroll; }

  // Argument presence matches the kind's schema, point components in [0,1],
  // TYPE text restricted to printable characters (no newlines).
  bool valid() const;

  bool operator==(const Action&) const = default;
};

// Argument schema violation (e.g. CLICK without a point).
class InvalidActionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized action; carries the offending token.
class ActionParseError : public std::runtime_error {
 public:
  ActionParseError(const std::string& msg, std::string token)
      : std::runtime_error(msg + " (token: '" + token + "')"), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// TYPE payloads are restricted to this subset so manifests stay one
// record per line.
bool is_printable_text(const std::string& s);

// Canonical wire form: `KIND`, `KIND:x_<i> y_<j>`, `TYPE:<text>`,
// `SCROLL:<DIR>`. Coordinates discretized to floor(c * n_bins), clamped.
std::string serialize_action(const Action& a, int n_bins = 100);

// Inverse of serialize_action; binned coordinates decode to bin centers.
Action parse_action(const std::string& s, int n_bins = 100);

// Bin index for a normalized coordinate; clamped to [0, n_bins-1].
int coord_bin(double coord, int n_bins);

}  // namespace agentbd
