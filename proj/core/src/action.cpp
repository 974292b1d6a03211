#include "agentbd/action.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace agentbd {

namespace {

constexpr std::array<const char*, kNumActionTypes> kTypeNames = {
    "COMPLETE", "CLICK", "TYPE", "SCROLL", "HOME",
    "BACK",     "IMPOSSIBLE", "RECENT", "LONG_PRESS", "ENTER"};

constexpr std::array<const char*, 4> kDirNames = {"UP", "DOWN", "LEFT", "RIGHT"};

}  // namespace

const char* action_type_name(ActionType t) {
  return kTypeNames[static_cast<size_t>(t)];
}

const char* direction_name(ScrollDirection d) {
  return kDirNames[static_cast<size_t>(d)];
}

std::optional<ActionType> action_type_from_name(const std::string& s) {
  for (size_t i = 0; i < kTypeNames.size(); ++i)
    if (s == kTypeNames[i]) return static_cast<ActionType>(i);
  return std::nullopt;
}

std::optional<ScrollDirection> direction_from_name(const std::string& s) {
  for (size_t i = 0; i < kDirNames.size(); ++i)
    if (s == kDirNames[i]) return static_cast<ScrollDirection>(i);
  return std::nullopt;
}

bool is_printable_text(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return c >= 0x20 && c <= 0x7e; });
}

bool Action::valid() const {
  if (point.has_value() != takes_point()) return false;
  if (text.has_value() != takes_text()) return false;
  if (direction.has_value() != takes_direction()) return false;
  if (point) {
    if (!(point->x >= 0.0 && point->x <= 1.0 && point->y >= 0.0 && point->y <= 1.0))
      return false;
  }
  if (text && !is_printable_text(*text)) return false;
  return true;
}

int coord_bin(double coord, int n_bins) {
  int i = static_cast<int>(std::floor(coord * n_bins));
  return std::clamp(i, 0, n_bins - 1);
}

std::string serialize_action(const Action& a, int n_bins) {
  if (n_bins < 2) throw InvalidActionError("serialize_action: n_bins must be >= 2");
  if (!a.valid())
    throw InvalidActionError(std::string("serialize_action: action arguments do not match schema for ") +
                             action_type_name(a.kind));
  std::string out = action_type_name(a.kind);
  if (a.takes_point()) {
    out += ":x_" + std::to_string(coord_bin(a.point->x, n_bins)) +
           " y_" + std::to_string(coord_bin(a.point->y, n_bins));
  } else if (a.takes_text()) {
    out += ":" + *a.text;
  } else if (a.takes_direction()) {
    out += ":" + std::string(direction_name(*a.direction));
  }
  return out;
}

namespace {

// Parses "x_<i>" / "y_<j>" with i in [0, n_bins).
int parse_bin_token(const std::string& tok, char axis, int n_bins) {
  const std::string prefix = std::string(1, axis) + "_";
  if (tok.size() <= prefix.size() || tok.compare(0, prefix.size(), prefix) != 0)
    throw ActionParseError("expected coordinate token", tok);
  int value = 0;
  for (size_t i = prefix.size(); i < tok.size(); ++i) {
    char c = tok[i];
    if (c < '0' || c > '9') throw ActionParseError("non-numeric coordinate bin", tok);
    value = value * 10 + (c - '0');
    if (value >= 1000000) throw ActionParseError("coordinate bin out of range", tok);
  }
  if (value >= n_bins) throw ActionParseError("coordinate bin out of range", tok);
  return value;
}

}  // namespace

Action parse_action(const std::string& s, int n_bins) {
  if (n_bins < 2) throw ActionParseError("n_bins must be >= 2", std::to_string(n_bins));
  const size_t colon = s.find(':');
  const std::string head = s.substr(0, colon == std::string::npos ? s.size() : colon);
  auto kind = action_type_from_name(head);
  if (!kind) throw ActionParseError("unknown action kind", head);

  Action a;
  a.kind = *kind;
  const bool has_args = colon != std::string::npos;
  const std::string rest = has_args ? s.substr(colon + 1) : std::string();

  if (a.takes_point()) {
    if (!has_args) throw ActionParseError("missing point arguments", head);
    const size_t space = rest.find(' ');
    if (space == std::string::npos) throw ActionParseError("expected two coordinate tokens", rest);
    int xi = parse_bin_token(rest.substr(0, space), 'x', n_bins);
    int yi = parse_bin_token(rest.substr(space + 1), 'y', n_bins);
    a.point = PointN{(xi + 0.5) / n_bins, (yi + 0.5) / n_bins};
  } else if (a.takes_text()) {
    if (!has_args) throw ActionParseError("missing text argument", head);
    if (!is_printable_text(rest)) throw ActionParseError("non-printable text payload", rest);
    a.text = rest;
  } else if (a.takes_direction()) {
    if (!has_args) throw ActionParseError("missing scroll direction", head);
    auto dir = direction_from_name(rest);
    if (!dir) throw ActionParseError("unknown scroll direction", rest);
    a.direction = *dir;
  } else {
    if (has_args) throw ActionParseError("unexpected arguments for no-argument action", rest);
  }
  return a;
}

}  // namespace agentbd
