#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agentbd/action.hpp"
#include "agentbd/geometry.hpp"
#include "agentbd/image.hpp"

namespace agentbd {

// Families are chosen so the ten action types all appear in ground truth:
// widget-tap (CLICK), form-fill (CLICK/TYPE/ENTER), list-scroll (SCROLL),
// navigation (HOME/BACK/RECENT/LONG_PRESS/ENTER), terminal
// (COMPLETE/IMPOSSIBLE). Every non-terminal episode ends with COMPLETE on a
// done-banner scene.
enum class TaskFamily { kWidgetTap, kFormFill, kListScroll, kNavigation, kTerminal };

inline constexpr int kNumTaskFamilies = 5;

const char* task_family_name(TaskFamily f);
std::optional<TaskFamily> task_family_from_name(const std::string& s);

struct Step {
  Image image;       // current observation, rendered without notifications
  Action gt_action;
};

struct Episode {
  uint64_t seed = 0;
  TaskFamily family = TaskFamily::kWidgetTap;
  ScreenGeometry geometry;
  std::string instruction;  // shared by every step
  std::vector<Step> steps;
};

// Deterministic in (seed, geometry, family). Scene layout is normalized, so
// the same seed at a different geometry yields the same instruction and
// ground-truth actions.
Episode generate_episode(uint64_t seed, const ScreenGeometry& geometry, TaskFamily family);

// Round-robin family for an episode seed; used when sampling mixed datasets.
TaskFamily family_for_index(uint64_t index);

// Every word that can appear in a generated instruction (fixed order).
const std::vector<std::string>& instruction_vocabulary();

}  // namespace agentbd
