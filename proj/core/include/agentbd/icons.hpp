#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "agentbd/action.hpp"
#include "agentbd/image.hpp"

namespace agentbd {

// Procedural stand-in for an app icon: a seeded glyph bitmap drawn with a
// three-color palette.
struct IconSpec {
  std::string icon_id;
  uint64_t glyph_seed = 0;
  std::array<Color, 3> palette{};  // background, foreground, accent
};

Image render_icon(const IconSpec& spec, int side_px);

// Bijection from trigger icon ids to fixed target actions, plus a disjoint
// set of benign icons that never carry a target.
class TriggerCatalog {
 public:
  void add_trigger(IconSpec icon, Action target);
  void add_benign(IconSpec icon);

  // Throws std::invalid_argument on: duplicate ids, non-injective targets,
  // benign/trigger overlap, or open-ended targets without fixed arguments.
  void validate() const;

  const std::vector<std::pair<std::string, Action>>& entries() const { return entries_; }
  const std::vector<std::string>& benign_icons() const { return benign_; }

  bool is_trigger(const std::string& icon_id) const;
  bool is_benign(const std::string& icon_id) const;
  const Action& target_for(const std::string& icon_id) const;
  const IconSpec& icon(const std::string& icon_id) const;

  size_t num_triggers() const { return entries_.size(); }

 private:
  std::vector<std::pair<std::string, Action>> entries_;  // insertion-ordered
  std::vector<std::string> benign_;
  std::map<std::string, IconSpec> icons_;
};

// Catalog with n_triggers targets drawn from a fixed preference order
// (COMPLETE, HOME, CLICK, TYPE, SCROLL, BACK, IMPOSSIBLE, RECENT,
// LONG_PRESS, ENTER) and n_benign extra icons. Open-ended targets use the
// default fixed values: CLICK (0.5, 0.9), TYPE "http://attacker.example",
// LONG_PRESS (0.25, 0.4), SCROLL UP.
TriggerCatalog make_default_catalog(int n_triggers, int n_benign = 4);

// Minimum pairwise mean-L1 distance between rendered icons at side_px.
double min_pairwise_icon_distance(const TriggerCatalog& catalog, int side_px);

}  // namespace agentbd
