#include "agentbd/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace agentbd {

Tokenizer::Tokenizer(int n_bins, std::vector<std::string> instruction_words)
    : n_bins_(n_bins) {
  if (n_bins < 2) throw std::invalid_argument("Tokenizer: n_bins must be >= 2");
  auto push = [&](std::string name) {
    ids_.emplace(name, static_cast<int>(names_.size()));
    names_.push_back(std::move(name));
  };
  push("<pad>");
  push("<bos>");
  push("<eos>");
  push("<sep>");
  push("<unk>");
  kind_base_ = vocab_size();
  for (int k = 0; k < kNumActionTypes; ++k)
    push(action_type_name(static_cast<ActionType>(k)));
  xbin_base_ = vocab_size();
  for (int i = 0; i < n_bins; ++i) push("x_" + std::to_string(i));
  ybin_base_ = vocab_size();
  for (int i = 0; i < n_bins; ++i) push("y_" + std::to_string(i));
  dir_base_ = vocab_size();
  for (int d = 0; d < 4; ++d)
    push(direction_name(static_cast<ScrollDirection>(d)));
  char_base_ = vocab_size();
  for (int c = 0x20; c <= 0x7e; ++c) push(std::string(1, static_cast<char>(c)));
  word_base_ = vocab_size();
  for (auto& w : instruction_words) {
    if (ids_.count(w))
      throw std::invalid_argument("Tokenizer: instruction word collides with grammar token: " + w);
    push(std::move(w));
  }
}

std::optional<int> Tokenizer::token_id(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Tokenizer::encode_action(const Action& a) const {
  if (!a.valid()) throw InvalidActionError("Tokenizer::encode_action: invalid action");
  std::vector<int> out;
  out.push_back(kind_base_ + static_cast<int>(a.kind));
  if (a.takes_point()) {
    out.push_back(xbin_base_ + coord_bin(a.point->x, n_bins_));
    out.push_back(ybin_base_ + coord_bin(a.point->y, n_bins_));
  } else if (a.takes_text()) {
    for (char c : *a.text) out.push_back(char_base_ + (c - 0x20));
  } else if (a.takes_direction()) {
    out.push_back(dir_base_ + static_cast<int>(*a.direction));
  }
  return out;
}

std::string Tokenizer::decode_action_tokens(const std::vector<int>& tokens) const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const int id = tokens[i];
    if (id < 0 || id >= vocab_size()) return "<bad>";
    if (i == 0) {
      out = token_name(id);
      continue;
    }
    if (i == 1)
      out += ":";
    else if (!is_char_token(id) && !is_char_token(tokens[i - 1]))
      out += " ";
    out += token_name(id);
  }
  return out;
}

std::vector<int> Tokenizer::encode_instruction(const std::string& instruction,
                                               int max_words) const {
  std::vector<int> out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    if (static_cast<int>(out.size()) < max_words) {
      auto it = ids_.find(word);
      out.push_back(it != ids_.end() && it->second >= word_base_ ? it->second : unk_id());
    }
    word.clear();
  };
  for (char c : instruction) {
    if (c == ' ') {
      flush();
    } else {
      word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  flush();
  return out;
}

}  // namespace agentbd
