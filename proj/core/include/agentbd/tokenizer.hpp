#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "agentbd/action.hpp"

namespace agentbd {

// Vocabulary over the action grammar (kind, coordinate-bin, direction and
// character tokens) plus a fixed instruction word list. Token ids are stable
// for a given (n_bins, instruction word list) pair.
class Tokenizer {
 public:
  Tokenizer(int n_bins, std::vector<std::string> instruction_words);

  int vocab_size() const { return static_cast<int>(names_.size()); }
  int n_bins() const { return n_bins_; }

  int pad_id() const { return 0; }
  int bos_id() const { return 1; }
  int eos_id() const { return 2; }
  int sep_id() const { return 3; }
  int unk_id() const { return 4; }

  const std::string& token_name(int id) const { return names_.at(static_cast<size_t>(id)); }
  std::optional<int> token_id(const std::string& name) const;

  // Action tokens follow the wire grammar: kind token, then x/y bin tokens,
  // direction token, or one token per text character. No BOS/EOS included.
  std::vector<int> encode_action(const Action& a) const;

  // Inverse mapping to the canonical action string. Malformed sequences
  // produce a string that parse_action will reject.
  std::string decode_action_tokens(const std::vector<int>& tokens) const;

  // Lowercase word ids; unknown words map to unk. Truncates to max_words.
  std::vector<int> encode_instruction(const std::string& instruction, int max_words) const;

  bool is_char_token(int id) const {
    return id >= char_base_ && id < char_base_ + 95;
  }

 private:
  int kind_base_ = 0, xbin_base_ = 0, ybin_base_ = 0, dir_base_ = 0, char_base_ = 0,
      word_base_ = 0;
  int n_bins_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
};

}  // namespace agentbd
