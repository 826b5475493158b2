#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sqfiber/errors.hpp"

namespace sqfiber {

using Weight = std::int64_t;

// Ordered set of generator names. Names are letters followed by optional
// digits ("a0", "b12", "t") and are unique within an alphabet.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names);

  // Appends a generator and returns its index. Throws InputError on a
  // duplicate or malformed name.
  std::size_t add(std::string name);

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws AlphabetMismatch

  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }

  // Leading alphabetic part of a name: stem("a12") == "a".
  static std::string_view stem(std::string_view name);
  static bool valid_name(std::string_view name);

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Letter {
  std::uint32_t gen = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  bool cancels(const Letter& next) const { return gen == next.gen && sign == -next.sign; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct GeneratorTag {};
struct BasisTag {};

// Finite sequence of signed letters. Stored verbatim; reduction is explicit.
// The tag keeps words over the complex's generators apart from words over a
// free basis of a kernel.
template <class Tag>
class BasicWord {
 public:
  BasicWord() = default;
  BasicWord(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit BasicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::vector<Letter>& letters() { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const BasicWord& w) { letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end()); }

  BasicWord inverse() const {
    BasicWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
    return out;
  }

  BasicWord operator*(const BasicWord& rhs) const {
    BasicWord out = *this;
    out.append(rhs);
    return out;
  }

  bool is_reduced() const {
    for (std::size_t i = 1; i < letters_.size(); ++i)
      if (letters_[i - 1].cancels(letters_[i])) return false;
    return true;
  }

  // Reduced and, read cyclically, the last letter does not cancel the first.
  bool is_cyclically_reduced() const {
    if (!is_reduced()) return false;
    return letters_.size() < 2 || !letters_.back().cancels(letters_.front());
  }

  friend bool operator==(const BasicWord&, const BasicWord&) = default;
  friend auto operator<=>(const BasicWord& a, const BasicWord& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

using Word = BasicWord<GeneratorTag>;
using BasisWord = BasicWord<BasisTag>;

template <class Tag>
BasicWord<Tag> free_reduce(const BasicWord<Tag>& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back().cancels(l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BasicWord<Tag>(std::move(stack));
}

// Sum of sign * weight over the letters. Throws AlphabetMismatch when a letter
// has no weight.
Weight signed_weight(const Word& w, std::span<const Weight> weights);

// Word literal syntax: whitespace-separated letters, inverse marked by a
// "^-1" or "-" suffix. "^1" / "^+1" are accepted as explicit positive powers.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

// Same syntax over an arbitrary list of names (used for basis words).
BasisWord parse_basis_word(std::string_view text, const std::vector<std::string>& names);
std::string format_basis_word(const BasisWord& w, const std::vector<std::string>& names);

}  // namespace sqfiber
