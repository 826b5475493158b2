#include "sqfiber/words.hpp"

#include <cctype>
#include <sstream>

namespace sqfiber {

Alphabet::Alphabet(const std::vector<std::string>& names) {
  for (const auto& n : names) add(n);
}

std::size_t Alphabet::add(std::string name) {
  if (!valid_name(name)) throw InputError("malformed generator name '" + name + "'");
  if (index_.count(name)) throw InputError("duplicate generator '" + name + "'");
  const std::size_t idx = names_.size();
  index_.emplace(name, idx);
  names_.push_back(std::move(name));
  return idx;
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Alphabet::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw AlphabetMismatch("unknown generator '" + std::string(name) + "'");
  return *idx;
}

std::string_view Alphabet::stem(std::string_view name) {
  std::size_t n = 0;
  while (n < name.size() && std::isalpha(static_cast<unsigned char>(name[n]))) ++n;
  return name.substr(0, n);
}

bool Alphabet::valid_name(std::string_view name) {
  const std::size_t letters = stem(name).size();
  if (letters == 0) return false;
  for (std::size_t i = letters; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

Weight signed_weight(const Word& w, std::span<const Weight> weights) {
  Weight total = 0;
  for (const Letter& l : w) {
    if (l.gen >= weights.size())
      throw AlphabetMismatch("letter refers to generator " + std::to_string(l.gen) + " with no weight");
    total += l.sign * weights[l.gen];
  }
  return total;
}

namespace {

// Splits a token into (name, sign).
std::pair<std::string_view, int> split_token(std::string_view tok) {
  for (std::string_view suffix : {"^-1", "^+1", "^1", "-"}) {
    if (tok.size() > suffix.size() && tok.substr(tok.size() - suffix.size()) == suffix) {
      const int sign = suffix == "^-1" || suffix == "-" ? -1 : 1;
      return {tok.substr(0, tok.size() - suffix.size()), sign};
    }
  }
  return {tok, 1};
}

template <class Lookup>
std::vector<Letter> parse_letters(std::string_view text, Lookup&& lookup) {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    auto [name, sign] = split_token(tok);
    out.push_back({static_cast<std::uint32_t>(lookup(name)), sign});
  }
  return out;
}

template <class NameOf>
std::string format_letters(const std::vector<Letter>& letters, NameOf&& name_of) {
  std::string out;
  for (const Letter& l : letters) {
    if (!out.empty()) out += ' ';
    out += name_of(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return Word(parse_letters(text, [&](std::string_view n) { return alphabet.index_of(n); }));
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  return format_letters(w.letters(), [&](std::uint32_t g) -> const std::string& { return alphabet.name(g); });
}

BasisWord parse_basis_word(std::string_view text, const std::vector<std::string>& names) {
  return BasisWord(parse_letters(text, [&](std::string_view n) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    throw AlphabetMismatch("unknown basis letter '" + std::string(n) + "'");
  }));
}

std::string format_basis_word(const BasisWord& w, const std::vector<std::string>& names) {
  return format_letters(w.letters(), [&](std::uint32_t g) -> const std::string& { return names.at(g); });
}

}  // namespace sqfiber
