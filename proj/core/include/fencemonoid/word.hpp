#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fencemonoid/genfam.hpp"
#include "fencemonoid/pinj.hpp"

namespace fencemonoid {

// A word letter is either a named transformation or an explicit element
// (a raw J-letter).
using Letter = std::variant<GeneratorSpec, PartialInjection>;

PartialInjection eval_letter(int n, const Letter& letter);
Letter inverse_letter(int n, const Letter& letter);

// A product read left to right; the empty word denotes the identity.
struct Word {
  int n = 0;
  std::vector<Letter> letters;

  std::size_t length() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  void append(const Letter& l) { letters.push_back(l); }
  void append(const Word& w);
  void prepend(const Word& w);
};

// Throws SizeMismatch if a raw letter has another degree.
PartialInjection eval_word(const Word& w);

// Reverses the word and inverts every letter.
Word inverse_word(const Word& w);

// `w<n>:` followed by space-separated letters; named letters use their
// text form, raw letters the element encoding, e.g.
// `w6: gam:4 n=6:[1>1 3>3] eps:2`.
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

}  // namespace fencemonoid
