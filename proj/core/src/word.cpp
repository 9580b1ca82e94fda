#include "fencemonoid/word.hpp"

#include <algorithm>
#include <charconv>

#include "fencemonoid/error.hpp"

namespace fencemonoid {

PartialInjection eval_letter(int n, const Letter& letter) {
  if (const auto* spec = std::get_if<GeneratorSpec>(&letter)) return named(n, *spec);
  const auto& raw = std::get<PartialInjection>(letter);
  if (raw.degree() != n) {
    throw Error(ErrorCode::SizeMismatch, "letter " + to_string(raw) + " in a degree-" +
                                             std::to_string(n) + " word");
  }
  return raw;
}

Letter inverse_letter(int n, const Letter& letter) {
  if (const auto* spec = std::get_if<GeneratorSpec>(&letter)) {
    if (spec->family == Family::Sigma1) return GeneratorSpec::sig2();
    if (spec->family == Family::Sigma2) return GeneratorSpec::sig1();
    return *spec;
  }
  return inverse(eval_letter(n, letter));
}

void Word::append(const Word& w) {
  if (w.n != n) throw Error(ErrorCode::SizeMismatch, "appending words of different degree");
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
}

void Word::prepend(const Word& w) {
  if (w.n != n) throw Error(ErrorCode::SizeMismatch, "prepending words of different degree");
  letters.insert(letters.begin(), w.letters.begin(), w.letters.end());
}

PartialInjection eval_word(const Word& w) {
  PartialInjection acc = PartialInjection::identity(w.n);
  for (const Letter& l : w.letters) acc = acc * eval_letter(w.n, l);
  return acc;
}

Word inverse_word(const Word& w) {
  Word out{w.n, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(inverse_letter(w.n, *it));
  }
  return out;
}

std::string to_string(const Word& w) {
  std::string out = "w" + std::to_string(w.n) + ":";
  for (const Letter& l : w.letters) {
    out += ' ';
    if (const auto* spec = std::get_if<GeneratorSpec>(&l)) {
      out += to_string(*spec);
    } else {
      out += to_string(std::get<PartialInjection>(l));
    }
  }
  return out;
}

Word parse_word(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::Parse, why + " in word '" + std::string(text) + "'");
  };
  if (text.empty() || text.front() != 'w') throw fail("missing 'w<n>:' prefix");
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw fail("missing ':'");
  int n = 0;
  auto [p, ec] = std::from_chars(text.data() + 1, text.data() + colon, n);
  if (ec != std::errc() || p != text.data() + colon || n < 1 || n > kMaxDegree) {
    throw fail("bad degree");
  }
  Word w{n, {}};
  std::size_t pos = colon + 1;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    if (text.substr(pos, 2) == "n=") {
      auto close = text.find(']', pos);
      if (close == std::string_view::npos) throw fail("unterminated element letter");
      PartialInjection raw = parse_pinj(text.substr(pos, close + 1 - pos));
      if (raw.degree() != n) throw fail("letter degree differs from word degree");
      w.append(raw);
      pos = close + 1;
    } else {
      auto end = text.find(' ', pos);
      if (end == std::string_view::npos) end = text.size();
      w.append(parse_generator_spec(text.substr(pos, end - pos)));
      pos = end;
    }
  }
  return w;
}

}  // namespace fencemonoid
