#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fencemonoid/enumerate.hpp"
#include "fencemonoid/greens.hpp"
#include "fencemonoid/word.hpp"

namespace fencemonoid {

// An element together with a word over J (rank >= n - 2 letters of IF_n)
// that evaluates to it.
struct BuiltElement {
  PartialInjection element;
  Word word;
};

// Interval reversal on [m, m + p] (p even): x -> 2m + p - x there, m - 1
// and m + p + 1 dropped, everything else fixed. Self-inverse, rank >= n - 2.
// The word is the single letter itself. Throws BadIndices.
BuiltElement build_reversal(int n, int m, int p);

enum class ShiftKind {
  Shift2,        // [m, m+p] -> +2; fixed below m-1 and from m+p+4
  Shift2k,       // [m, m+p] -> +2k; fixed below m-1 and from m+p+2k+2
  RevShift,      // p odd: [m, m+p] reversed onto [m+1, m+p+1]; fixed from m+p+3
  RevShift2k,    // p odd: reversed onto [m+2k-1, m+p+2k-1]; fixed from m+p+2k+1
  RevShiftEven,  // p even: reversed onto [m+2k, m+p+2k]; fixed from m+p+2k+2
};

std::string_view to_string(ShiftKind kind);

// The transformation of the given kind built straight from its pointwise
// description, and a J-word assembled from reversals and partial identities
// (kinds without k ignore it). Throws BadIndices or KindMismatch.
BuiltElement build_shift_word(int n, ShiftKind kind, int m, int p, int k = 1);

// eps letters for each point of `removed`, ascending; evaluates to the
// identity on the complement. Throws OutOfRange.
Word partial_identity_word(int n, PointSet removed);

// Number of domain points x with x and xa of different parity.
int parity_mismatches(const PartialInjection& a);

struct ParityNormalized {
  Word left;
  Word right;
  PartialInjection core;  // eval(left) * a * eval(right)
};

// Moves every parity-mismatched point (each is an isolated domain point) to
// point 1 of its side: even points by a left factor 1 -> x, odd ones by a
// right factor xa -> 1, smallest first, even ones first. dom a lies in the
// image of eval(left) and im a in the domain of eval(right), so a is
// recovered as eval(left)^-1 * core * eval(right)^-1. Throws NotInIF.
ParityNormalized parity_normalize(const PartialInjection& a);

// One domain block of a parity-normalised element with its image block.
struct BlockPair {
  Block domain;
  Block image;
  bool reversed = false;  // r*a == u for a block of size >= 2

  int r() const noexcept { return domain.start; }
  int s() const noexcept { return domain.last(); }
  int t() const noexcept { return image.start; }
  int u() const noexcept { return image.last(); }
};

// A parity-normalised element of IF_n whose first `first_moving - 1` domain
// blocks are fixed pointwise and lie below every later image block.
struct BlockForm {
  PartialInjection element;
  int first_moving = 1;  // 1-based block index i
  std::vector<BlockPair> pairs;

  const BlockPair& pair(int index) const { return pairs[static_cast<std::size_t>(index - 1)]; }
  int block_count() const noexcept { return static_cast<int>(pairs.size()); }

  // Throws MalformedBlockForm when the conditions above fail.
  static BlockForm of(const PartialInjection& a, int first_moving);
};

// Left and right J-words to conjugate by: the new element is
// eval(left) * a * eval(right).
struct Conjugators {
  Word left;
  Word right;
  // Which construction produced them: 0 for none needed, 1..6 for the single
  // reversal cases, 71 / 72 for the two-step cases.
  int construction = 0;
};

// Brings the smallest image block among blocks i..p onto block i.
// Cases are tried in a fixed order, first match wins: reversals fixing the
// domain side (1-3), then the image side (4-6), then the composite cases.
Conjugators align_first_block(const BlockForm& form);

// Given block i already carries the smallest later image block, moves the
// block onto its image (or the image onto the block) so that block i
// becomes pointwise fixed.
Conjugators fix_first_block(const BlockForm& form);

struct Factorization {
  Word word;
  bool used_fallback = false;
};

// The stored word of `a` in a table built by closure(); letters are the
// table's generators as raw elements. Throws NotMember.
Word factorize_bfs(const SemigroupTable& s, const PartialInjection& a);

// Factorizes elements of IF_n for one n.
//
// factorize_j runs the constructive pipeline (parity normalisation, then
// align/fix for each block, then partial identities) and checks every
// step; if a check fails the word comes from the closure of set_J(n)
// instead and fallback_count() goes up. The breadth-first tables are
// built on first use. Not thread-safe.
class Factorizer {
 public:
  explicit Factorizer(int n, unsigned threads = 1);
  ~Factorizer();
  Factorizer(Factorizer&&) noexcept;
  Factorizer& operator=(Factorizer&&) noexcept;

  int degree() const noexcept { return n_; }

  // eval(word) == a, every letter in J. Throws NotInIF.
  Factorization factorize_j(const PartialInjection& a);

  // eval(word) == a, every letter in G: the constructive J-word (without
  // the one-letter shortcut) with each letter rewritten by g_word_for.
  // Throws OddAmbient, NotInIF.
  Factorization factorize_g(const PartialInjection& a);

  // The constructive pipeline alone; nullopt if any step check fails.
  // With `rank_shortcut`, elements of rank >= n - 2 are returned as one
  // letter.
  std::optional<Word> constructive_j(const PartialInjection& a, bool rank_shortcut = true) const;

  std::size_t fallback_count() const noexcept { return fallbacks_; }
  // Letters of G-words that came from the breadth-first table rather than
  // the identity table.
  std::size_t g_table_misses() const noexcept { return g_misses_; }

  const SemigroupTable& j_closure();
  const SemigroupTable& g_closure();

 private:
  int n_;
  unsigned threads_;
  std::size_t fallbacks_ = 0;
  std::size_t g_misses_ = 0;
  std::unique_ptr<SemigroupTable> j_table_;
  std::unique_ptr<SemigroupTable> g_table_;
};

}  // namespace fencemonoid
