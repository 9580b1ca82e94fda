#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fencemonoid/pinj.hpp"

namespace fencemonoid {

enum class Kind { I, PFI, IF };

std::string_view to_string(Kind kind);
Kind parse_kind(std::string_view text);

// Largest degree build() accepts. |I_10| is about 2.3e8.
inline constexpr int kBuildGuard = 10;

struct ClosureOptions;

// A finite set of partial injections of one degree, sorted by canonical key.
//
// Tables produced by closure() also carry one generator word per element:
// the first word found by a breadth-first saturation, so words are shortest
// and ties go to the smaller left factor. Words are stored as a parent tree
// (word(x) = word(parent) + letter).
class SemigroupTable {
 public:
  static constexpr std::uint32_t kNoParent = 0xFFFFFFFFU;

  SemigroupTable() = default;

  // Sorts and deduplicates. `closed` is trusted, not checked.
  static SemigroupTable from_elements(int n, std::vector<PartialInjection> elements, bool closed);

  int degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool closed() const noexcept { return closed_; }

  const std::vector<PartialInjection>& elements() const noexcept { return elements_; }
  const PartialInjection& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  std::optional<std::size_t> position(const PartialInjection& a) const;
  bool contains(const PartialInjection& a) const { return index_.contains(a); }

  // Position of (*this)[i] * (*this)[j]. Throws NotMember if the product
  // falls outside the table (only possible when !closed()).
  std::size_t product(std::size_t i, std::size_t j) const;

  bool has_words() const noexcept { return !parent_.empty(); }
  const std::vector<PartialInjection>& generators() const noexcept { return generators_; }
  // Indices into generators(); throws NotMember if the table has no words.
  std::vector<std::size_t> word(std::size_t pos) const;

 private:
  friend SemigroupTable closure(int, std::span<const PartialInjection>, const ClosureOptions&);

  void reindex();

  int n_ = 0;
  bool closed_ = false;
  std::vector<PartialInjection> elements_;
  std::unordered_map<PartialInjection, std::uint32_t> index_;
  std::vector<PartialInjection> generators_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> letter_;
};

struct BuildOptions {
  unsigned threads = 1;
};

// All partial injections of {1..n} in the given class, by a depth-first
// search that prunes on the fence condition as points are assigned.
// Throws TooLarge for n > kBuildGuard (or n < 1).
SemigroupTable build(int n, Kind which, const BuildOptions& options = {});

struct ClosureOptions {
  unsigned threads = 1;
  bool record_words = true;
  // Stop as soon as this element is found (the table is then partial and
  // not closed). Used by membership-only queries.
  std::optional<PartialInjection> stop_at;
};

// <gens>. Generators are deduplicated and sorted; generator words index the
// sorted list. Output is identical for every thread count.
SemigroupTable closure(int n, std::span<const PartialInjection> gens,
                       const ClosureOptions& options = {});

struct PrincipalIdeals {
  std::vector<bool> right;  // aS^1
  std::vector<bool> left;   // S^1a
  std::vector<bool> two_sided;  // S^1aS^1
};

// Membership masks over the table positions. Throws NotMember, and
// NotMember if the table is not closed.
PrincipalIdeals principal_ideals(const SemigroupTable& s, const PartialInjection& a);

// Throws NotSubset.
bool is_generating(const SemigroupTable& s, std::span<const PartialInjection> gens);

// Elements that are not a product of two elements of S minus themselves.
// This characterises "not in <S \ {g}>" only because S is closed: any longer
// product collapses to two factors. Throws NotMember if !s.closed().
std::vector<PartialInjection> irreducibles(const SemigroupTable& s);

// The irreducibles, if they generate S (they then lie in every generating
// set, so they form the least one); nullopt otherwise.
std::optional<std::vector<PartialInjection>> least_generating_set(const SemigroupTable& s);

struct SemigroupRank {
  bool exact = false;
  std::size_t lower = 0;
  std::size_t upper = 0;

  std::size_t value() const { return lower; }
};

// Exact when a least generating set exists. Otherwise lower = number of
// irreducibles, upper = size of a generating set found by greedily dropping
// elements (largest canonical key first) while generation is kept.
SemigroupRank semigroup_rank(const SemigroupTable& s);

// Elements of s with rank >= min_rank, in table order.
std::vector<PartialInjection> elements_of_rank_at_least(const SemigroupTable& s, int min_rank);

}  // namespace fencemonoid
