#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "fencemonoid/enumerate.hpp"
#include "fencemonoid/pinj.hpp"

namespace fencemonoid {

// A maximal run {start, ..., start + length - 1}.
struct Block {
  int start = 0;
  int length = 0;

  int last() const noexcept { return start + length - 1; }
  friend auto operator<=>(const Block&, const Block&) = default;
};

// Maximal runs of a subset, ascending. Consecutive blocks are separated by
// at least one missing point.
using BlockDecomposition = std::vector<Block>;

// Throws OutOfRange if the set has points outside 1..n.
BlockDecomposition blocks(int n, PointSet points);
BlockDecomposition blocks(int n, std::span<const int> points);

// Counts of domain blocks by size, and of odd-size blocks (size >= 3) that
// start at an odd point. Two elements of IF_n are J-related iff their
// invariants agree.
struct JInvariant {
  std::array<int, kMaxDegree + 1> total{};
  std::array<int, kMaxDegree + 1> odd_start{};

  friend bool operator==(const JInvariant&, const JInvariant&) = default;
  friend auto operator<=>(const JInvariant&, const JInvariant&) = default;
};

JInvariant j_invariant(const PartialInjection& a);

// `k:total[:odd]` terms joined by ';' in ascending k, zero totals omitted;
// the odd field appears for odd k >= 3. The empty invariant is "".
std::string to_string(const JInvariant& inv);
JInvariant parse_j_invariant(std::string_view text);

// D coincides with J in a finite semigroup; it is accepted as an alias.
enum class Relation { R, L, H, J, D };

std::string_view to_string(Relation rel);
Relation parse_relation(std::string_view text);

// R: equal domains, L: equal images, H: both, J/D: equal invariants.
// Throws NotInIF or SizeMismatch.
bool green_test(Relation rel, const PartialInjection& a, const PartialInjection& b);

bool are_J_related(const PartialInjection& a, const PartialInjection& b);

// b = left * a * right, with left, right in IF_n, dom left = dom b and
// im left = dom a.
struct JWitness {
  PartialInjection left;
  PartialInjection right;
};

// Throws NotJRelated (or NotInIF / SizeMismatch).
JWitness j_witness(const PartialInjection& a, const PartialInjection& b);

struct JClasses {
  // Positions into the table; classes ordered by their smallest member.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<JInvariant> invariants;
};

JClasses j_classes(const SemigroupTable& s);

}  // namespace fencemonoid
