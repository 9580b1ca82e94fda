#pragma once

#include "fencemonoid/pinj.hpp"

namespace fencemonoid {

// The up-fence 1 < 2 > 3 < 4 ... on {1..n}: x <_f y iff |x - y| = 1 and x
// is odd. Odd points are minimal, even points maximal.
constexpr bool fence_less_unchecked(int x, int y) noexcept {
  return (x % 2 == 1) && (y == x + 1 || y == x - 1);
}

// Throws OutOfRange unless 1 <= x, y <= n.
bool fence_less(int n, int x, int y);

enum class Membership {
  NotPFI,   // some comparability is not preserved
  PFIOnly,  // preserved, but not reflected
  IF,       // preserved and reflected: a and its inverse are both in PFI_n
};

std::string_view to_string(Membership m);

// x <_f y implies xa <_f ya on the domain. Only adjacent domain points are
// comparable, so this is a single pass over consecutive pairs.
bool is_fence_preserving(const PartialInjection& a) noexcept;

Membership membership(const PartialInjection& a) noexcept;

inline bool in_if(const PartialInjection& a) noexcept {
  return membership(a) == Membership::IF;
}

}  // namespace fencemonoid
