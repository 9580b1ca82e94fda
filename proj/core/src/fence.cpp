#include "fencemonoid/fence.hpp"

#include "fencemonoid/error.hpp"

namespace fencemonoid {

bool fence_less(int n, int x, int y) {
  if (x < 1 || x > n || y < 1 || y > n) {
    throw Error(ErrorCode::OutOfRange, "fence_less: point outside 1.." + std::to_string(n));
  }
  return fence_less_unchecked(x, y);
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::NotPFI: return "NotPFI";
    case Membership::PFIOnly: return "PFIOnly";
    case Membership::IF: return "IF";
  }
  return "?";
}

bool is_fence_preserving(const PartialInjection& a) noexcept {
  for (int x = 1; x < a.degree(); ++x) {
    int fx = a[x];
    int fy = a[x + 1];
    if (fx == 0 || fy == 0) continue;
    bool ok = (x % 2 == 1) ? fence_less_unchecked(fx, fy) : fence_less_unchecked(fy, fx);
    if (!ok) return false;
  }
  return true;
}

Membership membership(const PartialInjection& a) noexcept {
  if (!is_fence_preserving(a)) return Membership::NotPFI;
  return is_fence_preserving(inverse(a)) ? Membership::IF : Membership::PFIOnly;
}

}  // namespace fencemonoid
