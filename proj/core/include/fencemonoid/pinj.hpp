#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fencemonoid {

// Largest supported ambient size. Points are 1-based and stored in a
// byte each, with 0 reserved for "undefined".
inline constexpr int kMaxDegree = 32;

// Bit x (1 <= x <= n) set iff x is in the subset.
using PointSet = std::uint64_t;

// A partial injective self-map of {1..n}, acting on the right: x(ab) = (xa)b.
//
// Values are immutable once built; all operations return new values. The
// image table is a fixed array so composition is a branch-free gather
// (entry 0 is always 0, so undefined points propagate).
class PartialInjection {
 public:
  PartialInjection() = default;

  // The empty map on {1..n}.
  explicit PartialInjection(int n);

  static PartialInjection identity(int n);

  int degree() const noexcept { return n_; }

  // xa, or 0 when x is not in the domain.
  int operator[](int x) const noexcept { return img_[static_cast<std::size_t>(x)]; }

  bool defined(int x) const noexcept { return x >= 1 && x <= n_ && img_[x] != 0; }

  int rank() const noexcept;
  PointSet domain_set() const noexcept;
  PointSet image_set() const noexcept;
  std::vector<int> domain() const;
  std::vector<int> image() const;

  bool is_identity() const noexcept { return rank() == n_ && is_partial_identity(); }
  bool is_partial_identity() const noexcept;

  friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;
  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;

  std::size_t hash() const noexcept;

 private:
  friend class PartialInjectionBuilder;
  friend PartialInjection compose(const PartialInjection&, const PartialInjection&);
  friend PartialInjection inverse(const PartialInjection&);

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree + 1> img_{};
};

// Unchecked incremental construction, for the enumerators' inner loops.
// Callers are responsible for keeping the map injective.
class PartialInjectionBuilder {
 public:
  explicit PartialInjectionBuilder(int n) : value_(n) {}
  explicit PartialInjectionBuilder(PartialInjection start) : value_(start) {}

  void set(int x, int y) noexcept { value_.img_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(y); }
  void unset(int x) noexcept { value_.img_[static_cast<std::size_t>(x)] = 0; }
  int operator[](int x) const noexcept { return value_[x]; }
  const PartialInjection& value() const noexcept { return value_; }

 private:
  PartialInjection value_;
};

using Assignment = std::pair<int, int>;

// Throws DuplicateSource, DuplicateTarget or OutOfRange.
PartialInjection make(int n, std::span<const Assignment> pairs);
PartialInjection make(int n, std::initializer_list<Assignment> pairs);

// Left-to-right product. Throws SizeMismatch.
PartialInjection compose(const PartialInjection& a, const PartialInjection& b);
PartialInjection inverse(const PartialInjection& a);

// id|_Y. Throws OutOfRange.
PartialInjection identity_on(int n, std::span<const int> points);
PartialInjection identity_on(int n, std::initializer_list<int> points);
PartialInjection identity_on_set(int n, PointSet points);

inline PartialInjection operator*(const PartialInjection& a, const PartialInjection& b) {
  return compose(a, b);
}

// Total order key: the degree followed by the image table. The empty map is
// the least element of each degree.
using CanonicalKey = std::array<std::uint8_t, kMaxDegree + 2>;
CanonicalKey canonical_key(const PartialInjection& a);

// `n=6:[1>3 2>2 4>6 5>5 6>4]`, entries sorted by source.
std::string to_string(const PartialInjection& a);
// Accepts exactly the format above (whitespace between entries is free).
// Throws Parse plus anything make() throws.
PartialInjection parse_pinj(std::string_view text);

PointSet point_set(std::span<const int> points);
std::vector<int> points_of(PointSet set);
inline bool contains(PointSet set, int x) { return x >= 1 && x < 64 && ((set >> x) & 1U); }

}  // namespace fencemonoid

template <>
struct std::hash<fencemonoid::PartialInjection> {
  std::size_t operator()(const fencemonoid::PartialInjection& a) const noexcept {
    return a.hash();
  }
};
