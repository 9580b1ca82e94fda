#pragma once

// Brute-force reference implementations used to cross-check the library.
// They work on plain image vectors and use only the definitions, never the
// library's fast paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "fencemonoid/pinj.hpp"

namespace oracle {

// img[x] for x = 1..n, 0 = undefined; img[0] unused.
using Map = std::vector<int>;

inline fencemonoid::PartialInjection to_pinj(const Map& m) {
  std::vector<fencemonoid::Assignment> pairs;
  for (int x = 1; x < static_cast<int>(m.size()); ++x) {
    if (m[x] != 0) pairs.emplace_back(x, m[x]);
  }
  return fencemonoid::make(static_cast<int>(m.size()) - 1, pairs);
}

inline Map to_map(const fencemonoid::PartialInjection& a) {
  Map m(a.degree() + 1, 0);
  for (int x = 1; x <= a.degree(); ++x) m[x] = a[x];
  return m;
}

// Every partial injection of {1..n}, by trying all targets for each point.
inline std::vector<Map> all_maps(int n) {
  std::vector<Map> out;
  Map cur(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self, int x) -> void {
    if (x > n) {
      out.push_back(cur);
      return;
    }
    cur[x] = 0;
    self(self, x + 1);
    for (int y = 1; y <= n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      cur[x] = y;
      self(self, x + 1);
      used[y] = false;
    }
    cur[x] = 0;
  };
  rec(rec, 1);
  return out;
}

// Up-fence: x < y iff x odd and |x - y| = 1.
inline bool less(int x, int y) { return (x % 2 == 1) && (x - y == 1 || y - x == 1); }

// Forward implication over all ordered pairs of the domain.
inline bool preserves(const Map& m) {
  int n = static_cast<int>(m.size()) - 1;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (m[x] && m[y] && less(x, y) && !less(m[x], m[y])) return false;
    }
  }
  return true;
}

inline Map inverse(const Map& m) {
  Map out(m.size(), 0);
  for (int x = 1; x < static_cast<int>(m.size()); ++x) {
    if (m[x]) out[m[x]] = x;
  }
  return out;
}

inline bool in_pfi(const Map& m) { return preserves(m); }
inline bool in_if(const Map& m) { return preserves(m) && preserves(inverse(m)); }

inline Map compose(const Map& a, const Map& b) {
  Map out(a.size(), 0);
  for (int x = 1; x < static_cast<int>(a.size()); ++x) out[x] = a[x] ? b[a[x]] : 0;
  return out;
}

inline std::vector<Map> all_if(int n) {
  std::vector<Map> out;
  for (auto& m : all_maps(n)) {
    if (in_if(m)) out.push_back(m);
  }
  return out;
}

inline std::vector<Map> all_pfi(int n) {
  std::vector<Map> out;
  for (auto& m : all_maps(n)) {
    if (in_pfi(m)) out.push_back(m);
  }
  return out;
}

// Maximal runs of the domain as (start, length).
inline std::vector<std::pair<int, int>> domain_runs(const Map& m) {
  std::vector<std::pair<int, int>> out;
  int n = static_cast<int>(m.size()) - 1;
  for (int x = 1; x <= n; ++x) {
    if (!m[x]) continue;
    if (x > 1 && m[x - 1]) {
      out.back().second++;
    } else {
      out.emplace_back(x, 1);
    }
  }
  return out;
}

// (size -> count, odd size >= 3 -> count of blocks starting at an odd point)
using Invariant = std::pair<std::map<int, int>, std::map<int, int>>;

inline Invariant invariant(const Map& m) {
  Invariant inv;
  for (auto [start, len] : domain_runs(m)) {
    inv.first[len]++;
    if (len % 2 == 1 && len >= 3 && start % 2 == 1) inv.second[len]++;
  }
  return inv;
}

// S^1 a S^1 inside a finite set closed under composition, by products.
inline std::set<Map> two_sided_ideal(const std::vector<Map>& s, const Map& a) {
  std::set<Map> left{a};
  for (const auto& x : s) left.insert(compose(x, a));
  std::set<Map> out = left;
  for (const auto& l : left) {
    for (const auto& y : s) out.insert(compose(l, y));
  }
  return out;
}

// Seeded sampling helpers for property tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // A uniformly random partial map built by drawing each point's target
  // from the unused points plus "undefined".
  Map random_map(int n) {
    Map m(n + 1, 0);
    std::vector<int> free;
    for (int y = 1; y <= n; ++y) free.push_back(y);
    for (int x = 1; x <= n; ++x) {
      int pick = uniform(0, static_cast<int>(free.size()));
      if (pick == static_cast<int>(free.size())) continue;
      m[x] = free[static_cast<std::size_t>(pick)];
      free.erase(free.begin() + pick);
    }
    return m;
  }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
