#include "fencemonoid/greens.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>
#include <map>

#include "fencemonoid/error.hpp"
#include "fencemonoid/fence.hpp"

namespace fencemonoid {

BlockDecomposition blocks(int n, PointSet points) {
  if (n < 0 || n > kMaxDegree || (points & ~((PointSet{2} << n) - 2)) != 0) {
    throw Error(ErrorCode::OutOfRange, "blocks: points outside 1.." + std::to_string(n));
  }
  BlockDecomposition out;
  for (int x = 1; x <= n; ++x) {
    if (!contains(points, x)) continue;
    if (!out.empty() && out.back().last() == x - 1) {
      ++out.back().length;
    } else {
      out.push_back({x, 1});
    }
  }
  return out;
}

BlockDecomposition blocks(int n, std::span<const int> points) {
  for (int x : points) {
    if (x < 1 || x > n) throw Error(ErrorCode::OutOfRange, "blocks: point " + std::to_string(x));
  }
  return blocks(n, point_set(points));
}

JInvariant j_invariant(const PartialInjection& a) {
  JInvariant inv;
  for (const Block& b : blocks(a.degree(), a.domain_set())) {
    ++inv.total[static_cast<std::size_t>(b.length)];
    if (b.length >= 3 && b.length % 2 == 1 && b.start % 2 == 1) {
      ++inv.odd_start[static_cast<std::size_t>(b.length)];
    }
  }
  return inv;
}

std::string to_string(const JInvariant& inv) {
  std::string out;
  for (std::size_t k = 1; k < inv.total.size(); ++k) {
    if (inv.total[k] == 0) continue;
    if (!out.empty()) out += ';';
    out += std::to_string(k) + ':' + std::to_string(inv.total[k]);
    if (k >= 3 && k % 2 == 1) out += ':' + std::to_string(inv.odd_start[k]);
  }
  return out;
}

JInvariant parse_j_invariant(std::string_view text) {
  JInvariant inv;
  auto bad = [&] { return Error(ErrorCode::Parse, "bad J-invariant '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    std::array<int, 3> f{};
    int nf = 0;
    const char* p = term.data();
    const char* stop = term.data() + term.size();
    while (p < stop) {
      if (nf == 3) throw bad();
      auto [q, ec] = std::from_chars(p, stop, f[static_cast<std::size_t>(nf)]);
      if (ec != std::errc() || f[static_cast<std::size_t>(nf)] < 0) throw bad();
      ++nf;
      p = q;
      if (p < stop) {
        if (*p != ':') throw bad();
        ++p;
        if (p == stop) throw bad();
      }
    }
    int k = f[0];
    bool odd_term = k >= 3 && k % 2 == 1;
    if (k < 1 || k > kMaxDegree || nf != (odd_term ? 3 : 2) || f[1] == 0 || f[2] > f[1]) {
      throw bad();
    }
    inv.total[static_cast<std::size_t>(k)] = f[1];
    inv.odd_start[static_cast<std::size_t>(k)] = f[2];
    pos = end + 1;
  }
  return inv;
}

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::R: return "R";
    case Relation::L: return "L";
    case Relation::H: return "H";
    case Relation::J: return "J";
    case Relation::D: return "D";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == "R") return Relation::R;
  if (text == "L") return Relation::L;
  if (text == "H") return Relation::H;
  if (text == "J") return Relation::J;
  if (text == "D") return Relation::D;
  throw Error(ErrorCode::Parse, "unknown relation '" + std::string(text) + "'");
}

namespace {

void require_if_pair(const PartialInjection& a, const PartialInjection& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::SizeMismatch, "elements of different degree");
  if (!in_if(a)) throw Error(ErrorCode::NotInIF, to_string(a));
  if (!in_if(b)) throw Error(ErrorCode::NotInIF, to_string(b));
}

}  // namespace

bool are_J_related(const PartialInjection& a, const PartialInjection& b) {
  require_if_pair(a, b);
  return j_invariant(a) == j_invariant(b);
}

bool green_test(Relation rel, const PartialInjection& a, const PartialInjection& b) {
  require_if_pair(a, b);
  switch (rel) {
    case Relation::R: return a.domain_set() == b.domain_set();
    case Relation::L: return a.image_set() == b.image_set();
    case Relation::H: return a.domain_set() == b.domain_set() && a.image_set() == b.image_set();
    case Relation::J:
    case Relation::D: return j_invariant(a) == j_invariant(b);
  }
  return false;
}

JWitness j_witness(const PartialInjection& a, const PartialInjection& b) {
  if (!are_J_related(a, b)) {
    throw Error(ErrorCode::NotJRelated, to_string(a) + " and " + to_string(b));
  }
  const int n = a.degree();
  const auto a_blocks = blocks(n, a.domain_set());
  const auto b_blocks = blocks(n, b.domain_set());

  // Match b's blocks to a's blocks of the same size, ascending by start. For
  // odd sizes >= 3, odd-start blocks are matched among themselves first so
  // the alternating pattern lines up.
  auto rank_key = [](const Block& blk) {
    bool odd_first = blk.length >= 3 && blk.length % 2 == 1 && blk.start % 2 == 1;
    return std::tuple(blk.length, odd_first ? 0 : 1, blk.start);
  };
  auto order = [&](BlockDecomposition v) {
    std::sort(v.begin(), v.end(),
              [&](const Block& x, const Block& y) { return rank_key(x) < rank_key(y); });
    return v;
  };
  const auto a_sorted = order(a_blocks);
  const auto b_sorted = order(b_blocks);

  PartialInjectionBuilder left(n);
  for (std::size_t idx = 0; idx < b_sorted.size(); ++idx) {
    const Block& from = b_sorted[idx];
    const Block& to = a_sorted[idx];
    const int k = from.length;
    const bool ascending = k == 1 || (from.start % 2) == (to.start % 2);
    for (int r = 0; r < k; ++r) {
      left.set(from.start + r, ascending ? to.start + r : to.start + k - 1 - r);
    }
  }
  const PartialInjection gamma = left.value();
  const PartialInjection delta = inverse(a) * inverse(gamma) * b;
  return {gamma, delta};
}

JClasses j_classes(const SemigroupTable& s) {
  JClasses out;
  std::map<JInvariant, std::size_t> slot;
  for (std::size_t i = 0; i < s.size(); ++i) {
    JInvariant inv = j_invariant(s[i]);
    auto [it, fresh] = slot.try_emplace(inv, out.classes.size());
    if (fresh) {
      out.classes.emplace_back();
      out.invariants.push_back(inv);
    }
    out.classes[it->second].push_back(i);
  }
  return out;
}

}  // namespace fencemonoid
