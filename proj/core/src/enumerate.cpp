#include "fencemonoid/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fencemonoid/error.hpp"
#include "fencemonoid/fence.hpp"
#include "parallel.hpp"

namespace fencemonoid {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::I: return "I";
    case Kind::PFI: return "PFI";
    case Kind::IF: return "IF";
  }
  return "?";
}

Kind parse_kind(std::string_view text) {
  if (text == "I") return Kind::I;
  if (text == "PFI") return Kind::PFI;
  if (text == "IF") return Kind::IF;
  throw Error(ErrorCode::Parse, "unknown semigroup kind '" + std::string(text) + "'");
}

SemigroupTable SemigroupTable::from_elements(int n, std::vector<PartialInjection> elements,
                                             bool closed) {
  for (const auto& a : elements) {
    if (a.degree() != n) throw Error(ErrorCode::SizeMismatch, "table element of wrong degree");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SemigroupTable t;
  t.n_ = n;
  t.closed_ = closed;
  t.elements_ = std::move(elements);
  t.reindex();
  return t;
}

void SemigroupTable::reindex() {
  index_.clear();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
  }
}

std::optional<std::size_t> SemigroupTable::position(const PartialInjection& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SemigroupTable::product(std::size_t i, std::size_t j) const {
  auto it = index_.find(compose(elements_[i], elements_[j]));
  if (it == index_.end()) throw Error(ErrorCode::NotMember, "product leaves the table");
  return it->second;
}

std::vector<std::size_t> SemigroupTable::word(std::size_t pos) const {
  if (!has_words()) throw Error(ErrorCode::NotMember, "table carries no generator words");
  std::vector<std::size_t> w;
  for (std::uint32_t p = static_cast<std::uint32_t>(pos); p != kNoParent; p = parent_[p]) {
    w.push_back(letter_[p]);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

namespace {

// Depth-first assignment of images to 1, 2, ..., n. Trying "undefined"
// first and then images in increasing order emits maps in canonical order.
class Enumerator {
 public:
  Enumerator(int n, Kind kind, std::vector<PartialInjection>& out)
      : n_(n), kind_(kind), cur_(n), out_(out) {}

  void run_from(int x) {
    if (x > n_) {
      out_.push_back(cur_.value());
      return;
    }
    run_from(x + 1);
    for (int v = 1; v <= n_; ++v) {
      if (try_assign(x, v)) {
        run_from(x + 1);
        unassign(x, v);
      }
    }
  }

  // Branch on the image of 1: 0 means undefined.
  void run_with_first(int v) {
    if (v == 0) {
      run_from(2);
    } else if (try_assign(1, v)) {
      run_from(2);
      unassign(1, v);
    }
  }

 private:
  bool try_assign(int x, int v) {
    if (preimage_[v] != 0) return false;
    if (kind_ != Kind::I && !admissible(x, v)) return false;
    cur_.set(x, v);
    preimage_[v] = static_cast<std::uint8_t>(x);
    return true;
  }

  void unassign(int x, int v) {
    cur_.unset(x);
    preimage_[v] = 0;
  }

  bool admissible(int x, int v) const {
    if (x > 1) {
      int w = cur_[x - 1];
      if (w != 0) {
        bool ok = ((x - 1) % 2 == 1) ? fence_less_unchecked(w, v) : fence_less_unchecked(v, w);
        if (!ok) return false;
      }
    }
    if (kind_ == Kind::IF) {
      // An image neighbour of v must come from the domain neighbour x - 1;
      // orientation was checked above. Points after x are checked later.
      for (int nb : {v - 1, v + 1}) {
        if (nb < 1 || nb > n_) continue;
        int y = preimage_[nb];
        if (y != 0 && y != x - 1) return false;
      }
    }
    return true;
  }

  int n_;
  Kind kind_;
  PartialInjectionBuilder cur_;
  std::array<std::uint8_t, kMaxDegree + 2> preimage_{};
  std::vector<PartialInjection>& out_;
};

}  // namespace

SemigroupTable build(int n, Kind which, const BuildOptions& options) {
  if (n < 1 || n > kBuildGuard) {
    throw Error(ErrorCode::TooLarge,
                "build: n=" + std::to_string(n) + " outside 1.." + std::to_string(kBuildGuard));
  }
  // One task per choice of 1's image; tasks are concatenated in order, which
  // is already canonical order.
  std::vector<std::vector<PartialInjection>> parts(static_cast<std::size_t>(n) + 1);
  detail::parallel_for(parts.size(), options.threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t v = lo; v < hi; ++v) {
      Enumerator e(n, which, parts[v]);
      e.run_with_first(static_cast<int>(v));
    }
  });
  std::vector<PartialInjection> all;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  all.reserve(total);
  for (auto& p : parts) {
    all.insert(all.end(), p.begin(), p.end());
    p.clear();
    p.shrink_to_fit();
  }
  return SemigroupTable::from_elements(n, std::move(all), true);
}

SemigroupTable closure(int n, std::span<const PartialInjection> gens,
                       const ClosureOptions& options) {
  if (gens.empty()) throw Error(ErrorCode::NotMember, "closure: empty generating set");
  std::vector<PartialInjection> sorted_gens(gens.begin(), gens.end());
  for (const auto& g : sorted_gens) {
    if (g.degree() != n) throw Error(ErrorCode::SizeMismatch, "closure: generator of wrong degree");
  }
  std::sort(sorted_gens.begin(), sorted_gens.end());
  sorted_gens.erase(std::unique(sorted_gens.begin(), sorted_gens.end()), sorted_gens.end());

  std::vector<PartialInjection> elems;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> letter;
  std::unordered_map<PartialInjection, std::uint32_t> index;

  bool stopped = false;
  auto insert = [&](const PartialInjection& y, std::uint32_t par, std::uint32_t let) {
    auto [it, fresh] = index.try_emplace(y, static_cast<std::uint32_t>(elems.size()));
    if (!fresh) return false;
    elems.push_back(y);
    parent.push_back(par);
    letter.push_back(let);
    if (options.stop_at && y == *options.stop_at) stopped = true;
    return true;
  };

  std::vector<std::uint32_t> frontier;
  for (std::uint32_t g = 0; g < sorted_gens.size() && !stopped; ++g) {
    if (insert(sorted_gens[g], SemigroupTable::kNoParent, g)) {
      frontier.push_back(static_cast<std::uint32_t>(elems.size() - 1));
    }
  }

  const std::size_t k = sorted_gens.size();
  std::vector<PartialInjection> products;
  while (!frontier.empty() && !stopped) {
    std::sort(frontier.begin(), frontier.end(),
              [&](std::uint32_t a, std::uint32_t b) { return elems[a] < elems[b]; });
    products.resize(frontier.size() * k);
    detail::parallel_for(frontier.size(), options.threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t f = lo; f < hi; ++f) {
        const PartialInjection& x = elems[frontier[f]];
        for (std::size_t g = 0; g < k; ++g) products[f * k + g] = compose(x, sorted_gens[g]);
      }
    });
    std::vector<std::uint32_t> next;
    for (std::size_t f = 0; f < frontier.size() && !stopped; ++f) {
      for (std::size_t g = 0; g < k && !stopped; ++g) {
        if (insert(products[f * k + g], frontier[f], static_cast<std::uint32_t>(g))) {
          next.push_back(static_cast<std::uint32_t>(elems.size() - 1));
        }
      }
    }
    frontier = std::move(next);
  }

  // Canonical order, remapping the parent tree.
  std::vector<std::uint32_t> order(elems.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return elems[a] < elems[b]; });
  std::vector<std::uint32_t> new_pos(elems.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) new_pos[order[i]] = i;

  SemigroupTable t;
  t.n_ = n;
  t.closed_ = !stopped;
  t.generators_ = std::move(sorted_gens);
  t.elements_.reserve(elems.size());
  for (std::uint32_t old : order) t.elements_.push_back(elems[old]);
  if (options.record_words) {
    t.parent_.resize(elems.size());
    t.letter_.resize(elems.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
      std::uint32_t old = order[i];
      t.parent_[i] = parent[old] == SemigroupTable::kNoParent ? SemigroupTable::kNoParent
                                                               : new_pos[parent[old]];
      t.letter_[i] = letter[old];
    }
  }
  t.reindex();
  return t;
}

namespace {

std::size_t require_position(const SemigroupTable& s, const PartialInjection& a) {
  auto pos = s.position(a);
  if (!pos) throw Error(ErrorCode::NotMember, to_string(a) + " is not in the table");
  return *pos;
}

void require_closed(const SemigroupTable& s, std::string_view what) {
  if (!s.closed()) throw Error(ErrorCode::NotMember, std::string(what) + ": table is not closed");
}

}  // namespace

PrincipalIdeals principal_ideals(const SemigroupTable& s, const PartialInjection& a) {
  require_closed(s, "principal_ideals");
  const std::size_t pa = require_position(s, a);
  const std::size_t size = s.size();
  PrincipalIdeals out{std::vector<bool>(size), std::vector<bool>(size), std::vector<bool>(size)};
  out.right[pa] = out.left[pa] = true;
  for (std::size_t j = 0; j < size; ++j) {
    out.right[s.product(pa, j)] = true;
    out.left[s.product(j, pa)] = true;
  }
  out.two_sided = out.left;
  for (std::size_t l = 0; l < size; ++l) {
    if (!out.left[l]) continue;
    for (std::size_t j = 0; j < size; ++j) out.two_sided[s.product(l, j)] = true;
  }
  return out;
}

bool is_generating(const SemigroupTable& s, std::span<const PartialInjection> gens) {
  for (const auto& g : gens) {
    if (!s.contains(g)) throw Error(ErrorCode::NotSubset, to_string(g) + " is not in the table");
  }
  if (gens.empty()) return s.size() == 0;
  ClosureOptions opts;
  opts.record_words = false;
  SemigroupTable c = closure(s.degree(), gens, opts);
  if (c.size() != s.size()) return false;
  return std::all_of(c.begin(), c.end(), [&](const auto& x) { return s.contains(x); });
}

std::vector<PartialInjection> irreducibles(const SemigroupTable& s) {
  require_closed(s, "irreducibles");
  const std::size_t size = s.size();
  std::vector<bool> reducible(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      std::size_t p = s.product(i, j);
      if (p != i && p != j) reducible[p] = true;
    }
  }
  std::vector<PartialInjection> out;
  for (std::size_t i = 0; i < size; ++i) {
    if (!reducible[i]) out.push_back(s[i]);
  }
  return out;
}

std::optional<std::vector<PartialInjection>> least_generating_set(const SemigroupTable& s) {
  auto irr = irreducibles(s);
  if (is_generating(s, irr)) return irr;
  return std::nullopt;
}

SemigroupRank semigroup_rank(const SemigroupTable& s) {
  auto irr = irreducibles(s);
  if (is_generating(s, irr)) return {true, irr.size(), irr.size()};

  const std::size_t size = s.size();
  std::vector<std::size_t> current(size);
  std::iota(current.begin(), current.end(), std::size_t{0});

  auto product_of_two = [&](std::size_t g) {
    for (std::size_t a : current) {
      if (a == g) continue;
      for (std::size_t b : current) {
        if (b != g && compose(s[a], s[b]) == s[g]) return true;
      }
    }
    return false;
  };

  for (std::size_t g = size; g-- > 0;) {
    bool removable = product_of_two(g);
    if (!removable) {
      std::vector<PartialInjection> rest;
      for (std::size_t a : current) {
        if (a != g) rest.push_back(s[a]);
      }
      if (!rest.empty()) {
        ClosureOptions opts;
        opts.record_words = false;
        opts.stop_at = s[g];
        removable = !closure(s.degree(), rest, opts).closed();
      }
    }
    if (removable) {
      current.erase(std::find(current.begin(), current.end(), g));
    }
  }
  return {false, irr.size(), current.size()};
}

std::vector<PartialInjection> elements_of_rank_at_least(const SemigroupTable& s, int min_rank) {
  std::vector<PartialInjection> out;
  for (const auto& a : s) {
    if (a.rank() >= min_rank) out.push_back(a);
  }
  return out;
}

}  // namespace fencemonoid
