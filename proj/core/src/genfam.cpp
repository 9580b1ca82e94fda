#include "fencemonoid/genfam.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <stdexcept>

#include "fencemonoid/error.hpp"
#include "fencemonoid/fence.hpp"
#include "fencemonoid/generator_words.hpp"
#include "fencemonoid/greens.hpp"

namespace fencemonoid {

std::string to_string(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::Id: return "id";
    case Family::Epsilon: return "eps:" + std::to_string(spec.i);
    case Family::Sigma1: return "sig1";
    case Family::Sigma2: return "sig2";
    case Family::Gamma: return "gam:" + std::to_string(spec.i);
    case Family::Delta: return "del:" + std::to_string(spec.i);
    case Family::Beta: return "beta:" + std::to_string(spec.i) + "," + std::to_string(spec.j);
  }
  return "?";
}

namespace {

int parse_index(std::string_view text, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::Parse, "bad generator '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  if (text == "id") return GeneratorSpec::id();
  if (text == "sig1") return GeneratorSpec::sig1();
  if (text == "sig2") return GeneratorSpec::sig2();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::Parse, "bad generator '" + std::string(text) + "'");
  }
  std::string_view head = text.substr(0, colon);
  std::string_view args = text.substr(colon + 1);
  if (head == "eps") return GeneratorSpec::eps(parse_index(args, text));
  if (head == "gam") return GeneratorSpec::gam(parse_index(args, text));
  if (head == "del") return GeneratorSpec::del(parse_index(args, text));
  if (head == "beta") {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::Parse, "bad generator '" + std::string(text) + "'");
    }
    return GeneratorSpec::beta(parse_index(args.substr(0, comma), text),
                               parse_index(args.substr(comma + 1), text));
  }
  throw Error(ErrorCode::Parse, "bad generator '" + std::string(text) + "'");
}

bool valid_for(int n, const GeneratorSpec& spec) noexcept {
  const int i = spec.i;
  const int j = spec.j;
  switch (spec.family) {
    case Family::Id: return n >= 1;
    case Family::Epsilon: return 1 <= i && i <= n;
    case Family::Sigma1:
    case Family::Sigma2: return n >= 2 && n % 2 == 0;
    case Family::Gamma: return i % 2 == 0 && 4 <= i && i <= n;
    case Family::Delta: return n % 2 == 0 && i % 2 == 1 && 1 <= i && i <= n - 3;
    case Family::Beta: return 1 <= i && i < j && j <= n && (j - i) % 2 == 0;
  }
  return false;
}

PartialInjection named(int n, const GeneratorSpec& spec) {
  if (n < 1 || n > kMaxDegree) throw Error(ErrorCode::BadIndex, "degree " + std::to_string(n));
  const bool needs_even = spec.family == Family::Sigma1 || spec.family == Family::Sigma2 ||
                          spec.family == Family::Delta;
  if (needs_even && n % 2 != 0) {
    throw Error(ErrorCode::OddAmbient, to_string(spec) + " needs even n, got " + std::to_string(n));
  }
  if (!valid_for(n, spec)) {
    throw Error(ErrorCode::BadIndex, to_string(spec) + " for n=" + std::to_string(n));
  }
  const int i = spec.i;
  const int j = spec.j;
  PartialInjectionBuilder b(n);
  switch (spec.family) {
    case Family::Id:
      for (int x = 1; x <= n; ++x) b.set(x, x);
      break;
    case Family::Epsilon:
      for (int x = 1; x <= n; ++x) {
        if (x != i) b.set(x, x);
      }
      break;
    case Family::Sigma1:
    case Family::Sigma2:
      b.set(1, n);
      for (int x = 3; x <= n; ++x) b.set(x, x - 2);
      break;
    case Family::Gamma:
      for (int x = 1; x < i; ++x) b.set(x, i - x);
      for (int x = i + 1; x <= n; ++x) b.set(x, x);
      break;
    case Family::Delta:
      for (int x = 1; x < i; ++x) b.set(x, x);
      for (int x = i + 1; x <= n; ++x) b.set(x, n + i + 1 - x);
      break;
    case Family::Beta:
      for (int x = 1; x < i; ++x) b.set(x, x);
      for (int x = i + 1; x < j; ++x) b.set(x, i + j - x);
      for (int x = j + 1; x <= n; ++x) b.set(x, x);
      break;
  }
  PartialInjection out = spec.family == Family::Sigma2 ? inverse(b.value()) : b.value();
  if (!in_if(out)) throw std::logic_error("named(): " + to_string(spec) + " left IF_n");
  return out;
}

namespace {

void place_blocks(const BlockDecomposition& from, const BlockDecomposition& to, std::size_t next,
                  std::vector<bool>& used, PartialInjectionBuilder& cur,
                  std::vector<PartialInjection>& out) {
  if (next == from.size()) {
    if (in_if(cur.value())) out.push_back(cur.value());
    return;
  }
  const Block& src = from[next];
  for (std::size_t t = 0; t < to.size(); ++t) {
    if (used[t] || to[t].length != src.length) continue;
    used[t] = true;
    const int orientations = src.length == 1 ? 1 : 2;
    for (int o = 0; o < orientations; ++o) {
      for (int r = 0; r < src.length; ++r) {
        cur.set(src.start + r, o == 0 ? to[t].start + r : to[t].last() - r);
      }
      place_blocks(from, to, next + 1, used, cur, out);
    }
    for (int r = 0; r < src.length; ++r) cur.unset(src.start + r);
    used[t] = false;
  }
}

}  // namespace

std::vector<PartialInjection> if_maps_between(int n, PointSet domain, PointSet image) {
  const auto from = blocks(n, domain);
  const auto to = blocks(n, image);
  std::vector<PartialInjection> out;
  if (from.size() != to.size()) return out;
  std::vector<bool> used(to.size());
  PartialInjectionBuilder cur(n);
  place_blocks(from, to, 0, used, cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PartialInjection> set_J(int n) {
  if (n < 1 || n > kMaxDegree) throw Error(ErrorCode::BadIndex, "degree " + std::to_string(n));
  const PointSet all = (PointSet{2} << n) - 2;
  // Subsets missing at most two points.
  std::vector<PointSet> big;
  big.push_back(all);
  for (int x = 1; x <= n; ++x) {
    big.push_back(all & ~(PointSet{1} << x));
    for (int y = x + 1; y <= n; ++y) big.push_back(all & ~(PointSet{1} << x) & ~(PointSet{1} << y));
  }
  std::vector<PartialInjection> out;
  for (PointSet d : big) {
    for (PointSet im : big) {
      if (std::popcount(d) != std::popcount(im)) continue;
      auto maps = if_maps_between(n, d, im);
      out.insert(out.end(), maps.begin(), maps.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GeneratorSpec> set_G_specs(int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::OddAmbient, "G is defined for even n >= 2, got " + std::to_string(n));
  }
  std::vector<GeneratorSpec> out{GeneratorSpec::id(), GeneratorSpec::sig1(), GeneratorSpec::sig2()};
  for (int i = 4; i <= n; i += 2) out.push_back(GeneratorSpec::gam(i));
  for (int i = 1; i <= n - 3; i += 2) out.push_back(GeneratorSpec::del(i));
  return out;
}

std::vector<PartialInjection> set_G(int n) {
  std::vector<PartialInjection> out;
  for (const auto& s : set_G_specs(n)) out.push_back(named(n, s));
  return out;
}

SemigroupTable closure_of_g(int n, unsigned threads) {
  ClosureOptions opts;
  opts.threads = threads;
  return closure(n, set_G(n), opts);
}

namespace {

// 1 -> a, x -> x - 2 for 3 <= x <= a, fixed above a + 1 (a even).
PartialInjection shift_to_front(int n, int a) {
  PartialInjectionBuilder b(n);
  b.set(1, a);
  for (int x = 3; x <= a; ++x) b.set(x, x - 2);
  for (int x = a + 2; x <= n; ++x) b.set(x, x);
  return b.value();
}

std::vector<Word> identity_candidates(int n, const PartialInjection& target) {
  using G = GeneratorSpec;
  std::vector<Word> out;
  auto add = [&](std::initializer_list<G> letters) {
    Word w{n, {}};
    for (const G& g : letters) {
      if (!valid_for(n, g)) return;
      w.append(g);
    }
    out.push_back(std::move(w));
  };

  if (target.is_identity()) add({G::id()});
  for (const G& g : set_G_specs(n)) {
    if (named(n, g) == target) add({g});
  }
  if (target.is_partial_identity() && !target.is_identity()) {
    // One eps word per missing point; several choices only for rank n - 1.
    auto eps_words = [&](int i) {
      std::vector<std::vector<G>> ws;
      if (i % 2 == 0) ws.push_back({G::gam(i), G::gam(i)});
      if (i % 2 == 1) ws.push_back({G::del(i), G::del(i)});
      if (i == 2) ws.push_back({G::sig1(), G::sig2()});
      if (i == n - 1) ws.push_back({G::sig2(), G::sig1()});
      std::erase_if(ws, [&](const std::vector<G>& w) {
        return !std::all_of(w.begin(), w.end(), [&](const G& g) { return valid_for(n, g); });
      });
      return ws;
    };
    const auto missing = points_of(~target.domain_set() & ((PointSet{2} << n) - 2));
    if (missing.size() == 1) {
      for (const auto& w : eps_words(missing.front())) {
        out.push_back(Word{n, {w.begin(), w.end()}});
      }
    } else {
      Word w{n, {}};
      bool complete = true;
      for (int i : missing) {
        auto ws = eps_words(i);
        if (ws.empty()) {
          complete = false;
          break;
        }
        for (const G& g : ws.front()) w.append(g);
      }
      if (complete) out.push_back(std::move(w));
    }
  }
  for (int a = 2; a <= n; a += 2) {
    const PartialInjection eta = shift_to_front(n, a);
    if (eta == target) {
      if (a == n) add({G::sig1()});
      else add({G::del(a + 1), G::sig1(), G::del(a - 1)});
    } else if (inverse(eta) == target) {
      if (a == n) add({G::sig2()});
      else add({G::del(a - 1), G::sig2(), G::del(a + 1)});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; j += 2) {
      if (named(n, G::beta(i, j)) != target) continue;
      if (i % 2 == 1) add({G::del(i), G::del(n - j + i + 1), G::del(i)});
      else add({G::gam(j), G::gam(j - i), G::gam(j)});
    }
  }
  return out;
}

}  // namespace

GWord g_word_for(int n, const PartialInjection& target, const SemigroupTable& closure_of_g) {
  if (n % 2 != 0) throw Error(ErrorCode::OddAmbient, "G-words need even n");
  if (target.degree() != n) throw Error(ErrorCode::SizeMismatch, "g_word_for: degree");
  auto pos = closure_of_g.position(target);
  if (!pos) throw Error(ErrorCode::NotMember, to_string(target) + " not in <G>");

  for (Word& w : identity_candidates(n, target)) {
    if (eval_word(w) == target) return {std::move(w), true};
  }

  std::map<PartialInjection, GeneratorSpec> spec_of;
  for (const auto& s : set_G_specs(n)) spec_of.emplace(named(n, s), s);
  Word w{n, {}};
  for (std::size_t g : closure_of_g.word(*pos)) {
    auto it = spec_of.find(closure_of_g.generators()[g]);
    if (it == spec_of.end()) {
      throw Error(ErrorCode::NotSubset, "table generator outside G: " +
                                            to_string(closure_of_g.generators()[g]));
    }
    w.append(it->second);
  }
  return {std::move(w), false};
}

}  // namespace fencemonoid
