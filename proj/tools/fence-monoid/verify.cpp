#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "fencemonoid/error.hpp"
#include "fencemonoid/fence.hpp"
#include "fencemonoid/genfam.hpp"

namespace fencemonoid::cli {

namespace {

constexpr int kPairwiseGuard = 6;
constexpr int kRegularGuard = 7;

void require_even(int n, Claim c) {
  if (n % 2 != 0) {
    throw Error(ErrorCode::OddAmbient, std::string(to_string(c)) + " is stated for even n, got " + std::to_string(n));
  }
}

void require_at_most(int n, int limit, Claim c) {
  if (n > limit) {
    throw Error(ErrorCode::TooLarge, std::string(to_string(c)) + " runs up to n=" + std::to_string(limit));
  }
}

Json element_list(const std::vector<PartialInjection>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<PartialInjection> sorted(std::vector<PartialInjection> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

// First element of `s` missing from `c`, if any.
std::optional<PartialInjection> first_missing(const SemigroupTable& s, const SemigroupTable& c) {
  for (const auto& a : s) {
    if (!c.contains(a)) return a;
  }
  return std::nullopt;
}

bool check_generated(const SemigroupTable& s, const std::vector<PartialInjection>& gens, Json& result,
                     std::ostream& text) {
  ClosureOptions opts;
  opts.record_words = false;
  SemigroupTable c = closure(s.degree(), gens, opts);
  result["generators"] = gens.size();
  result["closure_size"] = c.size();
  result["target_size"] = s.size();
  text << "generators " << gens.size() << ", closure " << c.size() << ", target " << s.size() << "\n";
  auto missing = first_missing(s, c);
  if (missing) {
    result["counterexample"] = to_string(*missing);
    text << "outside the closure: " << to_string(*missing) << "\n";
  }
  return !missing && c.size() == s.size();
}

}  // namespace

Claim parse_claim(std::string_view text) {
  static const std::map<std::string_view, Claim> names{
      {"thm1", Claim::Thm1},     {"thm2", Claim::Thm2},   {"least", Claim::Least},
      {"rank", Claim::Rank},     {"odd-neg", Claim::OddNeg}, {"jcrit", Claim::JCrit},
      {"regular", Claim::Regular},
  };
  auto it = names.find(text);
  if (it == names.end()) throw Error(ErrorCode::Parse, "unknown claim '" + std::string(text) + "'");
  return it->second;
}

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::Thm1: return "thm1";
    case Claim::Thm2: return "thm2";
    case Claim::Least: return "least";
    case Claim::Rank: return "rank";
    case Claim::OddNeg: return "odd-neg";
    case Claim::JCrit: return "jcrit";
    case Claim::Regular: return "regular";
  }
  return "?";
}

CommandResult cmd_verify(int n, Claim claim, const Common& common) {
  auto start = std::chrono::steady_clock::now();
  CommandResult r;
  r.command = "verify";
  r.n = n;
  r.params["claim"] = to_string(claim);

  if (claim == Claim::Thm2 || claim == Claim::Least || claim == Claim::Rank) require_even(n, claim);
  if (claim == Claim::OddNeg && n % 2 == 0) {
    throw Error(ErrorCode::BadIndex, "odd-neg is stated for odd n, got " + std::to_string(n));
  }
  if (claim == Claim::JCrit) require_at_most(n, kPairwiseGuard, claim);
  if (claim == Claim::Regular) require_at_most(n, kRegularGuard, claim);

  std::ostringstream text;
  text << "claim " << to_string(claim) << ", n=" << n << "\n";
  bool ok = true;
  switch (claim) {
    case Claim::Thm1: {
      SemigroupTable s = load_table(n, Kind::IF, common);
      ok = check_generated(s, set_J(n), r.result, text);
      break;
    }
    case Claim::Thm2: {
      SemigroupTable s = load_table(n, Kind::IF, common);
      ok = check_generated(s, set_G(n), r.result, text);
      break;
    }
    case Claim::Least: {
      SemigroupTable s = load_table(n, Kind::IF, common);
      auto least = least_generating_set(s);
      auto g = sorted(set_G(n));
      r.result["expected"] = element_list(g);
      if (least) {
        auto found = sorted(*least);
        r.result["least_generating_set"] = element_list(found);
        ok = found == g;
        text << "least generating set of size " << found.size() << (ok ? " equals G" : " differs from G") << "\n";
      } else {
        r.result["least_generating_set"] = nullptr;
        ok = false;
        text << "no least generating set\n";
      }
      break;
    }
    case Claim::Rank: {
      SemigroupTable s = load_table(n, Kind::IF, common);
      SemigroupRank rank = semigroup_rank(s);
      r.result["exact"] = rank.exact;
      r.result["lower"] = rank.lower;
      r.result["upper"] = rank.upper;
      r.result["expected"] = n + 1;
      ok = rank.exact && rank.lower == static_cast<std::size_t>(n + 1);
      if (rank.exact) text << "rank = " << rank.lower << "\n";
      else text << "rank in [" << rank.lower << ", " << rank.upper << "]\n";
      break;
    }
    case Claim::OddNeg: {
      SemigroupTable s = load_table(n, Kind::IF, common);
      auto high = elements_of_rank_at_least(s, n - 1);
      bool generates = check_generated(s, high, r.result, text);
      auto least = least_generating_set(s);
      r.result["high_rank_generates"] = generates;
      r.result["least_generating_set_exists"] = least.has_value();
      r.result["irreducibles"] = irreducibles(s).size();
      text << "rank >= n-1 elements generate: " << (generates ? "true" : "false") << "\n"
           << "least generating set exists: " << (least ? "true" : "false") << "\n";
      ok = !generates && !least;
      break;
    }
    case Claim::JCrit: {
      // Group by principal two-sided ideal (the oracle's J-classes) and by
      // invariant; the criterion holds on all pairs iff the partitions agree.
      SemigroupTable s = load_table(n, Kind::IF, common);
      std::map<std::vector<bool>, std::size_t> by_ideal;
      std::map<JInvariant, std::size_t> by_invariant;
      std::vector<std::size_t> ideal_class(s.size());
      std::vector<std::size_t> inv_class(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto ideal = principal_ideals(s, s[i]).two_sided;
        ideal_class[i] = by_ideal.try_emplace(std::move(ideal), by_ideal.size()).first->second;
        inv_class[i] = by_invariant.try_emplace(j_invariant(s[i]), by_invariant.size()).first->second;
      }
      std::map<std::size_t, std::size_t> inv_of_ideal;
      std::map<std::size_t, std::size_t> ideal_of_inv;
      for (std::size_t i = 0; i < s.size() && ok; ++i) {
        auto [a, fresh_a] = inv_of_ideal.try_emplace(ideal_class[i], inv_class[i]);
        auto [b, fresh_b] = ideal_of_inv.try_emplace(inv_class[i], ideal_class[i]);
        if (a->second != inv_class[i] || b->second != ideal_class[i]) {
          ok = false;
          r.result["counterexample"] = to_string(s[i]);
        }
      }
      r.result["pairs"] = s.size() * s.size();
      r.result["oracle_classes"] = by_ideal.size();
      r.result["invariant_classes"] = by_invariant.size();
      text << s.size() * s.size() << " ordered pairs, " << by_ideal.size() << " oracle classes, "
           << by_invariant.size() << " invariant classes\n";
      break;
    }
    case Claim::Regular: {
      SemigroupTable pfi = load_table(n, Kind::PFI, common);
      std::size_t regular = 0;
      for (const auto& a : pfi) {
        bool is_regular = std::any_of(pfi.begin(), pfi.end(), [&](const auto& x) { return a * x * a == a; });
        if (!is_regular) continue;
        ++regular;
        if (!in_if(a) && ok) {
          ok = false;
          r.result["counterexample"] = to_string(a);
        }
      }
      r.result["pfi_size"] = pfi.size();
      r.result["regular"] = regular;
      text << pfi.size() << " elements of PFI_" << n << ", " << regular << " regular\n";
      break;
    }
  }
  r.status = ok ? Status::Ok : Status::Violation;
  r.result["holds"] = ok;
  text << (ok ? "ok" : "VIOLATION") << "\n";
  r.text = text.str();
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace fencemonoid::cli
