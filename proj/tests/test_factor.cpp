#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "fencemonoid/error.hpp"
#include "fencemonoid/factor.hpp"
#include "fencemonoid/fence.hpp"
#include "fencemonoid/generator_words.hpp"
#include "fencemonoid/genfam.hpp"
#include "oracles.hpp"

using namespace fencemonoid;
using G = GeneratorSpec;

namespace {

bool all_letters_high_rank(const Word& w) {
  return std::all_of(w.letters.begin(), w.letters.end(), [&](const Letter& l) {
    auto e = eval_letter(w.n, l);
    return in_if(e) && e.rank() >= w.n - 2;
  });
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

// Runs the align/fix loop by hand, checking each step and counting which
// alignment construction fired.
void drive(const PartialInjection& a, std::map<int, int>& align_cases, std::map<int, int>& fix_cases) {
  PartialInjection core = parity_normalize(a).core;
  int p = static_cast<int>(blocks(a.degree(), core.domain_set()).size());
  for (int i = 1; i <= p; ++i) {
    BlockForm form = BlockForm::of(core, i);
    Conjugators al = align_first_block(form);
    align_cases[al.construction]++;
    PartialInjection aligned = eval_word(al.left) * core * eval_word(al.right);
    ASSERT_EQ(aligned.rank(), core.rank());
    BlockForm next = BlockForm::of(aligned, i);
    for (int l = i + 1; l <= p; ++l) ASSERT_LT(next.pair(i).t(), next.pair(l).t()) << to_string(a);

    Conjugators fx = fix_first_block(next);
    fix_cases[fx.construction]++;
    PartialInjection fixed = eval_word(fx.left) * aligned * eval_word(fx.right);
    ASSERT_EQ(fixed.rank(), core.rank());
    BlockForm after = BlockForm::of(fixed, i);
    ASSERT_EQ(after.pair(i).domain, after.pair(i).image);
    ASSERT_FALSE(after.pair(i).reversed);
    core = fixed;
  }
  ASSERT_TRUE(core.is_partial_identity());
}

}  // namespace

TEST(Builders, ReversalExamples) {
  auto r = build_reversal(6, 2, 2);
  EXPECT_EQ(r.element, make(6, {{2, 4}, {3, 3}, {4, 2}, {6, 6}}));
  EXPECT_EQ(r.word.length(), 1u);
  EXPECT_EQ(eval_word(r.word), r.element);
  EXPECT_EQ(build_reversal(6, 1, 0).element, identity_on(6, {1, 3, 4, 5, 6}));
  EXPECT_EQ(code_of([] { build_reversal(6, 2, 1); }), ErrorCode::BadIndices);
  EXPECT_EQ(code_of([] { build_reversal(6, 4, 4); }), ErrorCode::BadIndices);
}

TEST(Builders, ReversalsAreInvolutions) {
  oracle::Sampler s(21);
  for (int t = 0; t < 100; ++t) {
    int n = s.uniform(1, 10);
    int m = s.uniform(1, n);
    int p = 2 * s.uniform(0, (n - m) / 2);
    auto r = build_reversal(n, m, p);
    EXPECT_TRUE(in_if(r.element));
    EXPECT_EQ(inverse(r.element), r.element);
    EXPECT_EQ(r.element * r.element, identity_on_set(n, r.element.domain_set()));
  }
}

TEST(Builders, ShiftExamples) {
  auto s2 = build_shift_word(8, ShiftKind::Shift2, 2, 2);
  EXPECT_EQ(s2.element, make(8, {{2, 4}, {3, 5}, {4, 6}, {8, 8}}));
  EXPECT_EQ(eval_word(s2.word), s2.element);
  EXPECT_EQ(s2.word.length(), 3u);  // two reversals and eps_m

  auto odd = build_shift_word(8, ShiftKind::Shift2, 2, 1);
  EXPECT_EQ(odd.word.length(), 2u);

  auto k1 = build_shift_word(8, ShiftKind::Shift2k, 2, 2, 1);
  EXPECT_EQ(k1.element, s2.element);

  auto rs = build_shift_word(6, ShiftKind::RevShift, 1, 1);
  EXPECT_EQ(rs.element, make(6, {{1, 3}, {2, 2}, {5, 5}, {6, 6}}));
  EXPECT_EQ(eval_word(rs.word), rs.element);

  EXPECT_EQ(code_of([] { build_shift_word(6, ShiftKind::RevShift, 1, 2); }), ErrorCode::KindMismatch);
  EXPECT_EQ(code_of([] { build_shift_word(6, ShiftKind::RevShiftEven, 1, 1, 1); }), ErrorCode::KindMismatch);
  EXPECT_EQ(code_of([] { build_shift_word(6, ShiftKind::Shift2, 3, 2); }), ErrorCode::BadIndices);
  EXPECT_EQ(code_of([] { build_shift_word(6, ShiftKind::Shift2k, 1, 0, 0); }), ErrorCode::BadIndices);
}

// Every valid parameter choice up to n = 10: words evaluate to their
// targets, targets are in IF_n, and inverted words give inverses.
TEST(BuildersProperty, AllKindsAllParameters) {
  int checked = 0;
  for (int n = 1; n <= 10; ++n) {
    for (ShiftKind kind : {ShiftKind::Shift2, ShiftKind::Shift2k, ShiftKind::RevShift, ShiftKind::RevShift2k,
                           ShiftKind::RevShiftEven}) {
      for (int m = 1; m <= n; ++m) {
        for (int p = 0; m + p <= n; ++p) {
          for (int k = 1; k <= n / 2; ++k) {
            BuiltElement b;
            try {
              b = build_shift_word(n, kind, m, p, k);
            } catch (const Error&) {
              continue;
            }
            ++checked;
            ASSERT_TRUE(in_if(b.element));
            ASSERT_EQ(eval_word(b.word), b.element);
            ASSERT_TRUE(all_letters_high_rank(b.word));
            ASSERT_EQ(eval_word(inverse_word(b.word)), inverse(b.element));
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Builders, PartialIdentityWord) {
  EXPECT_TRUE(partial_identity_word(6, 0).empty());
  EXPECT_EQ(to_string(partial_identity_word(6, PointSet{1} << 3)), "w6: eps:3");
  auto w = partial_identity_word(6, (PointSet{1} << 1) | (PointSet{1} << 4));
  EXPECT_EQ(to_string(w), "w6: eps:1 eps:4");
  EXPECT_EQ(eval_word(w), identity_on(6, {2, 3, 5, 6}));
  EXPECT_EQ(code_of([] { partial_identity_word(3, PointSet{1} << 4); }), ErrorCode::OutOfRange);
}

TEST(ParityNormalize, Examples) {
  auto a = make(6, {{4, 1}});
  EXPECT_EQ(parity_mismatches(a), 1);
  auto pn = parity_normalize(a);
  EXPECT_EQ(parity_mismatches(pn.core), 0);
  EXPECT_EQ(pn.left.length(), 1u);
  EXPECT_TRUE(pn.right.empty());
  EXPECT_EQ(pn.core, eval_word(pn.left) * a * eval_word(pn.right));

  auto matching = make(6, {{1, 3}, {2, 2}, {5, 5}});
  auto same = parity_normalize(matching);
  EXPECT_TRUE(same.left.empty() && same.right.empty());
  EXPECT_EQ(same.core, matching);

  auto none = parity_normalize(make(6, {}));
  EXPECT_TRUE(none.left.empty() && none.right.empty());

  EXPECT_THROW(parity_normalize(make(6, {{1, 3}, {2, 2}, {4, 6}, {5, 5}, {6, 4}})), Error);
}

TEST(ParityNormalizeProperty, RecoverableAndDecreasing) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : build(n, Kind::IF)) {
      auto pn = parity_normalize(a);
      ASSERT_EQ(parity_mismatches(pn.core), 0);
      PartialInjection l = eval_word(pn.left);
      PartialInjection r = eval_word(pn.right);
      ASSERT_EQ(pn.core, l * a * r);
      ASSERT_EQ(a.domain_set() & ~l.image_set(), 0u);
      ASSERT_EQ(a.image_set() & ~r.domain_set(), 0u);
      ASSERT_EQ(inverse(l) * pn.core * inverse(r), a);
      ASSERT_EQ(static_cast<int>(pn.left.length() + pn.right.length()), parity_mismatches(a));
      // One letter per mismatch, each removing exactly one.
      PartialInjection step = a;
      int count = parity_mismatches(a);
      for (auto it = pn.left.letters.rbegin(); it != pn.left.letters.rend(); ++it) {
        step = eval_letter(n, *it) * step;
        ASSERT_EQ(parity_mismatches(step), --count);
      }
      for (const auto& letter : pn.right.letters) {
        step = step * eval_letter(n, letter);
        ASSERT_EQ(parity_mismatches(step), --count);
      }
    }
  }
}

TEST(BlockForm, Validation) {
  auto id = PartialInjection::identity(4);
  EXPECT_NO_THROW(BlockForm::of(id, 1));
  EXPECT_EQ(code_of([] { BlockForm::of(make(6, {{4, 1}}), 1); }), ErrorCode::MalformedBlockForm);
  // Block 1 not fixed, so i = 2 is malformed.
  auto a = make(6, {{1, 5}, {3, 1}});
  EXPECT_EQ(code_of([&] { BlockForm::of(a, 2); }), ErrorCode::MalformedBlockForm);
  auto form = BlockForm::of(a, 1);
  EXPECT_EQ(form.block_count(), 2);
  EXPECT_EQ(form.pair(1).t(), 5);
  EXPECT_EQ(form.pair(2).t(), 1);
}

TEST(Align, AlreadyAligned) {
  auto a = make(6, {{1, 1}, {3, 5}});
  auto c = align_first_block(BlockForm::of(a, 1));
  EXPECT_EQ(c.construction, 0);
  EXPECT_TRUE(c.left.empty() && c.right.empty());
}

TEST(Align, CaseOne) {
  // r_1 = 1 and s_2 = 3 have the same parity.
  auto a = make(6, {{1, 5}, {3, 1}});
  auto c = align_first_block(BlockForm::of(a, 1));
  EXPECT_EQ(c.construction, 1);
  EXPECT_TRUE(c.right.empty());
  ASSERT_EQ(c.left.length(), 1u);
  EXPECT_EQ(eval_word(c.left), build_reversal(6, 1, 2).element);
  auto b = eval_word(c.left) * a;
  auto form = BlockForm::of(b, 1);
  EXPECT_EQ(form.pair(1).t(), 1);
}

TEST(Fix, AlreadyFixed) {
  auto a = make(6, {{1, 1}, {2, 2}, {6, 4}});
  auto c = fix_first_block(BlockForm::of(a, 1));
  EXPECT_EQ(c.construction, 0);
  EXPECT_TRUE(c.left.empty() && c.right.empty());
}

TEST(Fix, PreservingMoveOnTheLeft) {
  // Block {3,4} maps onto {1,2} in order: r = 3 > t = 1.
  auto a = make(6, {{3, 1}, {4, 2}});
  auto c = fix_first_block(BlockForm::of(a, 1));
  EXPECT_EQ(c.construction, 1);
  EXPECT_TRUE(c.right.empty());
  // A left factor moves the domain block onto its image.
  auto b = eval_word(c.left) * a * eval_word(c.right);
  EXPECT_EQ(b, identity_on(6, {1, 2}));
}

TEST(Fix, ReversedOddLengthGap) {
  // Block {1,2} reversed onto {2,3}: r = 1 < t = 2, p = 1 odd.
  auto a = make(6, {{1, 3}, {2, 2}});
  auto c = fix_first_block(BlockForm::of(a, 1));
  EXPECT_EQ(c.construction, 2);
  auto b = eval_word(c.left) * a * eval_word(c.right);
  EXPECT_EQ(b, identity_on(6, {1, 2}));
}

// Every construction is reached somewhere in IF_n, n <= 9, and every step's
// postcondition holds along the way.
TEST(FactorProperty, CaseCoverage) {
  std::map<int, int> align_cases;
  std::map<int, int> fix_cases;
  for (int n = 1; n <= 9; ++n) {
    for (const auto& a : build(n, Kind::IF)) {
      drive(a, align_cases, fix_cases);
      if (HasFatalFailure()) return;
    }
  }
  for (int c : {0, 1, 2, 3, 4, 5, 6, 71, 72}) EXPECT_GT(align_cases[c], 0) << "align case " << c;
  for (int c : {0, 1, 2}) EXPECT_GT(fix_cases[c], 0) << "fix case " << c;
}

TEST(Factorize, Examples) {
  Factorizer f(6);
  auto id = f.factorize_j(PartialInjection::identity(6));
  EXPECT_TRUE(id.word.empty());
  auto high = make(6, {{1, 3}, {2, 2}, {3, 1}, {5, 5}});
  auto w = f.factorize_j(high);
  EXPECT_EQ(w.word.length(), 1u);
  EXPECT_EQ(eval_word(w.word), high);
  EXPECT_THROW(f.factorize_j(make(6, {{1, 3}, {2, 2}, {4, 6}, {5, 5}, {6, 4}})), Error);
  EXPECT_THROW(f.factorize_j(make(5, {})), Error);

  auto g = f.factorize_g(named(6, G::eps(4)));
  EXPECT_EQ(to_string(g.word), "w6: gam:4 gam:4");
  auto gid = f.factorize_g(PartialInjection::identity(6));
  EXPECT_TRUE(gid.word.empty() || to_string(gid.word) == "w6: id");

  Factorizer odd(5);
  EXPECT_EQ(code_of([&] { odd.factorize_g(PartialInjection::identity(5)); }), ErrorCode::OddAmbient);
}

TEST(FactorProperty, JSoundExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    Factorizer f(n);
    for (const auto& a : build(n, Kind::IF)) {
      auto w = f.factorize_j(a);
      ASSERT_EQ(eval_word(w.word), a) << to_string(a);
      ASSERT_TRUE(all_letters_high_rank(w.word));
      // The constructive path alone, with no one-letter shortcut.
      auto full = f.constructive_j(a, false);
      ASSERT_TRUE(full.has_value()) << to_string(a);
      ASSERT_EQ(eval_word(*full), a);
      ASSERT_TRUE(all_letters_high_rank(*full));
    }
    EXPECT_EQ(f.fallback_count(), 0u) << n;
  }
}

TEST(FactorProperty, JSoundSampledSeven) {
  auto s = build(7, Kind::IF);
  Factorizer f(7);
  oracle::Sampler rng(7);
  for (int i = 0; i < 10000; ++i) {
    const auto& a = rng.pick(s.elements());
    auto w = f.constructive_j(a, false);
    ASSERT_TRUE(w.has_value());
    ASSERT_EQ(eval_word(*w), a);
    ASSERT_TRUE(all_letters_high_rank(*w));
  }
}

TEST(FactorProperty, GSoundExhaustive) {
  for (int n : {2, 4, 6}) {
    Factorizer f(n);
    auto specs = set_G_specs(n);
    for (const auto& a : build(n, Kind::IF)) {
      auto w = f.factorize_g(a);
      ASSERT_EQ(eval_word(w.word), a);
      for (const auto& l : w.word.letters) {
        ASSERT_TRUE(std::holds_alternative<G>(l));
        ASSERT_NE(std::find(specs.begin(), specs.end(), std::get<G>(l)), specs.end());
      }
    }
  }
}

TEST(FactorizeBfs, Examples) {
  auto g6 = closure_of_g(6);
  for (const auto& g : g6.generators()) {
    auto w = factorize_bfs(g6, g);
    ASSERT_EQ(w.length(), 1u);
    EXPECT_EQ(eval_word(w), g);
  }
  EXPECT_EQ(factorize_bfs(g6, named(6, G::eps(2))).length(), 2u);
  auto g4 = closure_of_g(4);
  for (const auto& a : build(4, Kind::IF)) EXPECT_EQ(eval_word(factorize_bfs(g4, a)), a);
  EXPECT_THROW(factorize_bfs(g4, make(4, {{1, 2}, {2, 1}})), Error);
}

// The identity table misses only the shift 1 -> n-2 and its inverse, whose
// identity would need del:n-1; those letters come from the closure of G.
TEST(FactorProperty, GTableMissesOnlyTopShift) {
  for (int n : {4, 6, 8}) {
    PartialInjectionBuilder b(n);
    b.set(1, n - 2);
    for (int x = 3; x <= n - 2; ++x) b.set(x, x - 2);
    b.set(n, n);
    const PartialInjection top = b.value();
    Factorizer f(n);
    const auto& g = f.g_closure();
    for (const auto& a : build(n, Kind::IF)) {
      auto w = f.constructive_j(a, false);
      ASSERT_TRUE(w.has_value());
      for (const auto& letter : w->letters) {
        auto e = eval_letter(n, letter);
        if (!g_word_for(n, e, g).from_identity_table) {
          ASSERT_TRUE(e == top || e == inverse(top)) << to_string(e);
        }
      }
    }
  }
}
