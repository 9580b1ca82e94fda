#include <gtest/gtest.h>

#include <algorithm>

#include "fencemonoid/enumerate.hpp"
#include "fencemonoid/error.hpp"
#include "fencemonoid/fence.hpp"
#include "fencemonoid/generator_words.hpp"
#include "fencemonoid/genfam.hpp"
#include "fencemonoid/word.hpp"

using namespace fencemonoid;
using G = GeneratorSpec;

TEST(Genfam, NamedExamples) {
  // 1 -> n and x -> x - 2 on 3..n.
  EXPECT_EQ(named(6, G::sig1()), make(6, {{1, 6}, {3, 1}, {4, 2}, {5, 3}, {6, 4}}));
  EXPECT_EQ(named(6, G::sig2()), inverse(named(6, G::sig1())));
  EXPECT_EQ(named(6, G::gam(4)), make(6, {{1, 3}, {2, 2}, {3, 1}, {5, 5}, {6, 6}}));
  EXPECT_EQ(named(6, G::del(1)), make(6, {{2, 6}, {3, 5}, {4, 4}, {5, 3}, {6, 2}}));
  EXPECT_EQ(named(6, G::eps(3)), identity_on(6, {1, 2, 4, 5, 6}));
  EXPECT_EQ(named(6, G::beta(1, 5)), make(6, {{2, 4}, {3, 3}, {4, 2}, {6, 6}}));
  EXPECT_TRUE(named(5, G::id()).is_identity());
}

TEST(Genfam, IndexConstraints) {
  EXPECT_THROW(named(6, G::gam(2)), Error);
  EXPECT_THROW(named(6, G::gam(5)), Error);
  EXPECT_THROW(named(6, G::del(5)), Error);
  EXPECT_THROW(named(6, G::del(2)), Error);
  EXPECT_THROW(named(6, G::beta(1, 4)), Error);
  EXPECT_THROW(named(6, G::eps(7)), Error);
  try {
    named(5, G::sig1());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddAmbient);
  }
  EXPECT_FALSE(valid_for(6, G::del(5)));
  EXPECT_TRUE(valid_for(6, G::del(3)));
}

TEST(Genfam, SpecText) {
  for (const auto& s : {G::id(), G::eps(3), G::sig1(), G::sig2(), G::gam(4), G::del(1), G::beta(2, 6)}) {
    EXPECT_EQ(parse_generator_spec(to_string(s)), s);
  }
  EXPECT_EQ(to_string(G::beta(2, 6)), "beta:2,6");
  EXPECT_THROW(parse_generator_spec("gam"), Error);
  EXPECT_THROW(parse_generator_spec("foo:1"), Error);
}

TEST(Genfam, InversesAndMembership) {
  for (int n = 2; n <= 10; n += 2) {
    EXPECT_EQ(inverse(named(n, G::sig2())), named(n, G::sig1()));
    for (const auto& spec : set_G_specs(n)) {
      auto a = named(n, spec);
      EXPECT_TRUE(in_if(a)) << to_string(spec);
      if (spec.family == Family::Gamma || spec.family == Family::Delta) EXPECT_EQ(inverse(a), a);
    }
  }
  for (int n = 1; n <= 9; ++n) {
    for (int i = 1; i <= n; ++i) EXPECT_TRUE(in_if(named(n, G::eps(i))));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 2; j <= n; j += 2) EXPECT_TRUE(in_if(named(n, G::beta(i, j))));
    }
  }
}

TEST(Genfam, SetJ) {
  auto j2 = set_J(2);
  EXPECT_EQ(j2.size(), 6u);
  for (int n = 1; n <= 7; ++n) {
    auto j = set_J(n);
    auto s = build(n, Kind::IF);
    std::vector<PartialInjection> want;
    for (const auto& a : s) {
      if (a.rank() >= n - 2) want.push_back(a);
    }
    std::sort(j.begin(), j.end());
    EXPECT_EQ(j, want) << n;
    for (int i = 1; i <= n; ++i) EXPECT_TRUE(std::binary_search(j.begin(), j.end(), named(n, G::eps(i))));
  }
  auto j6 = set_J(6);
  std::sort(j6.begin(), j6.end());
  EXPECT_TRUE(std::binary_search(j6.begin(), j6.end(), make(6, {{2, 4}, {3, 3}, {4, 2}, {6, 6}})));
}

TEST(Genfam, SetG) {
  EXPECT_EQ(set_G(6).size(), 7u);
  auto g2 = set_G_specs(2);
  EXPECT_EQ(g2, (std::vector<G>{G::id(), G::sig1(), G::sig2()}));
  EXPECT_THROW(set_G(5), Error);
  for (int n : {2, 4, 6, 8}) EXPECT_EQ(set_G(n).size(), static_cast<std::size_t>(n + 1));
}

TEST(Genfam, IdentityTable) {
  // Each identity of the table, wherever all of its indices are in range.
  for (int n : {4, 6, 8}) {
    auto ev = [&](std::initializer_list<G> letters) {
      Word w{n, {}};
      for (const auto& g : letters) w.append(g);
      return eval_word(w);
    };
    for (int i = 4; i <= n; i += 2) EXPECT_EQ(ev({G::gam(i), G::gam(i)}), named(n, G::eps(i)));
    for (int i = 1; i <= n - 3; i += 2) EXPECT_EQ(ev({G::del(i), G::del(i)}), named(n, G::eps(i)));
    EXPECT_EQ(ev({G::sig1(), G::sig2()}), named(n, G::eps(2)));
    EXPECT_EQ(ev({G::sig2(), G::sig1()}), named(n, G::eps(n - 1)));
    for (int a = 2; a + 1 <= n - 3; a += 2) {
      PartialInjectionBuilder b(n);
      b.set(1, a);
      for (int x = 3; x <= a; ++x) b.set(x, x - 2);
      for (int x = a + 2; x <= n; ++x) b.set(x, x);
      EXPECT_EQ(ev({G::del(a + 1), G::sig1(), G::del(a - 1)}), b.value()) << n << " " << a;
      EXPECT_EQ(ev({G::del(a - 1), G::sig2(), G::del(a + 1)}), inverse(b.value()));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 2; j <= n; j += 2) {
        if (i % 2 == 1 && n - j + i + 1 <= n - 3) {
          EXPECT_EQ(ev({G::del(i), G::del(n - j + i + 1), G::del(i)}), named(n, G::beta(i, j)));
        }
        if (i % 2 == 0 && j - i >= 4) {
          EXPECT_EQ(ev({G::gam(j), G::gam(j - i), G::gam(j)}), named(n, G::beta(i, j)));
        }
      }
    }
  }
}

TEST(Genfam, GWordExamples) {
  auto c6 = closure_of_g(6);
  auto eps4 = g_word_for(6, named(6, G::eps(4)), c6);
  EXPECT_TRUE(eps4.from_identity_table);
  EXPECT_EQ(to_string(eps4.word), "w6: gam:4 gam:4");
  EXPECT_EQ(to_string(g_word_for(6, named(6, G::eps(2)), c6).word), "w6: sig1 sig2");
  EXPECT_EQ(to_string(g_word_for(6, named(6, G::beta(1, 5)), c6).word), "w6: del:1 del:3 del:1");
  EXPECT_THROW(g_word_for(5, named(5, G::eps(1)), c6), Error);
}

TEST(Genfam, GWordsEvaluateEverywhere) {
  for (int n : {2, 4, 6}) {
    auto c = closure_of_g(n);
    auto g = set_G_specs(n);
    for (const auto& a : build(n, Kind::IF)) {
      auto w = g_word_for(n, a, c);
      ASSERT_EQ(eval_word(w.word), a);
      for (const auto& l : w.word.letters) {
        ASSERT_TRUE(std::holds_alternative<G>(l));
        ASSERT_NE(std::find(g.begin(), g.end(), std::get<G>(l)), g.end());
      }
    }
  }
}

TEST(Genfam, IfMapsBetween) {
  auto maps = if_maps_between(6, (PointSet{1} << 1) | (PointSet{1} << 2), (PointSet{1} << 5) | (PointSet{1} << 6));
  for (const auto& a : maps) EXPECT_TRUE(in_if(a));
  EXPECT_FALSE(maps.empty());
}
