#include <gtest/gtest.h>

#include <random>

#include "crossprod/groups.hpp"

using namespace crossprod;
using Element = QuasiLatticeOrder::Element;

namespace {

ReducedWord random_word(int n, std::size_t maxLen, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, maxLen);
  std::uniform_int_distribution<int> letter(1, n);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> l(len(rng));
  for (auto& x : l) x = sign(rng) ? letter(rng) : -letter(rng);
  return make_word(l, n);
}

bool is_reduced(const ReducedWord& w) {
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (w.letters[i] == -w.letters[i - 1]) return false;
  return true;
}

}  // namespace

TEST(ParseWord, CancelsInversePair) { EXPECT_EQ(parse_word("g1*g1^-1*g2", 2).letters, (std::vector<int>{2})); }

TEST(ParseWord, EmptyIsIdentity) { EXPECT_TRUE(parse_word("", 2).is_identity()); }

TEST(ParseWord, InnerPairCancels) { EXPECT_EQ(parse_word("g1*g2*g2^-1*g1", 2).letters, (std::vector<int>{1, 1})); }

TEST(ParseWord, RejectsBadInput) {
  EXPECT_THROW(parse_word("g3", 2), ParseError);
  EXPECT_THROW(parse_word("g1**g2", 2), ParseError);
  EXPECT_THROW(parse_word("h1", 2), ParseError);
}

TEST(ParseWord, FormatRoundTrip) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const auto w = random_word(3, 6, rng);
    const auto text = format_word(w);
    EXPECT_EQ(parse_word(text == "e" ? "" : text, 3), w);
  }
}

TEST(ReducedWord, ReducingTwiceIsNoOp) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const auto w = random_word(2, 10, rng);
    EXPECT_TRUE(is_reduced(w));
    EXPECT_EQ(reduce_letters(w.letters), w.letters);
  }
}

TEST(WordMultiply, InverseGivesDepthTwo) {
  const auto r = word_multiply(make_word({1, 2}, 3), make_word({-2, -1}, 3));
  EXPECT_TRUE(r.word.is_identity());
  EXPECT_EQ(r.depth, 2u);
}

TEST(WordMultiply, NoCancellation) {
  const auto r = word_multiply(make_word({1}, 3), make_word({2}, 3));
  EXPECT_EQ(r.word.letters, (std::vector<int>{1, 2}));
  EXPECT_EQ(r.depth, 0u);
}

TEST(WordMultiply, PartialCancellation) {
  const auto r = word_multiply(make_word({1, 2}, 3), make_word({-2, 3}, 3));
  EXPECT_EQ(r.word.letters, (std::vector<int>{1, 3}));
  EXPECT_EQ(r.depth, 1u);
}

TEST(WordMultiply, PropertyAssociative) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 500; ++k) {
    const auto a = random_word(2, 8, rng), b = random_word(2, 8, rng), c = random_word(2, 8, rng);
    EXPECT_EQ(word_multiply(word_multiply(a, b).word, c).word, word_multiply(a, word_multiply(b, c).word).word);
  }
}

TEST(WordMultiply, PropertyInverse) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    const auto a = random_word(3, 8, rng);
    const auto r = word_multiply(a, word_inverse(a));
    EXPECT_TRUE(r.word.is_identity());
    EXPECT_EQ(r.depth, a.length());
  }
}

TEST(EnumerateWords, CountsMatchFormula) {
  // 1 + 2n * sum_{k<L} (2n-1)^k
  EXPECT_EQ(enumerate_words(2, 0).size(), 1u);
  EXPECT_EQ(enumerate_words(2, 1).size(), 5u);
  EXPECT_EQ(enumerate_words(2, 2).size(), 17u);
  EXPECT_EQ(enumerate_words(2, 3).size(), 53u);
  EXPECT_EQ(enumerate_words(1, 4).size(), 9u);
}

TEST(FiniteGroup, RejectsNonGroupTable) {
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}), std::invalid_argument);
}

TEST(FiniteGroup, CyclicInverses) {
  const auto g = FiniteGroup::cyclic(5);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(g.multiply(i, g.inverse(i)), g.identity());
}

TEST(GroupWindow, FreeWindowSizeAndProducts) {
  const auto G = GroupWindow::free(2, 2);
  EXPECT_EQ(G.size(), 17u);
  const auto a = G.parse("g1"), b = G.parse("g2");
  EXPECT_EQ(G.label(*G.multiply(a, b)), format_word(make_word({1, 2}, 2)));
  EXPECT_FALSE(G.multiply(*G.multiply(a, b), a).has_value());
  EXPECT_EQ(*G.multiply(a, G.inverse(a)), G.identity());
}

TEST(GroupWindow, IntegerWindow) {
  const auto G = GroupWindow::integers(3);
  EXPECT_EQ(G.size(), 7u);
  const auto two = *G.find(make_word({1, 1}, 1));
  EXPECT_EQ(G.integer(two), 2);
  EXPECT_EQ(G.integer(G.inverse(two)), -2);
}

TEST(Join, ZkComponentwiseMax) {
  const ZkNk q(2);
  EXPECT_EQ(*q.join({1, 0}, {0, 2}), (Element{1, 2}));
}

TEST(Join, FreeMonoidPrefix) {
  const FreeMonoid q(3);
  EXPECT_EQ(*q.join(q.from_letters("ab"), q.from_letters("abc")), q.from_letters("abc"));
  const FreeMonoid q2(2);
  EXPECT_FALSE(q2.join(q2.from_letters("ab"), q2.from_letters("ba")).has_value());
}

TEST(Join, FreeMonoidBruteForce) {
  // "abc" is the least of all common upper bounds of length <= 4; "ab","ba" have none up to length 6
  const FreeMonoid q(3);
  const auto ab = q.from_letters("ab"), abc = q.from_letters("abc"), ba = q.from_letters("ba");
  for (const auto& w : q.cone_window(4))
    if (q.leq(ab, w) && q.leq(abc, w)) EXPECT_TRUE(q.leq(abc, w));
  const FreeMonoid q2(2);
  for (const auto& w : q2.cone_window(6)) EXPECT_FALSE(q2.leq(ab, w) && q2.leq(ba, w));
}

TEST(Join, PropertyLaws) {
  for (const char* name : {"z2n2", "free2"}) {
    const auto q = make_qlo(name);
    const auto cone = q->cone_window(3);
    for (const auto& p : cone) {
      EXPECT_EQ(*q->join(p, p), p);
      for (const auto& r : cone) {
        const auto j = q->join(p, r);
        EXPECT_EQ(j, q->join(r, p));
        if (!j) continue;
        EXPECT_TRUE(q->leq(p, *j));
        EXPECT_TRUE(q->leq(r, *j));
        for (const auto& u : q->cone_window(4))
          if (q->leq(p, u) && q->leq(r, u)) EXPECT_TRUE(q->leq(*j, u));
      }
    }
  }
}

TEST(Join, ZkAlwaysExists) {
  const auto q = make_qlo("z3n3");
  const auto cone = q->cone_window(2);
  for (const auto& p : cone)
    for (const auto& r : cone) EXPECT_TRUE(q->join(p, r).has_value());
}

TEST(Join, FoldOverList) {
  const ZkNk q(2);
  EXPECT_EQ(*join_all(q, {{1, 0}, {0, 2}, {2, 1}}), (Element{2, 2}));
  const FreeMonoid f(2);
  EXPECT_FALSE(join_all(f, {f.from_letters("a"), f.from_letters("ab"), f.from_letters("b")}).has_value());
}

TEST(SigmaTau, Examples) {
  const ZkNk z1(1), z2(2);
  const auto st1 = *z1.sigma_tau({-2});
  EXPECT_EQ(st1.first, (Element{0}));
  EXPECT_EQ(st1.second, (Element{2}));
  const auto st2 = *z2.sigma_tau({1, -2});
  EXPECT_EQ(st2.first, (Element{1, 0}));
  EXPECT_EQ(st2.second, (Element{0, 2}));
}

TEST(SigmaTau, ConeElementIsItsOwnSigma) {
  for (const char* name : {"z1n1", "z2n2", "free2"}) {
    const auto q = make_qlo(name);
    for (const auto& p : q->cone_window(3)) {
      const auto st = *q->sigma_tau(p);
      EXPECT_EQ(st.first, p);
      EXPECT_EQ(st.second, q->identity());
    }
  }
}

TEST(SigmaTau, FreeMonoidOutsidePPinv) {
  const FreeMonoid q(2);
  EXPECT_FALSE(q.sigma_tau({-1, 2}).has_value());
}

TEST(SigmaTau, PropertyReconstructs) {
  for (const char* name : {"z2n2", "z3n3", "free2"}) {
    const auto q = make_qlo(name);
    for (const auto& s : q->group_window(3)) {
      const auto st = q->sigma_tau(s);
      if (!st) continue;
      EXPECT_EQ(q->multiply(st->first, q->inverse(st->second)), s);
      EXPECT_TRUE(q->in_cone(st->first));
      EXPECT_TRUE(q->in_cone(st->second));
    }
  }
}

TEST(QuasiLattice, ConeMeetsInverseOnlyAtIdentity) {
  for (const char* name : {"z2n2", "free3"}) {
    const auto q = make_qlo(name);
    for (const auto& p : q->cone_window(3))
      if (q->in_cone(q->inverse(p))) EXPECT_EQ(p, q->identity());
  }
}

TEST(QuasiLattice, UnknownNameThrows) { EXPECT_THROW(make_qlo("z0n0"), std::invalid_argument); }
