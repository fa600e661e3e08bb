#include <gtest/gtest.h>

#include <random>

#include "hydra/words.hpp"
#include "support/oracles.hpp"

namespace hydra {
namespace {

TEST(Words, ParseAndPrint) {
  FreeWord w = parse_free_word("a2^4 a1^-2 a3");
  EXPECT_EQ(w.size(), 7u);
  EXPECT_EQ(format(w), "a2^4 a1^-1 a1^-1 a3");
  EXPECT_EQ(format(parse_hword("x2 x2 x1 x2 x1^3 x2 x1^7")), "x2 x2 x1 x2 x1^3 x2 x1^7");
  EXPECT_EQ(format(parse_hword("x2 x1^-3")), "x2 x1^-3");
  EXPECT_EQ(format(parse_free_word("e")), "e");
  EXPECT_TRUE(parse_free_word("e").empty());
  EXPECT_TRUE(parse_free_word("a1^0").empty());
  EXPECT_EQ(format(parse_gword("a2^4 t^15")), "a2^4 t^15");
  EXPECT_EQ(format(parse_gword("t^-1 a2 t")), "t^-1 a2 t");
  EXPECT_EQ(parse_gword("a1 t^2").size(), 3u);
}

TEST(Words, ParseErrors) {
  EXPECT_THROW(parse_free_word(""), ParseError);
  EXPECT_THROW(parse_free_word("   "), ParseError);
  EXPECT_THROW(parse_free_word("a0"), ParseError);
  EXPECT_THROW(parse_free_word("a"), ParseError);
  EXPECT_THROW(parse_free_word("a1^"), ParseError);
  EXPECT_THROW(parse_free_word("a1^x"), ParseError);
  EXPECT_THROW(parse_free_word("b1"), ParseError);
  EXPECT_THROW(parse_free_word("x1"), ParseError);
  EXPECT_THROW(parse_free_word("t"), ParseError);
  EXPECT_THROW(parse_hword("a1"), ParseError);
  EXPECT_THROW(parse_gword("t2"), ParseError);
  EXPECT_THROW(parse_gword("x1"), ParseError);
  EXPECT_THROW(parse_free_word("a1^99999999999"), ParseError);
  EXPECT_THROW(parse_free_word("a-1"), ParseError);
}

TEST(Words, ReduceExamples) {
  EXPECT_TRUE(reduce(parse_free_word("a1 a1^-1")).empty());
  EXPECT_EQ(reduce(parse_free_word("a2 a1 a1^-1 a2")), parse_free_word("a2 a2"));
  EXPECT_EQ(reduce(parse_free_word("a1 a2 a2^-1 a1^-1 a3")), parse_free_word("a3"));
}

TEST(Words, ReduceProperties) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    FreeWord w = oracle::random_word(rng, 3, 14);
    FreeWord r = reduce(w);
    EXPECT_TRUE(r.is_reduced());
    EXPECT_EQ(reduce(r), r);
    EXPECT_EQ(r, oracle::free_reduce(w));
    EXPECT_TRUE(reduce(w * w.inverse()).empty());
    FreeWord v = oracle::random_word(rng, 3, 8);
    EXPECT_EQ(reduced_product(r, v), reduce(w * v));
  }
}

TEST(Words, PrintRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    FreeWord w = oracle::random_word(rng, 4, 12);
    EXPECT_EQ(parse_free_word(format(w)), w);
    HWord h(std::vector<Letter>(w.begin(), w.end()));
    EXPECT_EQ(parse_hword(format(h)), h);
  }
  GWord g{{2, 1}, {2, 1}, {2, 1}, {0, 1}, {1, -1}, {0, -1}, {0, -1}};
  EXPECT_EQ(parse_gword(format(g)), g);
}

TEST(Words, Letters) {
  Letter l = Letter::make(3, -1);
  EXPECT_EQ(l.index(), 3);
  EXPECT_EQ(l.sign(), -1);
  EXPECT_EQ(l.inverse(), Letter::make(3, 1));
  EXPECT_TRUE(l.cancels(l.inverse()));
  EXPECT_TRUE(FreeWord::power(2, 3).is_positive());
  EXPECT_FALSE(FreeWord::power(2, -1).is_positive());
  EXPECT_EQ(FreeWord::power(1, -2).inverse(), FreeWord::power(1, 2));
}

}  // namespace
}  // namespace hydra
