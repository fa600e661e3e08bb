#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hydra/group.hpp"
#include "support/oracles.hpp"

namespace hydra {
namespace {

FreeWord W(const char* s) { return parse_free_word(s); }
NormalForm NF(const char* v, std::int64_t r) { return NormalForm{W(v), r}; }

// Collection with theta computed by iterating the defining rule.
NormalForm naive_collect(const GWord& u) {
  NormalForm g;
  for (GLetter l : u) {
    if (l.is_t()) {
      g.r += l.sign;
    } else {
      FreeWord img = oracle::theta_iterate(FreeWord::letter(l.index, l.sign), -g.r);
      g.v = oracle::free_reduce(g.v * img);
    }
  }
  return g;
}

GWord random_gword(std::mt19937_64& rng, int k, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> idx(0, k);
  std::bernoulli_distribution neg(0.5);
  GWord u;
  for (std::size_t i = len(rng); i > 0; --i) u.push_back(GLetter{idx(rng), neg(rng) ? -1 : 1});
  return u;
}

TEST(Group, CollectExamples) {
  EXPECT_EQ(collect(parse_gword("t^-1 a2 t")), NF("a2 a1", 0));
  EXPECT_EQ(collect(parse_gword("a1 t a2 t")), NF("a1 a2 a1^-1", 2));
  EXPECT_EQ(collect(GWord{}), NormalForm{});
  EXPECT_EQ(collect(parse_gword("a2^4 t^15")), NF("a2^4", 15));
}

TEST(Group, EvalHwordExamples) {
  EXPECT_EQ(eval_hword(parse_hword("x1")), NF("a1", 1));
  EXPECT_EQ(eval_hword(parse_hword("x2 x2 x1 x2 x1^3 x2 x1^7")), NF("a2^4", 15));
  EXPECT_EQ(eval_hword(parse_hword("x2 x2^-1")), NormalForm{});
  EXPECT_EQ(eval_hword(parse_hword("x3^-1")), collect(parse_gword("t^-1 a3^-1")));
}

TEST(Group, ArithmeticExamples) {
  EXPECT_EQ(nf_multiply(NF("a2", 0), NF("e", 1)), NF("a2", 1));
  EXPECT_EQ(nf_multiply(NF("e", 1), NF("a2", 0)), NF("a2 a1^-1", 1));
  EXPECT_EQ(nf_invert(NF("a1", 0)), NF("a1^-1", 0));
  EXPECT_EQ(nf_invert(NF("a2", 1)), NF("a1^-1 a2^-1", -1));
  EXPECT_EQ(nf_invert(NormalForm{}), NormalForm{});
  EXPECT_EQ(format(NF("a2^4", 15)), "a2^4 t^15");
  EXPECT_EQ(format(NF("e", -2)), "t^-2");
}

TEST(Group, HwordReduce) {
  EXPECT_TRUE(hword_reduce(parse_hword("x1 x1^-1")).empty());
  EXPECT_EQ(hword_reduce(parse_hword("x2 x1 x1^-1 x3")), parse_hword("x2 x3"));
  HWord u = parse_hword("x2 x2 x1 x2 x1^3 x2 x1^7");
  EXPECT_EQ(hword_reduce(u), u);
  EXPECT_EQ(hword_reduce(u).size(), 15u);
}

TEST(Group, HomomorphismAndIndependentCollection) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 600; ++trial) {
    GWord u1 = random_gword(rng, 3, 8);
    GWord u2 = random_gword(rng, 3, 8);
    NormalForm g1 = collect(u1);
    EXPECT_EQ(g1, naive_collect(u1));
    EXPECT_EQ(collect(u1 * u2), nf_multiply(g1, collect(u2)));
    EXPECT_TRUE(nf_multiply(g1, nf_invert(g1)).is_identity());
    EXPECT_TRUE(nf_multiply(nf_invert(g1), g1).is_identity());
    EXPECT_EQ(nf_invert(g1), collect(u1.inverse()));
  }
}

TEST(Group, EvalMatchesGWordSpelling) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    FreeWord f = oracle::random_word(rng, 3, 8);
    HWord sigma(std::vector<Letter>(f.begin(), f.end()));
    EXPECT_EQ(eval_hword(sigma), naive_collect(hword_to_gword(sigma)));
  }
}

TEST(Group, SmallFreenessAndPositivity) {
  std::set<NormalForm> seen;
  std::vector<HWord> level{HWord{}};
  std::size_t total = 0;
  for (int len = 0; len <= 5; ++len) {
    std::vector<HWord> next;
    for (const HWord& sigma : level) {
      NormalForm g = eval_hword(sigma);
      EXPECT_TRUE(seen.insert(g).second) << format(sigma);
      if (!sigma.empty()) EXPECT_FALSE(g.v.empty()) << format(sigma);
      if (g.v.is_positive()) EXPECT_TRUE(sigma.is_positive()) << format(sigma);
      ++total;
      for (int i = 1; i <= 3; ++i) {
        for (int s : {1, -1}) {
          Letter x = Letter::make(i, s);
          if (!sigma.empty() && sigma.back().cancels(x)) continue;
          HWord w = sigma;
          w.push_back(x);
          next.push_back(std::move(w));
        }
      }
    }
    level.swap(next);
  }
  EXPECT_EQ(total, 1u + 6 + 30 + 150 + 750 + 3750);
}

}  // namespace
}  // namespace hydra
