#include <gtest/gtest.h>

#include <random>

#include "hydra/freewords.hpp"
#include "support/oracles.hpp"

namespace hydra {
namespace {

FreeWord W(const char* s) { return parse_free_word(s); }

TEST(FreeWords, Rank) {
  EXPECT_EQ(rank_of(FreeWord{}), 0);
  EXPECT_EQ(rank_of(W("a3^-1 a1 a2 a3 a2^-1 a3 a1^-1 a3^-1")), 3);
  EXPECT_EQ(rank_of(W("a1^-1")), 1);
}

TEST(FreeWords, ThetaExamples) {
  EXPECT_EQ(apply_theta(W("a3"), 1), W("a3 a2"));
  EXPECT_EQ(apply_theta(W("a2"), -1), W("a2 a1^-1"));
  EXPECT_EQ(apply_theta(W("a3"), 2), W("a3 a2 a2 a1"));
  EXPECT_EQ(apply_theta(W("a3 a1^-1 a2"), 0), W("a3 a1^-1 a2"));
  EXPECT_EQ(apply_theta(apply_theta(W("a2"), -1), 1), W("a2"));
}

TEST(FreeWords, ClosedFormExamples) {
  EXPECT_EQ(expand_theta_letter(3, 2, 1), W("a3 a2 a2 a1"));
  EXPECT_EQ(expand_theta_letter(2, -1, -1), W("a1 a2^-1"));
  EXPECT_EQ(expand_theta_letter(4, 0, -1), W("a4^-1"));
  EXPECT_EQ(expand_theta_letter(1, -9, 1), W("a1"));
}

TEST(FreeWords, ClosedFormMatchesIteration) {
  for (int k = 1; k <= 5; ++k) {
    for (int n = -8; n <= 8; ++n) {
      for (int sign : {1, -1}) {
        FreeWord letter = FreeWord::letter(k, sign);
        EXPECT_EQ(expand_theta_letter(k, n, sign), oracle::theta_iterate(letter, n))
            << "k=" << k << " n=" << n << " sign=" << sign;
      }
    }
  }
}

TEST(FreeWords, InverseRecursionRoundTrips) {
  for (int k = 1; k <= 6; ++k) {
    FreeWord a = FreeWord::letter(k);
    EXPECT_EQ(oracle::theta_once(oracle::theta_once(a, -1), 1), a);
    EXPECT_EQ(apply_theta(oracle::theta_once(a, -1), 1), a);
  }
}

TEST(FreeWords, ThetaIsAnAutomorphism) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> exp(-6, 6);
  for (int trial = 0; trial < 400; ++trial) {
    FreeWord u = oracle::random_word(rng, 4, 7);
    FreeWord v = oracle::random_word(rng, 4, 7);
    int n = exp(rng);
    EXPECT_EQ(apply_theta(u * v, n), reduce(apply_theta(u, n) * apply_theta(v, n)));
    EXPECT_EQ(apply_theta(apply_theta(u, n), -n), reduce(u));
    EXPECT_EQ(apply_theta(u, n), oracle::theta_iterate(reduce(u), n));
  }
}

TEST(FreeWords, PositivityPreserved) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    FreeWord w;
    for (Letter l : oracle::random_word(rng, 4, 6)) w.push_back(Letter::make(l.index(), 1));
    for (int s = 0; s <= 6; ++s) EXPECT_TRUE(apply_theta(w, s).is_positive());
  }
}

TEST(FreeWords, ThetaBudget) {
  EXPECT_THROW(apply_theta(W("a5"), 200, EvalBudget{1000, 1000}), BudgetExceeded);
}

TEST(FreeWords, PartitionExamples) {
  auto p = partition_pieces(W("a3^-1 a1 a2 a3 a2^-1 a3 a1^-1 a3^-1"), 3);
  ASSERT_EQ(p.pieces.size(), 4u);
  EXPECT_EQ(p.pieces[0], W("a3^-1"));
  EXPECT_EQ(p.pieces[1], W("a1 a2"));
  EXPECT_EQ(p.pieces[2], W("a3 a2^-1"));
  EXPECT_EQ(p.pieces[3], W("a3 a1^-1 a3^-1"));
  EXPECT_TRUE(partition_pieces(FreeWord{}, 2).pieces.empty());
  auto q = partition_pieces(W("a1 a2"), 2);
  ASSERT_EQ(q.pieces.size(), 2u);
  EXPECT_EQ(q.pieces[0], W("a1"));
  EXPECT_EQ(q.pieces[1], W("a2"));
  EXPECT_EQ(partition_pieces(W("a1 a2"), 3).pieces.size(), 1u);
}

void check_partition(const FreeWord& w, int k) {
  auto p = partition_pieces(w, k);
  FreeWord joined;
  for (const auto& piece : p.pieces) {
    ASSERT_FALSE(piece.empty());
    joined.append(piece);
    std::vector<Letter> seg(piece.begin(), piece.end());
    EXPECT_TRUE(oracle::legal_piece(seg, k)) << format(piece);
    for (std::size_t i = 1; i + 1 < piece.size(); ++i) EXPECT_NE(piece[i].index(), k);
    PieceShape shape = split_piece(piece, k);
    EXPECT_LT(rank_of(shape.middle), k);
  }
  EXPECT_EQ(joined, w);
  for (std::size_t i = 0; i + 1 < p.pieces.size(); ++i) {
    bool ends = p.pieces[i].back() == Letter::make(k, -1);
    bool starts = p.pieces[i + 1].front() == Letter::make(k, 1);
    EXPECT_TRUE(ends != starts) << format(w);
  }
  if (w.size() <= 6) {
    EXPECT_EQ(static_cast<int>(p.pieces.size()), oracle::min_piece_count(w, k)) << format(w);
  }
}

TEST(FreeWords, PartitionProperties) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 3000; ++trial) {
    FreeWord w = oracle::random_reduced_word(rng, 3, trial % 2 ? 6 : 14);
    int k = std::max(1, rank_of(w));
    check_partition(w, k);
  }
}

TEST(FreeWords, SplitPiece) {
  PieceShape s = split_piece(W("a3 a1^-1 a3^-1"), 3);
  EXPECT_TRUE(s.left);
  EXPECT_TRUE(s.right);
  EXPECT_EQ(s.middle, W("a1^-1"));
  PieceShape t = split_piece(W("a3^-1"), 3);
  EXPECT_FALSE(t.left);
  EXPECT_TRUE(t.right);
  EXPECT_THROW(split_piece(W("a1 a3"), 3), std::invalid_argument);
}

}  // namespace
}  // namespace hydra
