#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "hydra/budget.hpp"
#include "hydra/words.hpp"

namespace hydra {

int rank_of(const FreeWord& w);

// Memoized closed-form images theta^n(a_k^{+-1}).
class ThetaExpander {
 public:
  explicit ThetaExpander(Meter& meter) : meter_(meter) {}

  const FreeWord& letter(int k, std::int64_t n, int sign);
  FreeWord apply(const FreeWord& w, std::int64_t n);
  // Appends theta^n(w) to the reduced word `out`, reducing as it goes.
  void append_image(FreeWord& out, const FreeWord& w, std::int64_t n);

  Meter& meter() { return meter_; }

 private:
  Meter& meter_;
  std::map<std::tuple<int, std::int64_t, int>, FreeWord> memo_;
};

FreeWord apply_theta(const FreeWord& w, std::int64_t n, const EvalBudget& budget = {});
FreeWord expand_theta_letter(int k, std::int64_t n, int sign, const EvalBudget& budget = {});

struct PiecePartition {
  int rank = 0;
  std::vector<FreeWord> pieces;
};

PiecePartition partition_pieces(const FreeWord& w, int k);
PiecePartition partition_pieces(const FreeWord& w);

// A rank-k piece a_k^{e1} middle a_k^{-e2}.
struct PieceShape {
  bool left = false;
  FreeWord middle;
  bool right = false;
};

PieceShape split_piece(const FreeWord& piece, int k);

}  // namespace hydra
