#include "hydra/freewords.hpp"

#include <algorithm>
#include <stdexcept>

namespace hydra {

int rank_of(const FreeWord& w) {
  int k = 0;
  for (Letter l : w) k = std::max(k, l.index());
  return k;
}

const FreeWord& ThetaExpander::letter(int k, std::int64_t n, int sign) {
  if (k < 1) throw std::invalid_argument("theta: letter index must be >= 1");
  auto key = std::make_tuple(k, n, sign);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  FreeWord out;
  Letter self = Letter::make(k, sign);
  if (k == 1 || n == 0) {
    out.push_back(self);
  } else {
    auto add = [&](const FreeWord& piece) {
      meter_.charge(piece.size());
      append_reduced(out, piece.letters());
    };
    if (sign > 0) {
      out.push_back(self);
      if (n > 0) {
        for (std::int64_t j = 0; j < n; ++j) add(letter(k - 1, j, 1));
      } else {
        for (std::int64_t j = -1; j >= n; --j) add(letter(k - 1, j, -1));
      }
    } else {
      if (n > 0) {
        for (std::int64_t j = n - 1; j >= 0; --j) add(letter(k - 1, j, -1));
      } else {
        for (std::int64_t j = n; j <= -1; ++j) add(letter(k - 1, j, 1));
      }
      append_reduced(out, std::span<const Letter>(&self, 1));
    }
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

void ThetaExpander::append_image(FreeWord& out, const FreeWord& w, std::int64_t n) {
  for (Letter l : w) {
    const FreeWord& img = letter(l.index(), n, l.sign());
    meter_.charge(img.size());
    append_reduced(out, img.letters());
  }
}

FreeWord ThetaExpander::apply(const FreeWord& w, std::int64_t n) {
  FreeWord out;
  append_image(out, w, n);
  return out;
}

FreeWord apply_theta(const FreeWord& w, std::int64_t n, const EvalBudget& budget) {
  Meter meter(budget);
  return ThetaExpander(meter).apply(w, n);
}

FreeWord expand_theta_letter(int k, std::int64_t n, int sign, const EvalBudget& budget) {
  Meter meter(budget);
  return ThetaExpander(meter).letter(k, n, sign);
}

PiecePartition partition_pieces(const FreeWord& w, int k) {
  if (k < rank_of(w)) throw std::invalid_argument("partition_pieces: k below the rank of w");
  PiecePartition out;
  out.rank = k;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w[i];
    if (l.index() != k) continue;
    if (l.sign() > 0 && i > start) {
      out.pieces.push_back(w.slice(start, i));
      start = i;
    } else if (l.sign() < 0 && i + 1 < w.size()) {
      out.pieces.push_back(w.slice(start, i + 1));
      start = i + 1;
    }
  }
  if (start < w.size()) out.pieces.push_back(w.slice(start, w.size()));
  return out;
}

PiecePartition partition_pieces(const FreeWord& w) { return partition_pieces(w, rank_of(w)); }

PieceShape split_piece(const FreeWord& piece, int k) {
  PieceShape shape;
  std::size_t from = 0;
  std::size_t to = piece.size();
  if (to > 0 && piece[0] == Letter::make(k, 1)) {
    shape.left = true;
    from = 1;
  }
  if (to > from && piece[to - 1] == Letter::make(k, -1)) {
    shape.right = true;
    --to;
  }
  shape.middle = piece.slice(from, to);
  if (rank_of(shape.middle) >= k) throw std::invalid_argument("not a rank-k piece: " + format(piece));
  return shape;
}

}  // namespace hydra
