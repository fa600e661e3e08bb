#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "hydra/bigint.hpp"
#include "hydra/budget.hpp"

namespace hydra {

// Evaluates A_k(n) and its iterates against a meter, memoizing per evaluator.
class Ackermann {
 public:
  explicit Ackermann(Meter& meter) : meter_(meter) {}

  BigNat value(int k, const BigNat& n);
  BigNat iterate(int k, const BigNat& times, const BigNat& n);

 private:
  BigNat tower_step(int k, const BigNat& n);

  Meter& meter_;
  std::map<std::pair<int, std::uint64_t>, BigNat> memo_;
};

BigNat ack(int k, const BigNat& n, const EvalBudget& budget = {});
BigNat ack_iter(int k, const BigNat& l, const BigNat& n, const EvalBudget& budget = {});

}  // namespace hydra
