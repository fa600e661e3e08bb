#include "hydra/ackermann.hpp"

#include <stdexcept>

namespace hydra {

BigNat Ackermann::value(int k, const BigNat& n) {
  if (k < 0) throw std::invalid_argument("ack: k must be >= 0");
  if (n < 0) throw std::invalid_argument("ack: n must be >= 0");
  meter_.charge();
  switch (k) {
    case 0: {
      BigNat out = n + 2;
      meter_.check_bits(out);
      return out;
    }
    case 1: {
      BigNat out = n * 2;
      meter_.check_bits(out);
      return out;
    }
    case 2: {
      // 2^n has n+1 bits; refuse before allocating.
      auto e = to_uint64(n);
      if (!e || *e >= meter_.budget().max_bits) {
        throw BudgetExceeded(Cap::Bits, "2^n exceeds the bit cap");
      }
      BigNat out;
      mpz_ui_pow_ui(out.get_mpz_t(), 2, *e);
      return out;
    }
    default:
      return tower_step(k, n);
  }
}

BigNat Ackermann::tower_step(int k, const BigNat& n) {
  if (n == 0) return 1;
  auto key = to_uint64(n);
  if (key) {
    auto it = memo_.find({k, *key});
    if (it != memo_.end()) return it->second;
  }
  // A_k(n) = A_{k-1}^{(n)}(1); each application is one step.
  BigNat x = 1;
  for (BigNat i = 0; i < n; ++i) {
    meter_.charge();
    x = value(k - 1, x);
  }
  if (key) memo_.emplace(std::make_pair(k, *key), x);
  return x;
}

BigNat Ackermann::iterate(int k, const BigNat& times, const BigNat& n) {
  if (times < 0) throw std::invalid_argument("ack_iter: l must be >= 0");
  BigNat x = n;
  for (BigNat i = 0; i < times; ++i) x = value(k, x);
  return x;
}

BigNat ack(int k, const BigNat& n, const EvalBudget& budget) {
  Meter meter(budget);
  return Ackermann(meter).value(k, n);
}

BigNat ack_iter(int k, const BigNat& l, const BigNat& n, const EvalBudget& budget) {
  Meter meter(budget);
  return Ackermann(meter).iterate(k, l, n);
}

}  // namespace hydra
