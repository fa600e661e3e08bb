#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hydra/bigint.hpp"

namespace hydra {

struct EvalBudget {
  std::uint64_t max_bits = 1'000'000;
  std::uint64_t max_steps = 10'000'000;
};

enum class Cap { Bits, Steps };

std::string to_string(Cap cap);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(Cap cap, const std::string& what);
  Cap cap() const { return cap_; }

 private:
  Cap cap_;
};

// Raised for phi_k(n) with k >= 3 and n < 0.
class NotInDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Tracks consumption against an EvalBudget. One meter belongs to one
// top-level evaluation; it is not shared between threads.
class Meter {
 public:
  explicit Meter(EvalBudget budget = {});

  void charge(std::uint64_t steps = 1);
  void require_steps(std::uint64_t steps, const char* what) const;
  void check_bits(const BigInt& value) const;
  void check_bit_length(std::uint64_t bits) const;

  std::uint64_t steps_used() const { return used_; }
  std::uint64_t remaining_steps() const { return budget_.max_steps - used_; }
  const EvalBudget& budget() const { return budget_; }

 private:
  EvalBudget budget_;
  std::uint64_t used_ = 0;
};

}  // namespace hydra
