#include "hydra/budget.hpp"

namespace hydra {

std::string to_string(Cap cap) { return cap == Cap::Bits ? "bits" : "steps"; }

BudgetExceeded::BudgetExceeded(Cap cap, const std::string& what)
    : std::runtime_error(what), cap_(cap) {}

Meter::Meter(EvalBudget budget) : budget_(budget) {
  if (budget_.max_bits == 0 || budget_.max_steps == 0) {
    throw std::invalid_argument("budget caps must be positive");
  }
}

void Meter::charge(std::uint64_t steps) {
  if (steps > remaining_steps()) {
    used_ = budget_.max_steps;
    throw BudgetExceeded(Cap::Steps, "step budget of " + std::to_string(budget_.max_steps) +
                                         " exhausted");
  }
  used_ += steps;
}

void Meter::require_steps(std::uint64_t steps, const char* what) const {
  if (steps > remaining_steps()) {
    throw BudgetExceeded(Cap::Steps, std::string(what) + " needs at least " +
                                         std::to_string(steps) + " steps, " +
                                         std::to_string(remaining_steps()) + " left");
  }
}

void Meter::check_bit_length(std::uint64_t bits) const {
  if (bits > budget_.max_bits) {
    throw BudgetExceeded(Cap::Bits, "value of " + std::to_string(bits) +
                                        " bits exceeds the cap of " +
                                        std::to_string(budget_.max_bits));
  }
}

void Meter::check_bits(const BigInt& value) const { check_bit_length(bit_length(value)); }

}  // namespace hydra
