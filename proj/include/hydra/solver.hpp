#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "hydra/budget.hpp"
#include "hydra/context.hpp"
#include "hydra/group.hpp"
#include "hydra/words.hpp"

namespace hydra {

struct NotInLambda {
  friend bool operator==(const NotInLambda&, const NotInLambda&) = default;
};

struct Member {
  std::int64_t s = 0;
  HWord sigma;
  friend bool operator==(const Member&, const Member&) = default;
};

enum class UndecidedReason { BudgetExceeded, CandidateCapReached };

struct Undecided {
  UndecidedReason reason = UndecidedReason::BudgetExceeded;
  std::string detail;
};

using CosetAnswer = std::variant<NotInLambda, Member, Undecided>;

struct SolverBudget {
  EvalBudget eval;
  std::int64_t max_candidate_s = 4096;
  int max_depth = 64;
};

struct LeftPassage {
  HWord h1;
  std::int64_t n_prime = 0;
  FreeWord u1;
};

struct RightPassage {
  std::int64_t s = 0;
  HWord h2;
};

// Raised when a Member answer fails its own verification.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Decides t^r w in H t^s. Every public call runs in a fresh Context, so
// answers depend only on the arguments and the budget.
class CosetSolver {
 public:
  explicit CosetSolver(SolverBudget budget = {});

  CosetAnswer solve(std::int64_t r, const FreeWord& w) const;
  CosetAnswer solve_piece(std::int64_t r, const FreeWord& piece, int k) const;
  LeftPassage overcome_left(int k, std::int64_t n, bool eps) const;
  std::optional<RightPassage> resolve_right(int k, std::int64_t s_inner) const;

  const SolverBudget& budget() const { return budget_; }

 private:
  SolverBudget budget_;
};

CosetAnswer solve(std::int64_t r, const FreeWord& w, const SolverBudget& budget = {});

// s = 2^{b-a}(r-a-2)+b+2 when integral.
std::optional<std::int64_t> theta_run_exponent(std::int64_t r, std::int64_t a, std::int64_t b,
                                               const EvalBudget& budget = {});

bool is_member(const CosetAnswer& a);
std::string to_string(UndecidedReason reason);

}  // namespace hydra
