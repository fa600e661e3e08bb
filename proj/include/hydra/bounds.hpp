#pragma once

#include "hydra/bigint.hpp"
#include "hydra/budget.hpp"
#include "hydra/hydra.hpp"

namespace hydra {

// Recursive upper bounds kappa, K, psi, Psi. K iterates kappa_{k,l} p times
// at full length l instead of maximizing over length splits.
class BoundCalculator {
 public:
  BoundCalculator(Meter& meter, HydraFunctions& functions) : meter_(meter), functions_(functions) {}

  BigNat kappa(int k, const BigNat& l, const BigNat& n);
  BigNat K(int k, const BigNat& l, const BigNat& p, const BigNat& n);
  BigNat psi(int k, const BigNat& l, const BigNat& n);
  BigNat Psi(int k, const BigNat& l, const BigNat& p, const BigNat& n);

 private:
  BigNat doubled_phi(int k, const BigNat& n);

  Meter& meter_;
  HydraFunctions& functions_;
};

BigNat kappa_bound(int k, const BigNat& l, const BigNat& n, const EvalBudget& budget = {});
BigNat K_bound(int k, const BigNat& l, const BigNat& p, const BigNat& n,
               const EvalBudget& budget = {});
BigNat psi_bound(int k, const BigNat& l, const BigNat& n, const EvalBudget& budget = {});
BigNat Psi_bound(int k, const BigNat& l, const BigNat& p, const BigNat& n,
                 const EvalBudget& budget = {});

struct AckermannConstants {
  BigNat D;
  BigNat E;
  BigNat F;
};

AckermannConstants ackermann_constants(int k, const EvalBudget& budget = {});

}  // namespace hydra
