#pragma once

#include "hydra/ackermann.hpp"
#include "hydra/budget.hpp"
#include "hydra/freewords.hpp"
#include "hydra/hydra.hpp"

namespace hydra {

// Meter plus memo tables for one top-level evaluation.
class Context {
 public:
  explicit Context(EvalBudget budget = {})
      : meter_(budget), theta_(meter_), functions_(meter_), ack_(meter_) {}
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  Meter& meter() { return meter_; }
  ThetaExpander& theta() { return theta_; }
  HydraFunctions& functions() { return functions_; }
  Ackermann& ack() { return ack_; }

 private:
  Meter meter_;
  ThetaExpander theta_;
  HydraFunctions functions_;
  Ackermann ack_;
};

}  // namespace hydra
