#include "hydra/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace hydra {

namespace {

void check_args(int k, const BigNat& l, const BigNat& n) {
  if (k < 1) throw std::invalid_argument("bounds: k must be >= 1");
  if (l < 0 || n < 0) throw std::invalid_argument("bounds: l and n must be >= 0");
}

}  // namespace

BigNat BoundCalculator::doubled_phi(int k, const BigNat& n) {
  BigNat out = 2 * functions_.phi(k, n);
  meter_.check_bits(out);
  return out;
}

BigNat BoundCalculator::kappa(int k, const BigNat& l, const BigNat& n) {
  check_args(k, l, n);
  meter_.charge();
  if (k == 1) return n + 1;
  BigNat out = 2 * K(k - 1, l, l, doubled_phi(k, n));
  meter_.check_bits(out);
  return out;
}

BigNat BoundCalculator::K(int k, const BigNat& l, const BigNat& p, const BigNat& n) {
  check_args(k, l, n);
  if (p < 0) throw std::invalid_argument("bounds: p must be >= 0");
  if (k == 1) {
    BigNat out = n + p;
    meter_.check_bits(out);
    return out;
  }
  BigNat x = n;
  for (BigNat i = 0; i < p; ++i) x = kappa(k, l, x);
  return x;
}

BigNat BoundCalculator::psi(int k, const BigNat& l, const BigNat& n) {
  check_args(k, l, n);
  meter_.charge();
  if (k == 1) return 1;
  BigNat m = doubled_phi(k, n);
  BigNat out = 3 * K(k - 1, l, l, m) + Psi(k - 1, l, l, m);
  meter_.check_bits(out);
  return out;
}

BigNat BoundCalculator::Psi(int k, const BigNat& l, const BigNat& p, const BigNat& n) {
  check_args(k, l, n);
  if (p < 0) throw std::invalid_argument("bounds: p must be >= 0");
  if (p == 0) return 0;
  BigNat out = p * psi(k, l, K(k, l, p, n));
  meter_.check_bits(out);
  return out;
}

BigNat kappa_bound(int k, const BigNat& l, const BigNat& n, const EvalBudget& budget) {
  Meter meter(budget);
  HydraFunctions f(meter);
  return BoundCalculator(meter, f).kappa(k, l, n);
}

BigNat K_bound(int k, const BigNat& l, const BigNat& p, const BigNat& n, const EvalBudget& budget) {
  Meter meter(budget);
  HydraFunctions f(meter);
  return BoundCalculator(meter, f).K(k, l, p, n);
}

BigNat psi_bound(int k, const BigNat& l, const BigNat& n, const EvalBudget& budget) {
  Meter meter(budget);
  HydraFunctions f(meter);
  return BoundCalculator(meter, f).psi(k, l, n);
}

BigNat Psi_bound(int k, const BigNat& l, const BigNat& p, const BigNat& n,
                 const EvalBudget& budget) {
  Meter meter(budget);
  HydraFunctions f(meter);
  return BoundCalculator(meter, f).Psi(k, l, p, n);
}

AckermannConstants ackermann_constants(int k, const EvalBudget& budget) {
  if (k < 1) throw std::invalid_argument("ackermann_constants: k must be >= 1");
  Meter meter(budget);
  AckermannConstants c{1, 1, 1};
  for (int j = 2; j <= k; ++j) {
    meter.charge();
    BigNat d = std::max(BigNat(2 * (c.D + 1) + 4 * c.D * j), BigNat(1));
    BigNat e = 3 * (2 * j + 1) * c.D + (2 * j + 1) * c.F + 4;
    BigNat f = (d + 1) * e;
    meter.check_bits(f);
    c = AckermannConstants{d, e, f};
  }
  return c;
}

}  // namespace hydra
