#include "hydra/group.hpp"

#include <limits>

namespace hydra {

namespace {

std::int64_t add_exponent(std::int64_t r, std::int64_t d) {
  std::int64_t out;
  if (__builtin_add_overflow(r, d, &out)) throw BudgetExceeded(Cap::Bits, "t-exponent overflow");
  return out;
}

}  // namespace

std::string format(const NormalForm& g) {
  if (g.r == 0) return format(g.v);
  std::string t = g.r == 1 ? "t" : "t^" + std::to_string(g.r);
  return g.v.empty() ? t : format(g.v) + " " + t;
}

void multiply_a(NormalForm& g, Letter a, ThetaExpander& theta) {
  const FreeWord& img = theta.letter(a.index(), -g.r, a.sign());
  theta.meter().charge(img.size());
  append_reduced(g.v, img.letters());
}

void multiply_t(NormalForm& g, int sign) { g.r = add_exponent(g.r, sign); }

void multiply_x(NormalForm& g, Letter x, ThetaExpander& theta) {
  if (x.sign() > 0) {
    multiply_a(g, x, theta);
    multiply_t(g, 1);
  } else {
    multiply_t(g, -1);
    multiply_a(g, x, theta);
  }
}

NormalForm collect(const GWord& u, ThetaExpander& theta) {
  NormalForm g;
  for (GLetter l : u) {
    if (l.is_t()) {
      multiply_t(g, l.sign);
    } else {
      multiply_a(g, Letter::make(l.index, l.sign), theta);
    }
  }
  return g;
}

NormalForm eval_hword(const HWord& sigma, ThetaExpander& theta) {
  NormalForm g;
  for (Letter x : sigma) multiply_x(g, x, theta);
  return g;
}

NormalForm nf_multiply(const NormalForm& g1, const NormalForm& g2, ThetaExpander& theta) {
  NormalForm out{g1.v, add_exponent(g1.r, g2.r)};
  theta.append_image(out.v, g2.v, -g1.r);
  return out;
}

NormalForm nf_invert(const NormalForm& g, ThetaExpander& theta) {
  if (g.r == std::numeric_limits<std::int64_t>::min()) {
    throw BudgetExceeded(Cap::Bits, "t-exponent overflow");
  }
  return NormalForm{theta.apply(g.v.inverse(), g.r), -g.r};
}

NormalForm collect(const GWord& u, const EvalBudget& budget) {
  Meter meter(budget);
  ThetaExpander theta(meter);
  return collect(u, theta);
}

NormalForm eval_hword(const HWord& sigma, const EvalBudget& budget) {
  Meter meter(budget);
  ThetaExpander theta(meter);
  return eval_hword(sigma, theta);
}

NormalForm nf_multiply(const NormalForm& g1, const NormalForm& g2, const EvalBudget& budget) {
  Meter meter(budget);
  ThetaExpander theta(meter);
  return nf_multiply(g1, g2, theta);
}

NormalForm nf_invert(const NormalForm& g, const EvalBudget& budget) {
  Meter meter(budget);
  ThetaExpander theta(meter);
  return nf_invert(g, theta);
}

HWord hword_reduce(const HWord& sigma) { return reduce(sigma); }

GWord hword_to_gword(const HWord& sigma) {
  GWord out;
  for (Letter x : sigma) {
    if (x.sign() > 0) {
      out.push_back(GLetter{x.index(), 1});
      out.push_back(GLetter{0, 1});
    } else {
      out.push_back(GLetter{0, -1});
      out.push_back(GLetter{x.index(), -1});
    }
  }
  return out;
}

}  // namespace hydra
