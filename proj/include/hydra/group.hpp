#pragma once

#include <cstdint>
#include <string>

#include "hydra/budget.hpp"
#include "hydra/freewords.hpp"
#include "hydra/words.hpp"

namespace hydra {

// v t^r
struct NormalForm {
  FreeWord v;
  std::int64_t r = 0;

  bool is_identity() const { return v.empty() && r == 0; }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm& a, const NormalForm& b) {
    if (auto c = a.v <=> b.v; c != 0) return c;
    return a.r <=> b.r;
  }
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& g) const {
    return WordHash{}(g.v) ^ (static_cast<std::size_t>(g.r) * 0x9e3779b97f4a7c15ull);
  }
};

std::string format(const NormalForm& g);

// Right multiplication by single generators of G and of H.
void multiply_a(NormalForm& g, Letter a, ThetaExpander& theta);
void multiply_t(NormalForm& g, int sign);
void multiply_x(NormalForm& g, Letter x, ThetaExpander& theta);

NormalForm collect(const GWord& u, ThetaExpander& theta);
NormalForm eval_hword(const HWord& sigma, ThetaExpander& theta);
NormalForm nf_multiply(const NormalForm& g1, const NormalForm& g2, ThetaExpander& theta);
NormalForm nf_invert(const NormalForm& g, ThetaExpander& theta);

NormalForm collect(const GWord& u, const EvalBudget& budget = {});
NormalForm eval_hword(const HWord& sigma, const EvalBudget& budget = {});
NormalForm nf_multiply(const NormalForm& g1, const NormalForm& g2, const EvalBudget& budget = {});
NormalForm nf_invert(const NormalForm& g, const EvalBudget& budget = {});

HWord hword_reduce(const HWord& sigma);

// x_i^{+-1} spelled in G: a_i t, or t^-1 a_i^-1.
GWord hword_to_gword(const HWord& sigma);

}  // namespace hydra
