#include "hydra/solver.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace hydra {

namespace {

struct CandidateCapHit {
  std::int64_t s;
};

constexpr std::int64_t kExponentLimit = std::int64_t{1} << 62;

std::int64_t to_exponent(const BigInt& v) {
  auto out = to_int64(v);
  if (!out || *out > kExponentLimit || *out < -kExponentLimit) {
    throw BudgetExceeded(Cap::Bits, "t-exponent outside the supported range");
  }
  return *out;
}

std::int64_t checked(std::int64_t v) {
  if (v > kExponentLimit || v < -kExponentLimit) {
    throw BudgetExceeded(Cap::Bits, "t-exponent outside the supported range");
  }
  return v;
}


class Engine {
 public:
  Engine(Context& ctx, const SolverBudget& budget) : ctx_(ctx), budget_(budget) {}

  HWord x_power(int index, std::int64_t exponent) {
    ctx_.meter().charge(static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent));
    return HWord::power(index, exponent);
  }

  std::optional<Member> solve(std::int64_t r, const FreeWord& w, int depth) {
    if (depth > budget_.max_depth) throw BudgetExceeded(Cap::Steps, "solver depth cap reached");
    if (w.empty()) return Member{r, {}};
    int k = rank_of(w);
    Member acc{r, {}};
    for (const FreeWord& piece : partition_pieces(w, k).pieces) {
      auto m = piece_answer(acc.s, piece, k, depth);
      if (!m) return std::nullopt;
      acc.sigma.append(m->sigma);
      acc.s = m->s;
    }
    return acc;
  }

  std::optional<Member> piece_answer(std::int64_t r, const FreeWord& piece, int k, int depth) {
    ctx_.meter().charge();
    PieceShape shape = split_piece(piece, k);
    if (k == 1) {
      if (shape.left) return Member{checked(r - 1), x_power(1, 1)};
      if (shape.right) return Member{checked(r + 1), x_power(1, -1)};
      return Member{r, {}};
    }
    if (k == 2) return rank_two(r, shape);

    LeftPassage lp = overcome(k, r, shape.left);
    FreeWord base = reduced_product(lp.u1, shape.middle);
    auto inner = solve(lp.n_prime, base, depth + 1);
    if (!shape.right) {
      if (!inner) return std::nullopt;
      return Member{inner->s, lp.h1 * inner->sigma};
    }
    if (inner) {
      if (auto rp = resolve(k, inner->s)) {
        return Member{rp->s, lp.h1 * inner->sigma * rp->h2};
      }
    }
    // s > 0: a_k^{-1} t^{-s} = u2(s)^{-1} t^{-(s-1)} x_k^{-1}.
    std::int64_t heads = 0;
    for (Letter l : base) heads += (l == Letter::make(k - 1, -1));
    std::vector<std::int64_t> candidates;
    if (r > 0) candidates.push_back(r);
    for (std::int64_t s = 1; s <= heads; ++s) candidates.push_back(s);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (std::int64_t s : candidates) {
      if (s > budget_.max_candidate_s) throw CandidateCapHit{s};
      FreeWord mid = base;
      for (std::int64_t j = 0; j < s; ++j) {
        const FreeWord& head = ctx_.theta().letter(k - 1, j, 1);
        ctx_.meter().charge(head.size());
        append_reduced(mid, head.letters());
      }
      auto sub = solve(lp.n_prime, mid, depth + 1);
      if (sub && sub->s == s - 1) return Member{s, lp.h1 * sub->sigma * x_power(k, -1)};
    }
    return std::nullopt;
  }

  std::optional<Member> rank_two(std::int64_t r, const PieceShape& shape) {
    Member m{r, {}};
    if (shape.left) {
      // t^p a_2 = x_2 x_1^{-p} t^{2p-1}
      m.sigma = x_power(2, 1) * x_power(1, -r);
      m.s = checked(2 * r - 1);
    }
    std::int64_t run = 0;
    for (Letter l : shape.middle) run += l.sign();
    m.sigma.append(x_power(1, run));
    m.s = checked(m.s - run);
    if (shape.right) {
      auto rp = resolve(2, m.s);
      if (!rp) return std::nullopt;
      m.sigma.append(rp->h2);
      m.s = rp->s;
    }
    return m;
  }

  LeftPassage overcome(int k, std::int64_t n, bool eps) {
    LeftPassage out;
    out.n_prime = n;
    if (!eps) return out;
    if (n <= 0) {
      std::int64_t m = -n;
      BigInt p = ctx_.functions().phi(k, from_int64(m));
      std::int64_t len = to_exponent(p);
      ctx_.meter().require_steps(static_cast<std::uint64_t>(len), "overcoming a_k");
      out.h1 = transcript_to_hword(ctx_.theta().letter(k, m, 1), ctx_.meter());
      out.n_prime = checked(n - len);
      return out;
    }
    out.h1 = x_power(k, 1);
    out.n_prime = n - 1;
    for (std::int64_t j = n - 1; j >= 0; --j) {
      const FreeWord& piece = ctx_.theta().letter(k - 1, j, -1);
      ctx_.meter().charge(piece.size());
      append_reduced(out.u1, piece.letters());
    }
    return out;
  }

  std::optional<RightPassage> resolve(int k, std::int64_t s_inner) {
    if (k == 1) return RightPassage{checked(s_inner + 1), x_power(1, -1)};
    if (k == 2) {
      if (s_inner % 2 == 0) return std::nullopt;
      std::int64_t s = (s_inner + 1) / 2;
      return RightPassage{s, x_power(1, s) * x_power(2, -1)};
    }
    const BigInt target = from_int64(s_inner);
    for (std::int64_t m = 0;; ++m) {
      ctx_.meter().charge();
      BigInt f = -from_int64(m) - ctx_.functions().phi(k, from_int64(m));
      if (f == target) {
        HWord t = transcript_to_hword(ctx_.theta().letter(k, m, 1), ctx_.meter());
        return RightPassage{-m, t.inverse()};
      }
      if (f < target) return std::nullopt;
    }
  }

 private:
  Context& ctx_;
  const SolverBudget& budget_;
};

void verify(Context& ctx, std::int64_t r, const FreeWord& w, const Member& m) {
  NormalForm expected{ctx.theta().apply(w, -r), checked(r - m.s)};
  NormalForm got = eval_hword(m.sigma, ctx.theta());
  if (!(got == expected)) {
    throw VerificationFailure("witness " + format(m.sigma) + " evaluates to " + format(got) +
                              ", expected " + format(expected));
  }
}

template <class F>
CosetAnswer guarded(F&& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return Undecided{UndecidedReason::BudgetExceeded, e.what()};
  } catch (const CandidateCapHit& e) {
    return Undecided{UndecidedReason::CandidateCapReached,
                     "candidate s = " + std::to_string(e.s) + " exceeds the cap"};
  }
}

}  // namespace

CosetSolver::CosetSolver(SolverBudget budget) : budget_(budget) {
  if (budget_.max_candidate_s < 1 || budget_.max_depth < 1) {
    throw std::invalid_argument("solver caps must be positive");
  }
}

CosetAnswer CosetSolver::solve(std::int64_t r, const FreeWord& w) const {
  return guarded([&]() -> CosetAnswer {
    Context ctx(budget_.eval);
    checked(r);
    FreeWord reduced = reduce(w);
    auto m = Engine(ctx, budget_).solve(r, reduced, 0);
    if (!m) return NotInLambda{};
    m->sigma = hword_reduce(m->sigma);
    verify(ctx, r, reduced, *m);
    return *m;
  });
}

CosetAnswer CosetSolver::solve_piece(std::int64_t r, const FreeWord& piece, int k) const {
  return guarded([&]() -> CosetAnswer {
    Context ctx(budget_.eval);
    checked(r);
    auto m = Engine(ctx, budget_).piece_answer(r, piece, k, 0);
    if (!m) return NotInLambda{};
    m->sigma = hword_reduce(m->sigma);
    verify(ctx, r, piece, *m);
    return *m;
  });
}

LeftPassage CosetSolver::overcome_left(int k, std::int64_t n, bool eps) const {
  if (k < 3) throw std::invalid_argument("overcome_left: k must be >= 3");
  Context ctx(budget_.eval);
  return Engine(ctx, budget_).overcome(k, checked(n), eps);
}

std::optional<RightPassage> CosetSolver::resolve_right(int k, std::int64_t s_inner) const {
  if (k < 1) throw std::invalid_argument("resolve_right: k must be >= 1");
  Context ctx(budget_.eval);
  return Engine(ctx, budget_).resolve(k, checked(s_inner));
}

CosetAnswer solve(std::int64_t r, const FreeWord& w, const SolverBudget& budget) {
  return CosetSolver(budget).solve(r, w);
}

std::optional<std::int64_t> theta_run_exponent(std::int64_t r, std::int64_t a, std::int64_t b,
                                               const EvalBudget& budget) {
  Meter meter(budget);
  BigInt base = from_int64(r) - from_int64(a) - 2;
  BigInt tail = from_int64(b) + 2;
  BigInt shift = from_int64(b) - from_int64(a);
  auto e = to_uint64(abs(shift));
  if (!e) throw BudgetExceeded(Cap::Bits, "theta_run_exponent: shift too large");
  if (shift > 0 && base != 0) meter.check_bit_length(*e + bit_length(base));
  BigInt s;
  if (shift >= 0) {
    s = base;
    mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), *e);
  } else {
    if (!mpz_divisible_2exp_p(base.get_mpz_t(), *e)) return std::nullopt;
    s = base;
    mpz_fdiv_q_2exp(s.get_mpz_t(), s.get_mpz_t(), *e);
  }
  s += tail;
  return to_exponent(s);
}

bool is_member(const CosetAnswer& a) { return std::holds_alternative<Member>(a); }

std::string to_string(UndecidedReason reason) {
  return reason == UndecidedReason::BudgetExceeded ? "budget_exceeded" : "candidate_cap_reached";
}

}  // namespace hydra
