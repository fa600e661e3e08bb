#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hydra/budget.hpp"
#include "hydra/group.hpp"
#include "hydra/solver.hpp"
#include "hydra/words.hpp"

namespace hydra {

HWord witness_u(int k, std::uint64_t n, const EvalBudget& budget = {});

struct WitnessPair {
  GWord v;
  HWord w;
  bool verified = false;
  std::string v_text;
  std::string w_text;
};

WitnessPair witness_pair(int k, std::uint64_t n, const EvalBudget& budget = {});

struct OracleEntry {
  std::size_t min_length = 0;
  HWord witness;
};

struct OracleIndex {
  int k = 0;
  std::size_t radius = 0;
  std::map<NormalForm, OracleEntry> entries;
};

struct OracleOptions {
  // When set, only normal forms whose v-part is one of these words are kept.
  std::optional<std::vector<FreeWord>> targets;
  // max_steps caps the number of enumerated H-words.
  EvalBudget budget{1'000'000, 10'000'000};
};

// Every reduced word over x_1..x_k of length <= L.
OracleIndex build_oracle(int k, std::size_t L, const OracleOptions& options = {});
// Grows the radius, enumerating again but adding only words longer than the old radius.
void extend_oracle(OracleIndex& index, std::size_t L, const OracleOptions& options = {});

std::optional<std::int64_t> oracle_member(const OracleIndex& index, std::int64_t r,
                                          const FreeWord& w);

void save_oracle(const OracleIndex& index, std::ostream& out);
OracleIndex load_oracle(std::istream& in, int k, std::size_t radius);

struct BallElement {
  NormalForm g;
  std::size_t g_length = 0;
  std::optional<std::size_t> h_length;
  bool undecided = false;
};

// Elements of the ball of radius n_max in G_k for the generators a_1..a_k, t.
std::vector<BallElement> enumerate_ball(int k, std::size_t n_max, const SolverBudget& budget = {});

struct DistortionTable {
  int k = 0;
  std::vector<std::uint64_t> dist;
  std::size_t elements = 0;
  std::size_t members = 0;
  std::size_t undecided = 0;
};

DistortionTable distortion_table(int k, std::size_t n_max, const SolverBudget& budget = {});

// All freely reduced words over a_1^{+-1}..a_k^{+-1} of length <= max_len.
std::vector<FreeWord> reduced_words(int k, std::size_t max_len);

struct OracleCheckReport {
  std::size_t queries = 0;
  std::size_t oracle_yes = 0;
  std::size_t members = 0;
  std::size_t not_in_lambda = 0;
  std::size_t undecided = 0;
  std::size_t disagreements = 0;
  std::size_t bound_checks = 0;
  std::size_t bound_violations = 0;
  std::size_t bound_skipped = 0;
  std::vector<std::string> problems;
};

// Solver against a targeted oracle of radius L on every (r, w) with
// |r| <= max_r and w of length <= max_len over a_1..a_k.
OracleCheckReport oracle_check(int k, std::size_t L, std::size_t max_len, std::int64_t max_r,
                               const SolverBudget& solver_budget,
                               const EvalBudget& oracle_budget);

}  // namespace hydra
