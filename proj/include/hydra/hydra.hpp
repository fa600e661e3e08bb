#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hydra/bigint.hpp"
#include "hydra/budget.hpp"
#include "hydra/words.hpp"

namespace hydra {

// index^count; used both for hydra letters a_i and transcript letters x_i.
struct Run {
  int index = 1;
  std::uint64_t count = 1;
  friend bool operator==(const Run&, const Run&) = default;
};

void push_run(std::vector<Run>& runs, int index, std::uint64_t count);

class HydraWord {
 public:
  HydraWord() = default;
  explicit HydraWord(const std::vector<Run>& runs);

  static HydraWord from_free_word(const FreeWord& w);
  FreeWord to_free_word() const;

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  BigNat letter_count() const;

  friend bool operator==(const HydraWord&, const HydraWord&) = default;

 private:
  std::vector<Run> runs_;
};

std::string format_runs(const std::vector<Run>& runs, char symbol);
std::string format(const HydraWord& w);

HydraWord strike(const HydraWord& w);

struct BattleOptions {
  bool transcript = false;
  bool history = false;
};

struct BattleResult {
  BigNat duration = 0;
  std::optional<std::vector<Run>> transcript;
  std::vector<HydraWord> history;
};

BattleResult battle(const HydraWord& w, Meter& meter, BattleOptions options = {});
BattleResult battle(const HydraWord& w, const EvalBudget& budget = {}, bool want_transcript = false);

HWord materialize(const std::vector<Run>& runs, Meter& meter);
HWord transcript_to_hword(const FreeWord& w, Meter& meter);
HWord transcript_to_hword(const FreeWord& w, const EvalBudget& budget = {});

// phi_k and H_k by their recursions, memoized per instance.
class HydraFunctions {
 public:
  explicit HydraFunctions(Meter& meter) : meter_(meter) {}

  BigInt phi(int k, const BigInt& n);
  BigNat H(int k, const BigNat& n);

 private:
  BigNat extend(std::vector<BigNat>& seq, int k, std::uint64_t n, bool is_phi);

  Meter& meter_;
  std::map<int, std::vector<BigNat>> phi_seq_;
  std::map<int, std::vector<BigNat>> h_seq_;
};

BigInt phi(int k, const BigInt& n, const EvalBudget& budget = {});
BigNat hydra_H(int k, const BigNat& n, const EvalBudget& budget = {});

}  // namespace hydra
