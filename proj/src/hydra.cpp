#include "hydra/hydra.hpp"

#include <stdexcept>

namespace hydra {

namespace {

constexpr std::uint64_t kMemoBits = 1u << 16;

// Appends theta^c(a_j) in run-length form.
void append_theta_power(std::vector<Run>& out, int j, std::uint64_t c, Meter& meter) {
  meter.charge();
  push_run(out, j, 1);
  if (j == 1 || c == 0) return;
  if (j == 2) {
    push_run(out, 1, c);
    return;
  }
  for (std::uint64_t m = 0; m < c; ++m) append_theta_power(out, j - 1, m, meter);
}

// One round: strike `c` copies of the leading letter. Only a leading a_1 run
// is struck in bulk.
void strike_runs(const std::vector<Run>& cur, std::vector<Run>& next, std::uint64_t c,
                 Meter& meter) {
  next.clear();
  auto regenerate = [&](const Run& run) {
    if (run.index == 1) {
      meter.charge();
      push_run(next, 1, run.count);
      return;
    }
    for (std::uint64_t i = 0; i < run.count; ++i) append_theta_power(next, run.index, c, meter);
  };
  if (cur[0].count > c) regenerate(Run{cur[0].index, cur[0].count - c});
  for (std::size_t i = 1; i < cur.size(); ++i) regenerate(cur[i]);
}

}  // namespace

void push_run(std::vector<Run>& runs, int index, std::uint64_t count) {
  if (count == 0) return;
  if (!runs.empty() && runs.back().index == index) {
    runs.back().count += count;
  } else {
    runs.push_back(Run{index, count});
  }
}

HydraWord::HydraWord(const std::vector<Run>& runs) {
  for (const Run& r : runs) {
    if (r.index < 1) throw std::invalid_argument("hydra letters have index >= 1");
    push_run(runs_, r.index, r.count);
  }
}

HydraWord HydraWord::from_free_word(const FreeWord& w) {
  if (!w.is_positive()) throw std::invalid_argument("a hydra is a positive word");
  HydraWord h;
  for (Letter l : w) push_run(h.runs_, l.index(), 1);
  return h;
}

FreeWord HydraWord::to_free_word() const {
  FreeWord w;
  for (const Run& r : runs_) w.append(FreeWord::power(r.index, static_cast<std::int64_t>(r.count)));
  return w;
}

BigNat HydraWord::letter_count() const {
  BigNat n = 0;
  for (const Run& r : runs_) n += from_uint64(r.count);
  return n;
}

std::string format_runs(const std::vector<Run>& runs, char symbol) {
  std::string out;
  for (const Run& r : runs) {
    std::string letter = std::string(1, symbol) + std::to_string(r.index);
    std::uint64_t spelled = r.count >= 3 ? 1 : r.count;
    for (std::uint64_t i = 0; i < spelled; ++i) {
      if (!out.empty()) out += ' ';
      out += letter;
    }
    if (r.count >= 3) out += "^" + std::to_string(r.count);
  }
  return out.empty() ? "e" : out;
}

std::string format(const HydraWord& w) { return format_runs(w.runs(), 'a'); }

HydraWord strike(const HydraWord& w) {
  if (w.empty()) throw std::invalid_argument("strike: the hydra is already defeated");
  Meter meter;
  std::vector<Run> next;
  strike_runs(w.runs(), next, 1, meter);
  return HydraWord(next);
}

BattleResult battle(const HydraWord& w, Meter& meter, BattleOptions options) {
  BattleResult result;
  std::vector<Run> transcript;
  std::vector<Run> cur = w.runs();
  std::vector<Run> next;
  std::uint64_t strikes = 0;
  if (options.history) result.history.push_back(w);
  while (!cur.empty()) {
    const Run head = cur[0];
    const std::uint64_t c = (head.index == 1 && !options.history) ? head.count : 1;
    meter.charge(c);
    strikes += c;
    if (options.transcript) push_run(transcript, head.index, c);
    strike_runs(cur, next, c, meter);
    cur.swap(next);
    if (options.history) result.history.emplace_back(cur);
  }
  result.duration = from_uint64(strikes);
  if (options.transcript) result.transcript = std::move(transcript);
  return result;
}

BattleResult battle(const HydraWord& w, const EvalBudget& budget, bool want_transcript) {
  Meter meter(budget);
  return battle(w, meter, BattleOptions{want_transcript, false});
}

HWord materialize(const std::vector<Run>& runs, Meter& meter) {
  std::uint64_t total = 0;
  for (const Run& r : runs) {
    total += r.count;
    meter.require_steps(total, "materializing a transcript");
  }
  meter.charge(total);
  HWord out;
  out.reserve(total);
  for (const Run& r : runs) out.append(HWord::power(r.index, static_cast<std::int64_t>(r.count)));
  return out;
}

HWord transcript_to_hword(const FreeWord& w, Meter& meter) {
  if (!w.is_positive()) throw std::invalid_argument("transcript_to_hword: word must be positive");
  BattleResult res = battle(HydraWord::from_free_word(w), meter, BattleOptions{true, false});
  return materialize(*res.transcript, meter);
}

HWord transcript_to_hword(const FreeWord& w, const EvalBudget& budget) {
  Meter meter(budget);
  return transcript_to_hword(w, meter);
}

BigInt HydraFunctions::phi(int k, const BigInt& n) {
  if (k < 1) throw std::invalid_argument("phi: k must be >= 1");
  meter_.charge();
  if (k == 1) return 1;
  if (k == 2) {
    BigInt out = n + 1;
    meter_.check_bits(out);
    return out;
  }
  if (n < 0) throw NotInDomain("phi_k(n) with k >= 3 is defined only for n >= 0");
  // phi_k(n) >= 2^n for k >= 3.
  if (n >= from_uint64(meter_.budget().max_bits)) {
    throw BudgetExceeded(Cap::Bits, "phi_" + std::to_string(k) + "(n) exceeds the bit cap");
  }
  return extend(phi_seq_[k], k, *to_uint64(n), true);
}

BigNat HydraFunctions::H(int k, const BigNat& n) {
  if (k < 1) throw std::invalid_argument("H: k must be >= 1");
  if (n < 0) throw std::invalid_argument("H: n must be >= 0");
  auto nn = to_uint64(n);
  if (!nn) throw BudgetExceeded(Cap::Steps, "H_k(n) needs more than 2^64 steps");
  return extend(h_seq_[k], k, *nn, false);
}

BigNat HydraFunctions::extend(std::vector<BigNat>& seq, int k, std::uint64_t n, bool is_phi) {
  if (seq.empty()) seq.push_back(is_phi ? 1 : 0);
  if (n < seq.size()) return seq[n];
  std::uint64_t j = seq.size() - 1;
  BigNat cur = seq.back();
  meter_.require_steps(n - j, is_phi ? "phi recursion" : "H recursion");
  while (j < n) {
    meter_.charge();
    BigNat next = is_phi ? BigNat(cur + phi(k - 1, cur + from_uint64(j))) : BigNat(cur + phi(k, cur));
    meter_.check_bits(next);
    cur = std::move(next);
    ++j;
    if (seq.size() == j && bit_length(cur) <= kMemoBits) seq.push_back(cur);
  }
  return cur;
}

BigInt phi(int k, const BigInt& n, const EvalBudget& budget) {
  Meter meter(budget);
  return HydraFunctions(meter).phi(k, n);
}

BigNat hydra_H(int k, const BigNat& n, const EvalBudget& budget) {
  Meter meter(budget);
  return HydraFunctions(meter).H(k, n);
}

}  // namespace hydra
