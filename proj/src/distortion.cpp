#include "hydra/distortion.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hydra/bounds.hpp"
#include "hydra/context.hpp"
#include "hydra/hydra.hpp"

namespace hydra {

HWord witness_u(int k, std::uint64_t n, const EvalBudget& budget) {
  if (k < 1) throw std::invalid_argument("witness_u: k must be >= 1");
  Meter meter(budget);
  meter.require_steps(n, "witness_u");
  return transcript_to_hword(FreeWord::power(k, static_cast<std::int64_t>(n)), meter);
}

WitnessPair witness_pair(int k, std::uint64_t n, const EvalBudget& budget) {
  if (k < 2) throw std::invalid_argument("witness_pair: k must be >= 2");
  if (n < 1) throw std::invalid_argument("witness_pair: n must be >= 1");
  Context ctx(budget);
  ctx.meter().require_steps(n, "witness_pair");
  const auto e = static_cast<std::int64_t>(n);
  FreeWord ak = FreeWord::power(k, e);
  HWord u = transcript_to_hword(ak, ctx.meter());

  WitnessPair out;
  out.v = GWord::from_free(ak) * GWord{{2, 1}, {0, 1}, {1, 1}, {2, -1}} *
          GWord::from_free(ak.inverse());
  out.w = hword_reduce(u * HWord{Letter::make(2, 1), Letter::make(1, 1), Letter::make(2, -1)} *
                       u.inverse());
  out.verified = collect(out.v, ctx.theta()) == eval_hword(out.w, ctx.theta());
  out.v_text = format(ak) + " a2 t a1 a2^-1 " + format(ak.inverse());
  out.w_text = format(u) + " x2 x1 x2^-1 " + format(u.inverse());
  return out;
}

namespace {

constexpr std::uint64_t kHashBase = 0x9e3779b97f4a7c15ull;
constexpr std::uint64_t kHashSeed = 0x2545f4914f6cdd1dull;
constexpr int kBitmapBits = 24;

inline std::uint64_t hash_push(std::uint64_t h, std::int32_t code) {
  return h * kHashBase + static_cast<std::uint64_t>(code + 4096);
}

std::uint64_t hash_word(const FreeWord& w) {
  std::uint64_t h = kHashSeed;
  for (Letter l : w) h = hash_push(h, l.code);
  return h;
}

// Depth-first walk over reduced H-words keeping the normal form of the
// current prefix on a stack.
class OracleWalker {
 public:
  OracleWalker(OracleIndex& index, std::size_t L, std::size_t record_above,
               const OracleOptions& options)
      : index_(index), k_(index.k), L_(static_cast<std::int64_t>(L)),
        record_above_(record_above), node_cap_(options.budget.max_steps) {
    Meter meter(options.budget);
    ThetaExpander theta(meter);
    images_.resize(static_cast<std::size_t>((2 * L_ + 1) * k_ * 2));
    for (std::int64_t q = -L_; q <= L_; ++q) {
      for (int i = 1; i <= k_; ++i) {
        for (int sign : {1, -1}) {
          auto& img = images_[slot(q, i, sign)];
          for (Letter l : theta.letter(i, -q, sign)) img.push_back(l.code);
        }
      }
    }
    if (options.targets) {
      targeted_ = true;
      bitmap_.assign(std::size_t{1} << (kBitmapBits - 6), 0);
      for (const FreeWord& t : *options.targets) {
        FreeWord v = reduce(t);
        std::uint64_t h = hash_word(v);
        bitmap_[h >> (64 - kBitmapBits + 6)] |= std::uint64_t{1} << ((h >> (64 - kBitmapBits)) & 63);
        auto& bucket = targets_[h];
        if (std::find(bucket.begin(), bucket.end(), v) == bucket.end()) bucket.push_back(v);
      }
    }
    hashes_.push_back(kHashSeed);
  }

  void run() { walk(0, -1, 0); }

 private:
  std::size_t slot(std::int64_t q, int i, int sign) const {
    return static_cast<std::size_t>(((q + L_) * k_ + (i - 1)) * 2 + (sign < 0 ? 1 : 0));
  }

  void push(std::int32_t c) {
    stack_.push_back(c);
    hashes_.push_back(hash_push(hashes_.back(), c));
  }

  void visit(std::size_t depth, std::int64_t r) {
    if (++nodes_ > node_cap_) {
      throw BudgetExceeded(Cap::Steps, "oracle enumeration exceeds the node cap");
    }
    if (depth <= record_above_ && record_above_ != kRecordAll) return;
    if (targeted_) {
      std::uint64_t h = hashes_.back();
      if (!(bitmap_[h >> (64 - kBitmapBits + 6)] >> ((h >> (64 - kBitmapBits)) & 63) & 1)) return;
      auto it = targets_.find(h);
      if (it == targets_.end()) return;
      for (const FreeWord& t : it->second) {
        if (t.size() != stack_.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < stack_.size() && same; ++i) same = t[i].code == stack_[i];
        if (same) record(t, r, depth);
      }
      return;
    }
    FreeWord v;
    v.reserve(stack_.size());
    for (std::int32_t c : stack_) v.push_back(Letter{c});
    record(v, r, depth);
  }

  void record(const FreeWord& v, std::int64_t r, std::size_t depth) {
    HWord witness;
    for (int g : path_) witness.push_back(Letter::make(g / 2 + 1, (g & 1) ? -1 : 1));
    index_.entries.try_emplace(NormalForm{v, r}, OracleEntry{depth, std::move(witness)});
  }

  void walk(std::size_t depth, int last, std::int64_t r) {
    visit(depth, r);
    if (static_cast<std::int64_t>(depth) == L_) return;
    for (int g = 0; g < 2 * k_; ++g) {
      if (last >= 0 && g == (last ^ 1)) continue;
      const int sign = (g & 1) ? -1 : 1;
      const int i = g / 2 + 1;
      const std::int64_t next_r = r + sign;
      const auto& img = images_[slot(sign > 0 ? r : next_r, i, sign)];
      const std::size_t popped_before = popped_.size();
      std::size_t pushed = 0;
      for (std::int32_t c : img) {
        if (!stack_.empty() && stack_.back() == -c) {
          popped_.push_back(stack_.back());
          stack_.pop_back();
          hashes_.pop_back();
        } else {
          push(c);
          ++pushed;
        }
      }
      path_.push_back(g);
      walk(depth + 1, g, next_r);
      path_.pop_back();
      for (std::size_t j = 0; j < pushed; ++j) {
        stack_.pop_back();
        hashes_.pop_back();
      }
      while (popped_.size() > popped_before) {
        push(popped_.back());
        popped_.pop_back();
      }
    }
  }

 public:
  static constexpr std::size_t kRecordAll = static_cast<std::size_t>(-1);

 private:
  OracleIndex& index_;
  int k_;
  std::int64_t L_;
  std::size_t record_above_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::int32_t>> images_;
  bool targeted_ = false;
  std::vector<std::uint64_t> bitmap_;
  std::unordered_map<std::uint64_t, std::vector<FreeWord>> targets_;
  std::vector<std::int32_t> stack_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::int32_t> popped_;
  std::vector<int> path_;
};

}  // namespace

OracleIndex build_oracle(int k, std::size_t L, const OracleOptions& options) {
  if (k < 1) throw std::invalid_argument("build_oracle: k must be >= 1");
  OracleIndex index;
  index.k = k;
  OracleWalker(index, L, OracleWalker::kRecordAll, options).run();
  index.radius = L;
  return index;
}

void extend_oracle(OracleIndex& index, std::size_t L, const OracleOptions& options) {
  if (L <= index.radius) return;
  OracleWalker(index, L, index.radius, options).run();
  index.radius = L;
}

std::optional<std::int64_t> oracle_member(const OracleIndex& index, std::int64_t r,
                                          const FreeWord& w) {
  FreeWord v = apply_theta(reduce(w), -r);
  auto it = index.entries.lower_bound(NormalForm{v, std::numeric_limits<std::int64_t>::min()});
  if (it == index.entries.end() || !(it->first.v == v)) return std::nullopt;
  return r - it->first.r;
}

void save_oracle(const OracleIndex& index, std::ostream& out) {
  std::vector<std::string> lines;
  lines.reserve(index.entries.size());
  for (const auto& [key, entry] : index.entries) {
    lines.push_back(format(key.v) + "\t" + std::to_string(key.r) + "\t" +
                    std::to_string(entry.min_length) + "\t" + format(entry.witness));
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& line : lines) out << line << '\n';
}

OracleIndex load_oracle(std::istream& in, int k, std::size_t radius) {
  OracleIndex index;
  index.k = k;
  index.radius = radius;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    if (fields.size() != 4) {
      throw ParseError("oracle line " + std::to_string(lineno) + ": expected 4 fields");
    }
    try {
      NormalForm key{parse_free_word(fields[0]), std::stoll(fields[1])};
      OracleEntry entry{static_cast<std::size_t>(std::stoull(fields[2])), parse_hword(fields[3])};
      index.entries.insert_or_assign(std::move(key), std::move(entry));
    } catch (const std::logic_error& e) {
      throw ParseError("oracle line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return index;
}

std::vector<BallElement> enumerate_ball(int k, std::size_t n_max, const SolverBudget& budget) {
  if (k < 1) throw std::invalid_argument("enumerate_ball: k must be >= 1");
  Meter meter(budget.eval);
  ThetaExpander theta(meter);
  CosetSolver solver(budget);

  std::vector<BallElement> ball;
  std::unordered_set<NormalForm, NormalFormHash> seen;
  std::vector<NormalForm> frontier{NormalForm{}};
  seen.insert(NormalForm{});
  for (std::size_t d = 0;; ++d) {
    for (const NormalForm& g : frontier) {
      BallElement e{g, d, std::nullopt, false};
      CosetAnswer a = solver.solve(0, g.v);
      if (auto* m = std::get_if<Member>(&a)) {
        if (m->s == -g.r) e.h_length = m->sigma.size();
      } else if (std::holds_alternative<Undecided>(a)) {
        e.undecided = true;
      }
      ball.push_back(std::move(e));
    }
    if (d == n_max) break;
    std::vector<NormalForm> next;
    for (const NormalForm& g : frontier) {
      auto offer = [&](NormalForm h) {
        if (seen.insert(h).second) next.push_back(std::move(h));
      };
      for (int i = 1; i <= k; ++i) {
        for (int sign : {1, -1}) {
          NormalForm h = g;
          multiply_a(h, Letter::make(i, sign), theta);
          offer(std::move(h));
        }
      }
      for (int sign : {1, -1}) {
        NormalForm h = g;
        multiply_t(h, sign);
        offer(std::move(h));
      }
    }
    frontier.swap(next);
  }
  return ball;
}

DistortionTable distortion_table(int k, std::size_t n_max, const SolverBudget& budget) {
  DistortionTable table;
  table.k = k;
  table.dist.assign(n_max + 1, 0);
  for (const BallElement& e : enumerate_ball(k, n_max, budget)) {
    ++table.elements;
    if (e.undecided) ++table.undecided;
    if (!e.h_length) continue;
    ++table.members;
    auto& slot = table.dist[e.g_length];
    slot = std::max<std::uint64_t>(slot, *e.h_length);
  }
  for (std::size_t n = 1; n <= n_max; ++n) table.dist[n] = std::max(table.dist[n], table.dist[n - 1]);
  return table;
}

}  // namespace hydra

namespace hydra {

std::vector<FreeWord> reduced_words(int k, std::size_t max_len) {
  std::vector<FreeWord> out{FreeWord{}};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (int idx = 1; idx <= k; ++idx) {
        for (int sign : {1, -1}) {
          Letter l = Letter::make(idx, sign);
          if (!out[i].empty() && out[i].back().cancels(l)) continue;
          FreeWord w = out[i];
          w.push_back(l);
          out.push_back(std::move(w));
        }
      }
    }
    level_start = level_end;
  }
  return out;
}

OracleCheckReport oracle_check(int k, std::size_t L, std::size_t max_len, std::int64_t max_r,
                               const SolverBudget& solver_budget,
                               const EvalBudget& oracle_budget) {
  OracleCheckReport report;
  auto words = reduced_words(k, max_len);
  std::vector<FreeWord> targets;
  for (const FreeWord& w : words) {
    for (std::int64_t r = -max_r; r <= max_r; ++r) targets.push_back(apply_theta(w, -r));
  }
  OracleOptions options;
  options.targets = std::move(targets);
  options.budget = oracle_budget;
  OracleIndex index = build_oracle(k, L, options);

  CosetSolver solver(solver_budget);
  auto problem = [&](const std::string& what, std::int64_t r, const FreeWord& w) {
    if (report.problems.size() < 20) {
      report.problems.push_back(what + " at r=" + std::to_string(r) + ", w=" + format(w));
    }
  };
  for (const FreeWord& w : words) {
    for (std::int64_t r = -max_r; r <= max_r; ++r) {
      ++report.queries;
      auto oracle = oracle_member(index, r, w);
      if (oracle) ++report.oracle_yes;
      CosetAnswer answer;
      try {
        answer = solver.solve(r, w);
      } catch (const VerificationFailure& e) {
        ++report.disagreements;
        problem(std::string("verification failed: ") + e.what(), r, w);
        continue;
      }
      if (auto* m = std::get_if<Member>(&answer)) {
        ++report.members;
        if (oracle && *oracle != m->s) {
          ++report.disagreements;
          problem("solver s=" + std::to_string(m->s) + " vs oracle s=" + std::to_string(*oracle), r, w);
        }
        if (!oracle && m->sigma.size() <= L) {
          ++report.disagreements;
          problem("solver witness within radius but oracle has none", r, w);
        }
        int rank = rank_of(w);
        if (rank > 0) {
          try {
            std::size_t pieces = partition_pieces(w, rank).pieces.size();
            BigNat l = from_uint64(w.size());
            BigNat p = from_uint64(pieces);
            BigNat n = from_int64(r < 0 ? -r : r);
            BigNat s_bound = K_bound(rank, l, p, n, solver_budget.eval);
            BigNat len_bound = Psi_bound(rank, l, p, n, solver_budget.eval);
            ++report.bound_checks;
            if (abs(from_int64(m->s)) > s_bound || from_uint64(m->sigma.size()) > len_bound) {
              ++report.bound_violations;
              problem("bounds violated (|s| <= " + to_string(s_bound) + ", length <= " +
                          to_string(len_bound) + ")",
                      r, w);
            }
          } catch (const BudgetExceeded&) {
            ++report.bound_skipped;
          }
        }
      } else if (std::holds_alternative<NotInLambda>(answer)) {
        ++report.not_in_lambda;
        if (oracle) {
          ++report.disagreements;
          problem("solver says not in Lambda, oracle s=" + std::to_string(*oracle), r, w);
        }
      } else {
        ++report.undecided;
        if (oracle) {
          ++report.disagreements;
          problem("solver undecided, oracle s=" + std::to_string(*oracle), r, w);
        }
      }
    }
  }
  return report;
}

}  // namespace hydra
