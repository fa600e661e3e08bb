#include "hydra/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "hydra/ackermann.hpp"
#include "hydra/bounds.hpp"
#include "hydra/distortion.hpp"
#include "hydra/group.hpp"
#include "hydra/hydra.hpp"
#include "hydra/solver.hpp"

namespace hydra::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
  Status status;
  std::string message;
};

struct Output {
  Status status = Status::Ok;
  Json payload = Json::object();
  std::vector<std::string> lines;
};

HydraWord hydra_from_text(const std::string& text) {
  std::vector<Run> runs;
  for (const Term& t : parse_terms(text)) {
    if (t.symbol != 'a') throw ParseError("a hydra uses only the letters a_i");
    if (t.exponent < 0) throw ParseError("a hydra is a positive word");
    push_run(runs, t.index, static_cast<std::uint64_t>(t.exponent));
  }
  return HydraWord(runs);
}

BigNat parse_nat(const std::string& text, const char* what) {
  BigInt v;
  try {
    v = parse_bigint(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(std::string(what) + " must be an integer, got '" + text + "'");
  }
  if (v < 0) throw ParseError(std::string(what) + " must be >= 0");
  return v;
}

Json nf_json(const NormalForm& g) { return Json{{"v", format(g.v)}, {"r", g.r}}; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

int exit_code(Status status) {
  switch (status) {
    case Status::Ok: return 0;
    case Status::NotMember: return 1;
    case Status::ParseError: return 2;
    case Status::BudgetExceeded: return 3;
    case Status::Undecided: return 4;
    case Status::InternalError: return 70;
  }
  return 70;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Ok: return "ok";
    case Status::NotMember: return "not_member";
    case Status::ParseError: return "parse_error";
    case Status::BudgetExceeded: return "budget_exceeded";
    case Status::Undecided: return "undecided";
    case Status::InternalError: return "internal_error";
  }
  return "internal_error";
}

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  EvalBudget budget;
  CLI::App app{"Hydra battles, Ackermann functions and hydra groups", "hydra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-bits", budget.max_bits, "cap on the bit-length of any integer")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-steps", budget.max_steps, "cap on rewriting and recursion steps")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", result.json, "print JSON");

  std::function<Output()> action;

  // battle
  std::string battle_word;
  bool battle_trace = false;
  bool battle_history = false;
  auto* battle_cmd = app.add_subcommand("battle", "fight a hydra and count the strikes");
  battle_cmd->add_option("word", battle_word, "positive word, e.g. \"a2 a3 a1\"")->required();
  battle_cmd->add_flag("--trace", battle_trace, "also print the transcript as an H-word");
  battle_cmd->add_flag("--history", battle_history, "also print every intermediate hydra");
  battle_cmd->callback([&] {
    action = [&] {
      Output o;
      HydraWord w = hydra_from_text(battle_word);
      Meter meter(budget);
      BattleResult res = battle(w, meter, BattleOptions{battle_trace, battle_history});
      o.payload["duration"] = hydra::to_string(res.duration);
      o.lines.push_back("duration " + hydra::to_string(res.duration));
      if (res.transcript) {
        std::string t = format_runs(*res.transcript, 'x');
        o.payload["transcript"] = t;
        o.lines.push_back("transcript " + t);
      }
      if (battle_history) {
        Json h = Json::array();
        std::vector<std::string> words;
        for (const HydraWord& step : res.history) {
          h.push_back(format(step));
          words.push_back(format(step));
        }
        o.payload["history"] = h;
        o.lines.push_back(join(words, " -> "));
      }
      return o;
    };
  });

  // hk / phi / ack
  int fn_k = 0;
  std::string fn_n;
  std::string ack_iter_l;
  auto* hk_cmd = app.add_subcommand("hk", "H_k(n) by recursion");
  auto* phi_cmd = app.add_subcommand("phi", "phi_k(n) by recursion");
  auto* ack_cmd = app.add_subcommand("ack", "Ackermann A_k(n)");
  for (auto* cmd : {hk_cmd, phi_cmd, ack_cmd}) {
    cmd->add_option("k", fn_k)->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("n", fn_n)->required();
  }
  ack_cmd->add_option("--iter", ack_iter_l, "apply A_k this many times");
  auto value_output = [](int k, const std::string& n, const BigInt& v) {
    Output o;
    o.payload["k"] = k;
    o.payload["n"] = n;
    o.payload["value"] = hydra::to_string(v);
    o.lines.push_back(hydra::to_string(v));
    return o;
  };
  hk_cmd->callback([&] {
    action = [&] {
      if (fn_k < 1) throw ParseError("k must be >= 1");
      BigNat n = parse_nat(fn_n, "n");
      return value_output(fn_k, fn_n, hydra_H(fn_k, n, budget));
    };
  });
  phi_cmd->callback([&] {
    action = [&] {
      if (fn_k < 1) throw ParseError("k must be >= 1");
      BigInt n;
      try {
        n = parse_bigint(fn_n);
      } catch (const std::invalid_argument&) {
        throw ParseError("n must be an integer, got '" + fn_n + "'");
      }
      return value_output(fn_k, fn_n, phi(fn_k, n, budget));
    };
  });
  ack_cmd->callback([&] {
    action = [&] {
      BigNat n = parse_nat(fn_n, "n");
      if (ack_iter_l.empty()) return value_output(fn_k, fn_n, ack(fn_k, n, budget));
      BigNat l = parse_nat(ack_iter_l, "--iter");
      Output o = value_output(fn_k, fn_n, ack_iter(fn_k, l, n, budget));
      o.payload["iterations"] = ack_iter_l;
      return o;
    };
  });

  // nf / hreduce
  std::string nf_word;
  auto* nf_cmd = app.add_subcommand("nf", "normal form v t^r of a word in a_i and t");
  nf_cmd->add_option("word", nf_word)->required();
  nf_cmd->callback([&] {
    action = [&] {
      Output o;
      NormalForm g = collect(parse_gword(nf_word), budget);
      o.payload = nf_json(g);
      o.lines.push_back(format(g));
      return o;
    };
  });
  std::string hr_word;
  auto* hr_cmd = app.add_subcommand("hreduce", "freely reduce a word in the x_i");
  hr_cmd->add_option("word", hr_word)->required();
  hr_cmd->callback([&] {
    action = [&] {
      Output o;
      HWord sigma = hword_reduce(parse_hword(hr_word));
      o.payload["sigma"] = format(sigma);
      o.payload["length"] = sigma.size();
      o.lines.push_back(format(sigma));
      return o;
    };
  });

  // member
  std::int64_t member_r = 0;
  std::string member_word;
  SolverBudget solver_budget;
  auto* member_cmd = app.add_subcommand("member", "decide t^r w in H t^s and find s and a witness");
  member_cmd->add_option("--r", member_r)->required();
  member_cmd->add_option("--word", member_word)->required();
  member_cmd->add_option("--max-candidate-s", solver_budget.max_candidate_s)
      ->check(CLI::PositiveNumber);
  member_cmd->add_option("--max-depth", solver_budget.max_depth)->check(CLI::PositiveNumber);
  member_cmd->callback([&] {
    action = [&] {
      Output o;
      FreeWord w = parse_free_word(member_word);
      solver_budget.eval = budget;
      CosetAnswer a = solve(member_r, w, solver_budget);
      if (auto* m = std::get_if<Member>(&a)) {
        o.payload["verdict"] = "member";
        o.payload["s"] = m->s;
        o.payload["sigma"] = format(m->sigma);
        o.payload["length"] = m->sigma.size();
        o.lines.push_back("s " + std::to_string(m->s));
        o.lines.push_back("sigma " + format(m->sigma));
      } else if (std::holds_alternative<NotInLambda>(a)) {
        o.status = Status::NotMember;
        o.payload["verdict"] = "not_in_lambda";
        o.lines.push_back("not in any coset H t^s");
      } else {
        const auto& u = std::get<Undecided>(a);
        o.status = Status::Undecided;
        o.payload["verdict"] = "undecided";
        o.payload["reason"] = hydra::to_string(u.reason);
        o.payload["detail"] = u.detail;
        o.lines.push_back("undecided (" + hydra::to_string(u.reason) + "): " + u.detail);
      }
      return o;
    };
  });

  // witness
  int wit_k = 0;
  std::uint64_t wit_n = 0;
  bool wit_pair = false;
  auto* wit_cmd = app.add_subcommand("witness", "the positive word u_{k,n}, or the distortion pair");
  wit_cmd->add_option("k", wit_k)->required()->check(CLI::PositiveNumber);
  wit_cmd->add_option("n", wit_n)->required()->check(CLI::PositiveNumber);
  wit_cmd->add_flag("--pair", wit_pair, "print the short G-word and the long H-word");
  wit_cmd->callback([&] {
    action = [&] {
      Output o;
      if (!wit_pair) {
        HWord u = witness_u(wit_k, wit_n, budget);
        o.payload["u"] = format(u);
        o.payload["length"] = u.size();
        o.lines.push_back(format(u));
        return o;
      }
      if (wit_k < 2) throw ParseError("--pair needs k >= 2");
      WitnessPair p = witness_pair(wit_k, wit_n, budget);
      o.payload["v"] = p.v_text;
      o.payload["v_length"] = p.v.size();
      o.payload["w"] = p.w_text;
      o.payload["w_length"] = p.w.size();
      o.payload["verified"] = p.verified;
      o.lines.push_back(p.v_text);
      o.lines.push_back(p.w_text);
      o.lines.push_back("lengths " + std::to_string(p.v.size()) + " " + std::to_string(p.w.size()) +
                        (p.verified ? ", verified" : ", NOT verified"));
      if (!p.verified) o.status = Status::InternalError;
      return o;
    };
  });

  // distortion
  int dist_k = 0;
  std::size_t dist_n = 0;
  std::string dist_format = "text";
  auto* dist_cmd = app.add_subcommand("distortion", "exact distortion of H_k in G_k on a small ball");
  dist_cmd->add_option("--k", dist_k)->required()->check(CLI::PositiveNumber);
  dist_cmd->add_option("--n-max", dist_n)->required();
  dist_cmd->add_option("--format", dist_format)->check(CLI::IsMember({"text", "csv"}));
  dist_cmd->callback([&] {
    action = [&] {
      Output o;
      SolverBudget sb;
      sb.eval = budget;
      DistortionTable t = distortion_table(dist_k, dist_n, sb);
      Json rows = Json::array();
      if (dist_format == "csv") o.lines.push_back("n,dist");
      for (std::size_t n = 0; n < t.dist.size(); ++n) {
        rows.push_back(Json{{"n", n}, {"dist", t.dist[n]}});
        o.lines.push_back(dist_format == "csv"
                              ? std::to_string(n) + "," + std::to_string(t.dist[n])
                              : "Dist(" + std::to_string(n) + ") = " + std::to_string(t.dist[n]));
      }
      o.payload["k"] = dist_k;
      o.payload["rows"] = rows;
      o.payload["elements"] = t.elements;
      o.payload["members"] = t.members;
      o.payload["undecided"] = t.undecided;
      if (t.undecided > 0) o.status = Status::Undecided;
      return o;
    };
  });

  // bounds
  int bnd_k = 0;
  std::string bnd_l = "0";
  std::string bnd_p = "1";
  std::string bnd_n = "0";
  auto* bnd_cmd = app.add_subcommand("bounds", "kappa, K, psi, Psi and the constants D, E, F");
  bnd_cmd->add_option("--k", bnd_k)->required()->check(CLI::PositiveNumber);
  bnd_cmd->add_option("--l", bnd_l);
  bnd_cmd->add_option("--p", bnd_p);
  bnd_cmd->add_option("--n", bnd_n);
  bnd_cmd->callback([&] {
    action = [&] {
      Output o;
      BigNat l = parse_nat(bnd_l, "--l");
      BigNat p = parse_nat(bnd_p, "--p");
      BigNat n = parse_nat(bnd_n, "--n");
      AckermannConstants c = ackermann_constants(bnd_k, budget);
      std::vector<std::pair<std::string, BigNat>> values = {
          {"kappa", kappa_bound(bnd_k, l, n, budget)},
          {"K", K_bound(bnd_k, l, p, n, budget)},
          {"psi", psi_bound(bnd_k, l, n, budget)},
          {"Psi", Psi_bound(bnd_k, l, p, n, budget)},
          {"D", c.D},
          {"E", c.E},
          {"F", c.F}};
      for (const auto& [name, v] : values) {
        o.payload[name] = hydra::to_string(v);
        o.lines.push_back(name + " " + hydra::to_string(v));
      }
      return o;
    };
  });

  // oracle-check
  int oc_k = 2;
  std::size_t oc_L = 10;
  std::size_t oc_len = 3;
  std::int64_t oc_r = 2;
  std::string oc_save;
  auto* oc_cmd = app.add_subcommand("oracle-check", "compare the solver with brute-force search");
  oc_cmd->add_option("--k", oc_k)->check(CLI::PositiveNumber);
  oc_cmd->add_option("--L", oc_L, "search radius in H");
  oc_cmd->add_option("--max-len", oc_len, "longest query word");
  oc_cmd->add_option("--max-r", oc_r, "largest |r|")->check(CLI::NonNegativeNumber);
  oc_cmd->add_option("--save", oc_save, "write the full index of radius L to this file");
  oc_cmd->callback([&] {
    action = [&] {
      Output o;
      SolverBudget sb;
      sb.eval = budget;
      EvalBudget ob{budget.max_bits, std::max<std::uint64_t>(budget.max_steps, 4'000'000'000ull)};
      OracleCheckReport rep = oracle_check(oc_k, oc_L, oc_len, oc_r, sb, ob);
      const std::vector<std::pair<std::string, std::size_t>> counts = {
          {"queries", rep.queries},         {"oracle_yes", rep.oracle_yes},
          {"members", rep.members},         {"not_in_lambda", rep.not_in_lambda},
          {"undecided", rep.undecided},     {"disagreements", rep.disagreements},
          {"bound_checks", rep.bound_checks}, {"bound_violations", rep.bound_violations}};
      for (const auto& [name, v] : counts) {
        o.payload[name] = v;
        o.lines.push_back(name + " " + std::to_string(v));
      }
      o.payload["problems"] = rep.problems;
      for (const auto& p : rep.problems) o.lines.push_back("problem: " + p);
      if (!oc_save.empty()) {
        OracleOptions opts;
        opts.budget = EvalBudget{budget.max_bits, budget.max_steps};
        OracleIndex full = build_oracle(oc_k, oc_L, opts);
        std::ofstream f(oc_save, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + oc_save);
        save_oracle(full, f);
        o.payload["saved"] = full.entries.size();
      }
      if (rep.disagreements > 0 || rep.bound_violations > 0) o.status = Status::InternalError;
      return o;
    };
  });

  auto fail = [&](Status status, const std::string& message, const Json& extra = Json::object()) {
    result.status = status;
    result.payload = Json{{"status", to_string(status)}, {"error", message}};
    for (auto it = extra.begin(); it != extra.end(); ++it) result.payload[it.key()] = it.value();
    result.text = "error: " + message;
    return result;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.help = true;
    result.text = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.help = true;
    result.text = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    return fail(Status::ParseError, e.what());
  }

  try {
    Output o = action();
    result.status = o.status;
    result.payload = Json{{"status", to_string(o.status)}};
    for (auto it = o.payload.begin(); it != o.payload.end(); ++it) result.payload[it.key()] = it.value();
    result.text = join(o.lines, "\n");
  } catch (const ParseError& e) {
    return fail(Status::ParseError, e.what());
  } catch (const NotInDomain& e) {
    return fail(Status::ParseError, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(Status::BudgetExceeded, e.what(), Json{{"cap", hydra::to_string(e.cap())}});
  } catch (const std::invalid_argument& e) {
    return fail(Status::ParseError, e.what());
  } catch (const std::exception& e) {
    return fail(Status::InternalError, e.what());
  }
  return result;
}

int emit(const CommandResult& result, std::ostream& out, std::ostream& err) {
  if (result.help) {
    out << result.text << '\n';
    return 0;
  }
  const bool is_error = result.status == Status::ParseError ||
                        result.status == Status::BudgetExceeded ||
                        (result.status == Status::InternalError && result.payload.contains("error"));
  std::ostream& stream = is_error ? err : out;
  if (result.json) {
    stream << result.payload.dump() << '\n';
  } else {
    stream << result.text << '\n';
  }
  return exit_code(result.status);
}

}  // namespace hydra::cli
