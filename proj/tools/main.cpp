#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tapes/cr.hpp"
#include "tapes/hypergraph.hpp"
#include "tapes/matrix.hpp"
#include "tapes/order.hpp"
#include "tapes/rel.hpp"
#include "tapes/selftest.hpp"
#include "tapes/text.hpp"

namespace {

using namespace tapes;

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct LoadedSignature {
  MonSignature sig;
  ReductionTable table;  // nonempty when the file had polynomial types
};

LoadedSignature load_signature(const std::string& path, bool frobenius) {
  auto parsed = parse_signature(slurp(path));
  LoadedSignature out;
  if (std::holds_alternative<MonSignature>(parsed)) {
    out.sig = std::get<MonSignature>(parsed);
  } else {
    auto [sig, table] = reduce_rig_signature(std::get<RigSignature>(parsed));
    out.sig = sig;
    out.table = table;
  }
  out.sig.frobenius_enabled = frobenius;
  return out;
}

void emit(const std::string& text, const std::string& dot_path) {
  if (dot_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(dot_path);
    if (!f) throw Error("cannot write '" + dot_path + "'");
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tape diagrams: normal forms, orders and the relation calculus"};
  app.require_subcommand(1);

  std::string sig_path, mode_name, model_path, dot_path;
  std::string tape_text, circuit_text;
  std::uint64_t seed = 0;
  long long budget = 1 << 16;
  bool as_json = false;

  auto add_common = [&](CLI::App* cmd, bool needs_sig) {
    auto* opt = cmd->add_option("--sig", sig_path, "signature file");
    if (needs_sig) opt->required();
    cmd->add_option("--mode", mode_name,
                    "normal form mode: multiset (default), set, cb");
  };

  auto* cmd_parse = app.add_subcommand("parse", "parse and type an expression");
  auto* cmd_norm =
      app.add_subcommand("normalize", "print the matrix normal form");
  auto* cmd_decide =
      app.add_subcommand("decide", "decide equivalence or inclusion");
  auto* cmd_eval =
      app.add_subcommand("eval", "evaluate against a finite model");
  auto* cmd_render =
      app.add_subcommand("render", "emit DOT for a circuit's hypergraph");
  auto* cmd_self = app.add_subcommand("selftest", "run the property suites");

  std::string expr1, op, expr2, expr;

  add_common(cmd_parse, true);
  cmd_parse->add_option("--tape", tape_text, "tape expression");
  cmd_parse->add_option("--circuit", circuit_text, "circuit expression");
  cmd_parse->add_option("expr", expr, "relation expression");

  add_common(cmd_norm, true);
  cmd_norm->add_option("--tape", tape_text, "tape expression");
  cmd_norm->add_option("expr", expr, "relation expression");
  cmd_norm->add_flag("--json", as_json, "print the matrix as JSON");

  bool decide_tapes = false;
  add_common(cmd_decide, true);
  cmd_decide->add_flag("--tape", decide_tapes,
                       "decide two tape expressions instead of relation "
                       "expressions");
  cmd_decide->add_option("expr1", expr1, "left expression")->required();
  cmd_decide->add_option("op", op, "== or <=")->required();
  cmd_decide->add_option("expr2", expr2, "right expression")->required();
  cmd_decide->add_option("--seed", seed, "counterexample search seed");
  cmd_decide->add_option("--budget", budget,
                         "counterexample search budget (interpretations)");

  add_common(cmd_eval, true);
  cmd_eval->add_option("--model", model_path, "interpretation JSON file")
      ->required();
  cmd_eval->add_option("--tape", tape_text, "tape expression");
  cmd_eval->add_option("expr", expr, "relation expression");

  add_common(cmd_render, true);
  cmd_render->add_option("--circuit", circuit_text, "circuit expression")
      ->required();
  cmd_render->add_option("--dot", dot_path, "output DOT file (default stdout)");

  cmd_self->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_self->parsed()) {
      return run_selftest(seed, std::cout) ? 0 : 1;
    }

    // Relation-calculus commands run in cb mode; raw tape commands default
    // to multiset and honor --mode.
    bool is_cr = tape_text.empty() && circuit_text.empty() && !decide_tapes;
    Mode mode = Mode::MULTISET;
    if (!mode_name.empty())
      mode = mode_from_text(mode_name);
    else if (is_cr)
      mode = Mode::CB;
    if (is_cr && mode != Mode::CB)
      throw ModeError("relation expressions decide in cb mode");
    LoadedSignature ls = load_signature(sig_path, mode == Mode::CB);

    if (cmd_parse->parsed()) {
      if (!circuit_text.empty()) {
        Circuit c = parse_circuit(circuit_text, ls.sig);
        auto [d, co] = type_check_circuit(c, ls.sig);
        std::cout << to_text(c) << " : " << to_text(d) << " -> " << to_text(co)
                  << "\n";
      } else if (!tape_text.empty()) {
        Tape t = parse_tape(tape_text, ls.sig);
        auto [d, co] = type_check_tape(t, ls.sig);
        std::cout << to_text(t) << " : " << to_text(d) << " -> " << to_text(co)
                  << "\n";
      } else {
        CrExpr e = parse_cr(expr, ls.sig);
        Sort a = cr_sort(ls.sig);
        std::cout << to_text(e) << " : " << a << " -> " << a << "\n";
      }
      return 0;
    }

    if (cmd_norm->parsed()) {
      Tape t;
      if (!tape_text.empty())
        t = parse_tape(tape_text, ls.sig);
      else
        t = encode(parse_cr(expr, ls.sig), ls.sig);
      TapeMatrix m = to_matrix(t, ls.sig, mode);
      std::cout << (as_json ? to_json(m) : pretty(m)) << "\n";
      return 0;
    }

    if (cmd_decide->parsed()) {
      if (op != "==" && op != "<=")
        throw Error("decision operator must be == or <=, got '" + op + "'");
      if (decide_tapes) {
        Tape t1 = parse_tape(expr1, ls.sig);
        Tape t2 = parse_tape(expr2, ls.sig);
        bool holds = op == "=="
                         ? tape_equiv(t1, t2, ls.sig, mode)
                         : tape_leq(t1, t2, ls.sig, mode);
        std::cout << (holds ? "holds" : "fails") << "\n";
        return holds ? 0 : 1;
      }
      CrExpr e1 = parse_cr(expr1, ls.sig);
      CrExpr e2 = parse_cr(expr2, ls.sig);
      SearchOptions opts;
      opts.seed = seed;
      opts.budget = budget;
      Verdict v = op == "==" ? decide_equiv(e1, e2, ls.sig, opts)
                             : decide_leq(e1, e2, ls.sig, opts);
      if (v.holds) {
        std::cout << "holds\n";
        return 0;
      }
      std::cout << "fails\n";
      if (v.counterexample) std::cout << to_json(*v.counterexample) << "\n";
      return 1;
    }

    if (cmd_eval->parsed()) {
      Interpretation in = interpretation_from_json(slurp(model_path));
      FiniteRelation r = !tape_text.empty()
                             ? eval_tape(parse_tape(tape_text, ls.sig), in,
                                         ls.sig)
                             : eval_cr(parse_cr(expr, ls.sig), in, ls.sig);
      std::cout << to_json(r, in) << "\n";
      return 0;
    }

    if (cmd_render->parsed()) {
      Circuit c = parse_circuit(circuit_text, ls.sig);
      InterfacedHypergraph h = to_hypergraph(c, ls.sig);
      emit(to_dot(h, "circuit"), dot_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
