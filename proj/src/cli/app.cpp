#include "klab/cli/app.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>

#include "klab/cli/commands.hpp"
#include "klab/cli/verify.hpp"
#include "klab/error.hpp"
#include "klab/structures/io.hpp"

namespace klab::cli {
namespace {

struct Flags {
  RunConfig cfg;
  std::string report;
};

void add_output(CLI::App* sub, Flags& f) {
  sub->add_option("--output", f.cfg.output, "write the report here instead of stdout");
  sub->add_option("--format", f.cfg.format, "json (default) or csv (certification table)")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", f.cfg.seed, "64-bit seed, echoed into the report");
}

CLI::Option* add_size(CLI::App* sub, const char* name, std::optional<std::size_t>& target, const char* help) {
  return sub->add_option(name, target, help)->check(CLI::NonNegativeNumber);
}

void emit(const Outcome& outcome, const RunConfig& cfg, std::ostream& out) {
  const std::string text = cfg.format == "csv" ? certifications_csv(outcome.certified)
                                               : outcome.document.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_file_atomically(cfg.output, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Keisler-measure laboratory", args.empty() ? "keisler-lab" : args.front()};
  app.require_subcommand(1);
  Flags f;
  RunConfig& c = f.cfg;

  auto* gen = app.add_subcommand("gen", "generate a structure (random maximal K^r_s-free, circulant, search)");
  gen->add_option("--graph", c.graph, "structure spec, e.g. gen:60:3:4:seed=5 or circulant:13:1,5");
  add_size(gen, "--n", c.n, "vertices (with --r/--s/--seed instead of --graph)");
  add_size(gen, "--r", c.r, "arity");
  add_size(gen, "--s", c.s, "forbidden clique size");
  gen->add_option("--budget", c.budget, "alpha_s search node budget");
  add_output(gen, f);

  auto* color = app.add_subcommand("color", "greedy colouring of a weighted hypergraph file");
  color->add_option("--input", c.inputs, "weighted hypergraph JSON")->required();
  color->add_flag("--brute", c.brute, "also enumerate every colouring (at most 12 vertices)");
  add_output(color, f);

  auto* fam = app.add_subcommand("fam", "approximate p_E by an embedded graph with small alpha_s");
  fam->add_option("--phi", c.phi, "formula phi(x1; y...)")->required();
  fam->add_option("--epsilon", c.epsilon, "target error a/b")->required();
  fam->add_option("--graph", c.graph, "the graph G")->required();
  fam->add_option("--ambient", c.ambient, "K_s-free ambient graph")->required();
  add_size(fam, "--s", c.s, "forbidden clique size (default 3)");
  fam->add_option("--budget", c.budget, "node budget for alpha_s and the embedding search");
  add_output(fam, f);

  auto* adversary = app.add_subcommand("adversary", "defeat n random (r-1)-tuples with one new vertex");
  adversary->add_option("--ambient", c.ambient, "K^r_s-free ambient")->required();
  add_size(adversary, "--r", c.r, "arity (must match the ambient)");
  add_size(adversary, "--s", c.s, "forbidden clique size")->required();
  add_size(adversary, "--n", c.n, "number of tuples")->required();
  add_output(adversary, f);

  auto* sat = app.add_subcommand("satprobe", "search M for tuples avoiding random parameters");
  sat->add_option("--ambient", c.ambient, "K^r_s-free ambient")->required();
  add_size(sat, "--m", c.m, "M = the first m vertices (default: all)");
  add_size(sat, "--k", c.k, "parameters per trial (default 4)");
  sat->add_option("--trials", c.trials, "number of parameter sets (default 1)");
  add_output(sat, f);

  auto* tp2 = app.add_subcommand("tp2", "TP2 grid witness in a feq2 structure");
  add_size(tp2, "--k", c.k, "grid size")->required();
  tp2->add_option("--paths", c.paths, "'all' or the number of paths to sample");
  tp2->add_option("--input", c.inputs, "feq2 structure (default: tp2grid:<k>)");
  add_output(tp2, f);

  auto* order = app.add_subcommand("order", "alternating order-property witness");
  order->add_option("--ambient", c.ambient, "K_s-free ambient graph")->required();
  add_size(order, "--s", c.s, "forbidden clique size (default 3)");
  add_size(order, "--q", c.q, "number of pairs")->required();
  add_output(order, f);

  auto* measures = app.add_subcommand("check-measures", "self-test the measure calculus on random measures");
  measures->add_option("--trials", c.trials, "number of random trials (default 100)");
  add_output(measures, f);

  auto* verify = app.add_subcommand("verify", "recompute every certification of a report");
  verify->add_option("--report", f.report, "report JSON")->required();
  verify->add_option("--input", c.inputs, "role=path replacing a recorded input");

  const std::map<CLI::App*, std::function<Outcome(const RunConfig&)>> commands = {
      {gen, run_gen},           {color, run_color},   {fam, run_fam},   {adversary, run_adversary},
      {sat, run_satprobe},      {tp2, run_tp2},       {order, run_order}, {measures, run_check_measures},
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return 1;
  }

  try {
    if (verify->parsed()) return verify_report(f.report, c.inputs, out, err);
    for (const auto& [sub, command] : commands) {
      if (!sub->parsed()) continue;
      c.subcommand = sub->get_name();
      const Outcome outcome = command(c);
      emit(outcome, c, out);
      if (!outcome.all_hold()) {
        err << "a certification failed; see the report\n";
        return 2;
      }
      return 0;
    }
  } catch (const precondition_failed& e) {
    err << "precondition failed (" << e.which() << "): " << e.what() << "\n";
    return 2;
  } catch (const embedding_not_found& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 1;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace klab::cli
