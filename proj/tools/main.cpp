#include "hlpg/benchmarks.hpp"
#include "hlpg/correspondence.hpp"
#include "hlpg/dsl.hpp"
#include "hlpg/export.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// exit codes: 0 ok, 1 bad input, 2 I/O failure, 3 limit exceeded,
// 4 correspondence violation
constexpr int kExitInput = 1;
constexpr int kExitIo = 2;
constexpr int kExitLimit = 3;
constexpr int kExitViolation = 4;

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitIo, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitIo, "cannot write '" + path + "'"};
  out << content;
  if (!out) throw CliError{kExitIo, "cannot write '" + path + "'"};
}

hlpg::HighLevelGame load_game(const std::string& path) {
  auto source = read_file(path);
  auto result = hlpg::parse_game(source);
  for (const auto& d : result.diagnostics)
    std::cerr << path << ":" << d.text() << "\n";
  if (!result.ok())
    throw CliError{kExitInput, "'" + path + "' has errors"};
  return *result.game;
}

hlpg::ParamEnv parse_params(const std::vector<std::string>& defs) {
  hlpg::ParamEnv env;
  for (const auto& def : defs) {
    auto eq = def.find('=');
    std::size_t parsed = 0;
    std::int64_t value = 0;
    if (eq != std::string::npos) {
      try {
        value = std::stoll(def.substr(eq + 1), &parsed);
      } catch (const std::exception&) {
        parsed = 0;
      }
    }
    if (eq == std::string::npos || eq == 0 ||
        parsed != def.size() - eq - 1 || parsed == 0)
      throw CliError{kExitInput,
                     "parameter '" + def + "' is not of the form name=value"};
    env.values[def.substr(0, eq)] = value;
  }
  return env;
}

void require_params(const hlpg::HighLevelGame& game,
                    const hlpg::ParamEnv& env) {
  auto diags = hlpg::check_params(game, env);
  bool bad = false;
  for (const auto& d : diags) {
    std::cerr << (d.where.empty() ? "" : d.where + ": ") << d.message << "\n";
    if (d.severity == hlpg::Severity::Error) bad = true;
  }
  if (bad) throw CliError{kExitInput, "parameter binding rejected"};
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"high-level Petri games: parse, run, compile, verify"};
  app.require_subcommand(1);

  std::string file, output;
  std::vector<std::string> param_defs;
  std::size_t max_states = hlpg::Limits{}.max_states;
  std::size_t max_valuations = hlpg::Limits{}.max_valuations;
  bool json = false;

  auto add_common = [&](CLI::App* sub, bool with_params = true) {
    sub->add_option("file", file, "game file")->required();
    if (with_params)
      sub->add_option("-P,--param", param_defs,
                      "bind a parameter, e.g. -P n=2 (repeatable)");
    sub->add_option("--max-states", max_states,
                    "state cap for exploration");
    sub->add_option("--max-valuations", max_valuations,
                    "cap on valuations per transition");
  };
  auto limits = [&]() {
    hlpg::Limits l;
    l.max_states = max_states;
    l.max_valuations = max_valuations;
    return l;
  };

  auto* cmd_check = app.add_subcommand(
      "check", "parse, validate and typecheck a game file");

  auto* cmd_inst = app.add_subcommand(
      "instantiate", "compile a game with fixed parameters to a net");
  std::string format = "native";
  bool dedup = false, prune = false;
  cmd_inst->add_option("-f,--format", format, "native, pnml or dot")
      ->check(CLI::IsMember({"native", "pnml", "dot"}));
  cmd_inst->add_option("-o,--output", output, "output file (default stdout)");
  cmd_inst->add_flag("--dedup", dedup, "drop transitions with equal flows");
  cmd_inst->add_flag("--prune", prune, "drop isolated places");

  auto* cmd_reach = app.add_subcommand(
      "reach", "explore the token game and report the reachable graph");
  cmd_reach->add_flag("--json", json, "machine-readable output");

  auto* cmd_verify = app.add_subcommand(
      "verify", "check the compiled net against the token game");
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  bool inject_fault = false;
  cmd_verify->add_option("--seed", seed, "seed for sampled markings");
  cmd_verify->add_option("--samples", samples,
                         "number of sampled markings (default 1000)");
  cmd_verify
      ->add_flag("--inject-fault", inject_fault,
                 "corrupt the net first; the check must then fail")
      ->group(""); // hidden: exists to exercise the checker

  auto* cmd_bench = app.add_subcommand(
      "bench", "write one of the built-in benchmark families");
  std::string family, variant = "sync";
  cmd_bench->add_option("family", family, "as, cm or sr")
      ->required()
      ->check(CLI::IsMember({"as", "cm", "sr"}));
  cmd_bench->add_option("--variant", variant,
                        "as only: sync or seq information passing")
      ->check(CLI::IsMember({"sync", "seq"}));
  cmd_bench->add_option("-o,--output", output, "output file (default stdout)");
  cmd_bench->add_option("-P,--param", param_defs,
                        "validate a binding against the family");

  auto* cmd_stats = app.add_subcommand(
      "stats", "size figures of the compiled net");
  bool with_reach = false;
  cmd_stats->add_flag("--json", json, "machine-readable output");
  cmd_stats->add_flag("--reach", with_reach,
                      "also explore: markings, deadlocks, safety");

  auto* cmd_dot = app.add_subcommand(
      "dot", "render a game to Graphviz (compiled when -P is given)");
  cmd_dot->add_option("-o,--output", output, "output file (default stdout)");

  add_common(cmd_check);
  add_common(cmd_inst);
  add_common(cmd_reach);
  add_common(cmd_verify);
  add_common(cmd_stats);
  add_common(cmd_dot);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_check->parsed()) {
      auto game = load_game(file);
      if (!param_defs.empty()) {
        auto env = parse_params(param_defs);
        require_params(game, env);
        hlpg::Elaboration::build(game, env, limits());
      }
      std::cout << "ok: game '" << game.name << "', " << game.places.size()
                << " places, " << game.transitions.size() << " transitions\n";
      return 0;
    }

    if (cmd_inst->parsed()) {
      auto game = load_game(file);
      auto env = parse_params(param_defs);
      require_params(game, env);
      auto elab = hlpg::Elaboration::build(game, env, limits());
      auto net = hlpg::instantiate(elab).net;
      if (dedup) net = hlpg::dedup_transitions(net);
      if (prune) net = hlpg::prune_isolated_places(net);
      std::string text = format == "pnml" ? hlpg::export_pnml(net)
                         : format == "dot" ? hlpg::export_dot(net)
                                           : hlpg::export_native(net);
      write_output(output, text);
      return 0;
    }

    if (cmd_reach->parsed()) {
      auto game = load_game(file);
      auto env = parse_params(param_defs);
      require_params(game, env);
      auto elab = hlpg::Elaboration::build(game, env, limits());
      auto graph = hlpg::explore(elab);
      auto contact = hlpg::check_contact_free(elab, graph);
      bool bad = graph.marks_bad(game);
      if (json) {
        nlohmann::ordered_json j;
        j["markings"] = graph.nodes.size();
        j["edges"] = graph.edges.size();
        j["depth"] = graph.depth;
        j["deadlocks"] = graph.deadlock_count();
        j["bad_reachable"] = bad;
        j["contact_free"] = contact.ok;
        if (!contact.ok) j["contact_witness"] = contact.message;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "markings: " << graph.nodes.size() << "\n"
                  << "edges: " << graph.edges.size() << "\n"
                  << "depth: " << graph.depth << "\n"
                  << "deadlocks: " << graph.deadlock_count() << "\n"
                  << "bad reachable: " << yesno(bad) << "\n"
                  << "contact free: " << yesno(contact.ok) << "\n";
        if (!contact.ok) std::cout << "witness: " << contact.message << "\n";
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      auto game = load_game(file);
      auto env = parse_params(param_defs);
      require_params(game, env);
      hlpg::CorrespondenceOptions opts;
      opts.seed = seed;
      opts.samples = samples;
      if (inject_fault)
        opts.mutate = [](hlpg::LowLevelGame& net) {
          for (auto& t : net.transitions)
            if (!t.pre.empty()) {
              t.pre.pop_back();
              return;
            }
        };
      auto report = hlpg::check_correspondence(game, env, limits(), opts);
      if (report.passed) {
        std::cout << "correspondence holds: " << report.hl_nodes
                  << " markings, " << report.hl_edges << " edges, "
                  << report.samples_checked << " sampled markings\n";
        return 0;
      }
      std::cout << "correspondence violated: " << report.witness << "\n";
      return kExitViolation;
    }

    if (cmd_bench->parsed()) {
      hlpg::HighLevelGame game;
      if (family == "as")
        game = hlpg::alarm_system(variant == "seq"
                                      ? hlpg::InfoVariant::Sequential
                                      : hlpg::InfoVariant::Sync);
      else if (family == "cm")
        game = hlpg::concurrent_machines();
      else
        game = hlpg::self_reconfiguring_robots();
      if (!param_defs.empty())
        require_params(game, parse_params(param_defs));
      write_output(output, hlpg::print_game(game));
      return 0;
    }

    if (cmd_stats->parsed()) {
      auto game = load_game(file);
      auto env = parse_params(param_defs);
      require_params(game, env);
      auto elab = hlpg::Elaboration::build(game, env, limits());
      auto inst = hlpg::instantiate(elab);
      auto report = hlpg::stats(inst.net);
      if (with_reach) {
        auto graph = hlpg::lowlevel_reach(inst.net, limits());
        report.reach_nodes = graph.nodes.size();
        report.reach_edges = graph.edges.size();
        report.deadlocks = graph.deadlock_count();
        report.bad_reachable = graph.marks_bad(inst.net);
        report.one_safe = hlpg::check_one_safe(inst.net, limits()).ok;
        report.contact_free = hlpg::check_contact_free(elab).ok;
      }
      if (json) {
        std::cout << hlpg::stats_json(report);
      } else {
        std::cout << "name: " << report.name << "\n"
                  << "places: " << report.place_count << "\n"
                  << "transitions: " << report.transition_count << "\n"
                  << "arcs: " << report.arc_count << "\n"
                  << "initial tokens: " << report.init_size << "\n"
                  << "bad places: " << report.bad_count << "\n";
        if (report.reach_nodes)
          std::cout << "reachable markings: " << *report.reach_nodes << "\n"
                    << "reachable edges: " << *report.reach_edges << "\n"
                    << "deadlocks: " << *report.deadlocks << "\n"
                    << "bad reachable: " << yesno(*report.bad_reachable) << "\n"
                    << "one safe: " << yesno(*report.one_safe) << "\n"
                    << "contact free: " << yesno(*report.contact_free) << "\n";
      }
      return 0;
    }

    if (cmd_dot->parsed()) {
      auto game = load_game(file);
      if (param_defs.empty()) {
        write_output(output, hlpg::export_hl_dot(game));
        return 0;
      }
      auto env = parse_params(param_defs);
      require_params(game, env);
      auto elab = hlpg::Elaboration::build(game, env, limits());
      write_output(output, hlpg::export_dot(hlpg::instantiate(elab).net));
      return 0;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const hlpg::LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const hlpg::ContactViolation& e) {
    std::cerr << "contact violation: " << e.what() << "\n";
    return kExitInput;
  } catch (const hlpg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
