#include "hlpg/benchmarks.hpp"
#include "hlpg/correspondence.hpp"
#include "hlpg/dsl.hpp"
#include "hlpg/export.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

hlpg::ParamEnv to_env(const std::map<std::string, std::int64_t>& params) {
  hlpg::ParamEnv env;
  for (const auto& [name, value] : params) env.values[name] = value;
  return env;
}

hlpg::Limits to_limits(std::size_t max_states, std::size_t max_valuations) {
  hlpg::Limits limits;
  limits.max_states = max_states;
  limits.max_valuations = max_valuations;
  return limits;
}

void require_binding(const hlpg::HighLevelGame& game,
                     const hlpg::ParamEnv& env) {
  std::string message;
  for (const auto& d : hlpg::check_params(game, env)) {
    if (d.severity != hlpg::Severity::Error) continue;
    if (!message.empty()) message += "; ";
    message += d.message;
  }
  if (!message.empty()) throw py::value_error(message);
}

hlpg::Elaboration elaborate(const hlpg::HighLevelGame& game,
                            const std::map<std::string, std::int64_t>& params,
                            std::size_t max_states,
                            std::size_t max_valuations) {
  auto env = to_env(params);
  require_binding(game, env);
  return hlpg::Elaboration::build(game, env,
                                  to_limits(max_states, max_valuations));
}

py::dict reach_summary(const hlpg::HighLevelGame& game,
                       const std::map<std::string, std::int64_t>& params,
                       std::size_t max_states, std::size_t max_valuations) {
  auto elab = elaborate(game, params, max_states, max_valuations);
  auto graph = hlpg::explore(elab);
  auto contact = hlpg::check_contact_free(elab, graph);
  py::dict out;
  out["markings"] = graph.nodes.size();
  out["edges"] = graph.edges.size();
  out["depth"] = graph.depth;
  out["deadlocks"] = graph.deadlock_count();
  out["bad_reachable"] = graph.marks_bad(game);
  out["contact_free"] = contact.ok;
  if (!contact.ok) out["contact_witness"] = contact.message;
  return out;
}

py::dict verify_summary(const hlpg::HighLevelGame& game,
                        const std::map<std::string, std::int64_t>& params,
                        std::uint64_t seed, std::size_t samples,
                        std::size_t max_states, std::size_t max_valuations) {
  auto env = to_env(params);
  require_binding(game, env);
  hlpg::CorrespondenceOptions opts;
  opts.seed = seed;
  opts.samples = samples;
  auto report = hlpg::check_correspondence(
      game, env, to_limits(max_states, max_valuations), opts);
  py::dict out;
  out["passed"] = report.passed;
  out["markings"] = report.hl_nodes;
  out["edges"] = report.hl_edges;
  out["samples_checked"] = report.samples_checked;
  out["witness"] = report.witness;
  return out;
}

py::dict net_reach(const hlpg::LowLevelGame& net, std::size_t max_states,
                   std::size_t max_valuations) {
  auto limits = to_limits(max_states, max_valuations);
  auto graph = hlpg::lowlevel_reach(net, limits);
  py::dict out;
  out["markings"] = graph.nodes.size();
  out["edges"] = graph.edges.size();
  out["deadlocks"] = graph.deadlock_count();
  out["bad_reachable"] = graph.marks_bad(net);
  out["one_safe"] = hlpg::check_one_safe(net, limits).ok;
  return out;
}

std::vector<std::string> game_place_names(const hlpg::HighLevelGame& g) {
  std::vector<std::string> names;
  for (const auto& p : g.places) names.push_back(p.name);
  return names;
}

std::vector<std::string> game_transition_names(const hlpg::HighLevelGame& g) {
  std::vector<std::string> names;
  for (const auto& t : g.transitions) names.push_back(t.name);
  return names;
}

std::vector<std::string> net_place_names(const hlpg::LowLevelGame& g) {
  std::vector<std::string> names;
  for (const auto& p : g.places) names.push_back(p.name);
  return names;
}

std::vector<std::string> net_transition_names(const hlpg::LowLevelGame& g) {
  std::vector<std::string> names;
  for (const auto& t : g.transitions) names.push_back(t.name);
  return names;
}

std::size_t net_arc_count(const hlpg::LowLevelGame& g) {
  std::size_t arcs = 0;
  for (const auto& t : g.transitions) arcs += t.pre.size() + t.post.size();
  return arcs;
}

constexpr std::size_t kDefaultStates = hlpg::Limits{}.max_states;
constexpr std::size_t kDefaultValuations = hlpg::Limits{}.max_valuations;

} // namespace

PYBIND11_MODULE(_hlpg, m) {
  m.doc() = "High-level Petri games: parse, run the token game, compile to "
            "safe nets, verify the correspondence.";

  auto base = py::register_exception<hlpg::Error>(m, "Error");
  py::register_exception<hlpg::EvalError>(m, "EvalError", base);
  py::register_exception<hlpg::LimitError>(m, "LimitError", base);
  py::register_exception<hlpg::ContactViolation>(m, "ContactViolation", base);

  py::class_<hlpg::LowLevelGame>(m, "Net",
                                 "A compiled one-safe place/transition game.")
      .def_readonly("name", &hlpg::LowLevelGame::name)
      .def_property_readonly("place_names", &net_place_names)
      .def_property_readonly("transition_names", &net_transition_names)
      .def_property_readonly(
          "place_count",
          [](const hlpg::LowLevelGame& g) { return g.places.size(); })
      .def_property_readonly(
          "transition_count",
          [](const hlpg::LowLevelGame& g) { return g.transitions.size(); })
      .def_property_readonly("arc_count", &net_arc_count)
      .def("native", &hlpg::export_native,
           "Plain-text net description; read back with hlpg's CLI.")
      .def("pnml", &hlpg::export_pnml, "PNML interchange XML.")
      .def("dot", &hlpg::export_dot, "Graphviz rendering.")
      .def("stats_json",
           [](const hlpg::LowLevelGame& g) {
             return hlpg::stats_json(hlpg::stats(g));
           })
      .def("reach", &net_reach, py::arg("max_states") = kDefaultStates,
           py::arg("max_valuations") = kDefaultValuations,
           "Explore the net: markings, edges, deadlocks, bad_reachable, "
           "one_safe.")
      .def("__repr__", [](const hlpg::LowLevelGame& g) {
        return "<hlpg.Net '" + g.name + "': " +
               std::to_string(g.places.size()) + " places, " +
               std::to_string(g.transitions.size()) + " transitions>";
      });

  py::class_<hlpg::HighLevelGame>(m, "Game",
                                  "A parameterized high-level Petri game.")
      .def_readonly("name", &hlpg::HighLevelGame::name)
      .def_property_readonly("place_names", &game_place_names)
      .def_property_readonly("transition_names", &game_transition_names)
      .def("text", &hlpg::print_game, "Canonical source text.")
      .def("dot", &hlpg::export_hl_dot, "Graphviz rendering of the game.")
      .def(
          "compile",
          [](const hlpg::HighLevelGame& game,
             const std::map<std::string, std::int64_t>& params,
             std::size_t max_states, std::size_t max_valuations) {
            return hlpg::instantiate(
                       elaborate(game, params, max_states, max_valuations))
                .net;
          },
          py::arg("params"), py::arg("max_states") = kDefaultStates,
          py::arg("max_valuations") = kDefaultValuations,
          "Fix the parameters and compile to a one-safe Net.")
      .def("reach", &reach_summary, py::arg("params"),
           py::arg("max_states") = kDefaultStates,
           py::arg("max_valuations") = kDefaultValuations,
           "Explore the token game under the given parameters.")
      .def("verify", &verify_summary, py::arg("params"),
           py::arg("seed") = std::uint64_t(1), py::arg("samples") = 1000,
           py::arg("max_states") = kDefaultStates,
           py::arg("max_valuations") = kDefaultValuations,
           "Check that the compiled net and the token game agree.")
      .def("__repr__", [](const hlpg::HighLevelGame& g) {
        return "<hlpg.Game '" + g.name + "': " +
               std::to_string(g.places.size()) + " places, " +
               std::to_string(g.transitions.size()) + " transitions>";
      });

  m.def(
      "parse",
      [](const std::string& text) {
        auto result = hlpg::parse_game(text);
        if (!result.ok()) {
          std::string message;
          for (const auto& d : result.diagnostics) {
            if (!message.empty()) message += "\n";
            message += d.text();
          }
          throw py::value_error(message);
        }
        return *result.game;
      },
      py::arg("text"),
      "Parse, validate and typecheck game source text; raises ValueError "
      "listing the diagnostics on failure.");

  m.def(
      "diagnostics",
      [](const std::string& text) {
        std::vector<std::string> out;
        for (const auto& d : hlpg::parse_game(text).diagnostics)
          out.push_back(d.text());
        return out;
      },
      py::arg("text"),
      "All parser and checker diagnostics for the source text.");

  m.def(
      "alarm_system",
      [](const std::string& variant) {
        if (variant != "sync" && variant != "seq")
          throw py::value_error("variant must be 'sync' or 'seq'");
        return hlpg::alarm_system(variant == "seq"
                                      ? hlpg::InfoVariant::Sequential
                                      : hlpg::InfoVariant::Sync);
      },
      py::arg("variant") = "sync",
      "Alarm-system family AS(n); 'sync' or 'seq' information passing.");

  m.def("concurrent_machines", &hlpg::concurrent_machines,
        "Concurrent-machines family CM(n, k) with orders and a shared tool.");

  m.def("self_reconfiguring_robots", &hlpg::self_reconfiguring_robots,
        "Self-reconfiguring robots family SR(n, k).");
}
