#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circuitgp/cli.hpp"
#include "circuitgp/error.hpp"
#include "circuitgp/evaluator.hpp"
#include "circuitgp/evolution.hpp"
#include "circuitgp/prefix.hpp"
#include "circuitgp/report.hpp"
#include "circuitgp/truth_table.hpp"
#include "circuitgp/verifier.hpp"

namespace py = pybind11;
using namespace circuitgp;

namespace {

// Owned by the module for the interpreter lifetime.
PyObject* g_circuit_error = nullptr;

std::vector<int> column_bits(const PackedColumn& c) {
  std::vector<int> out(c.length());
  for (std::size_t i = 0; i < c.length(); ++i) out[i] = c.get(i);
  return out;
}

py::dict history_row(const GenerationStats& g) {
  py::dict d;
  d["generation"] = g.generation;
  d["best_mismatches"] = g.best_mismatches;
  d["mean_mismatches"] = g.mean_mismatches;
  d["best_error_pct"] = g.best_error_pct;
  d["mean_error_pct"] = g.mean_error_pct;
  return d;
}

std::optional<std::string> failing(const Verdict& v, const TruthTable& t) {
  if (v.correct()) return std::nullopt;
  return t.format_combination(*v.first_failing_combination);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Genetic-programming synthesis and exhaustive verification of digital circuits";

  g_circuit_error = py::exception<Error>(m, "CircuitError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::gil_scoped_acquire gil;
      auto type = py::reinterpret_borrow<py::object>(g_circuit_error);
      py::object instance = type(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      instance.attr("line") = e.line();
      PyErr_SetObject(g_circuit_error, instance.ptr());
    }
  });

  py::class_<CircuitTree>(m, "Circuit")
      .def("__len__", &CircuitTree::size)
      .def("to_prefix", [](const CircuitTree& t) { return to_prefix(t); })
      .def("to_dot", [](const CircuitTree& t) { return export_dot(t); })
      .def("metrics",
           [](const CircuitTree& t) {
             auto mt = tree_metrics(t);
             py::dict d;
             d["node_count"] = mt.node_count;
             d["depth"] = mt.depth;
             d["contains_sequential"] = mt.contains_sequential;
             return d;
           })
      .def("__eq__", [](const CircuitTree& a, const CircuitTree& b) { return a == b; })
      .def("__repr__", [](const CircuitTree& t) { return "Circuit('" + to_prefix(t) + "')"; });

  m.def("parse_prefix", py::overload_cast<std::string_view, std::size_t>(&parse_prefix), py::arg("text"),
        py::arg("n_inputs"));

  py::class_<TruthTable>(m, "TruthTable")
      .def_property_readonly("n_inputs", &TruthTable::n_inputs)
      .def_property_readonly("n_outputs", &TruthTable::n_outputs)
      .def_property_readonly("row_count", &TruthTable::row_count)
      .def_property_readonly("input_names", &TruthTable::input_names)
      .def_property_readonly("output_names", &TruthTable::output_names)
      .def("output_bits", [](const TruthTable& t, std::size_t j) { return column_bits(t.output_column(j)); })
      .def("input_bits", [](const TruthTable& t, std::size_t i) { return column_bits(t.input_column(i)); })
      .def("serialize", &serialize_table)
      .def("__eq__", [](const TruthTable& a, const TruthTable& b) { return a == b; });

  m.def("parse_table", &parse_table, py::arg("text"), py::arg("max_inputs") = kDefaultMaxInputs);
  m.def("table_from_expression", &table_from_expression, py::arg("circuit"), py::arg("n_inputs"));

  m.def(
      "fitness",
      [](const CircuitTree& t, const TruthTable& table, std::size_t output) {
        if (output >= table.n_outputs()) throw py::index_error("output index out of range");
        auto f = fitness(t, table, output);
        return py::make_tuple(f.mismatches, f.total_rows);
      },
      py::arg("circuit"), py::arg("table"), py::arg("output") = 0);
  m.def(
      "error_percent", [](std::size_t mismatches, std::size_t rows) { return error_percent({mismatches, rows}); },
      py::arg("mismatches"), py::arg("total_rows"));
  m.def(
      "evaluate", [](const CircuitTree& t, const TruthTable& table) { return column_bits(evaluate(t, table)); },
      py::arg("circuit"), py::arg("table"));
  m.def(
      "verify",
      [](const CircuitTree& t, const TruthTable& table, std::size_t output) {
        if (output >= table.n_outputs()) throw py::index_error("output index out of range");
        auto v = verify_circuit(t, table, output);
        return py::make_tuple(v.correct(), failing(v, table));
      },
      py::arg("circuit"), py::arg("table"), py::arg("output") = 0,
      "Returns (correct, first failing combination or None).");

  py::class_<EvolutionConfig>(m, "EvolutionConfig")
      .def(py::init<>())
      .def_readwrite("population_size", &EvolutionConfig::population_size)
      .def_readwrite("max_generations", &EvolutionConfig::max_generations)
      .def_readwrite("max_nodes", &EvolutionConfig::max_nodes)
      .def_readwrite("init_depth", &EvolutionConfig::init_depth)
      .def_readwrite("tournament_size", &EvolutionConfig::tournament_size)
      .def_readwrite("mutation_probability", &EvolutionConfig::mutation_probability)
      .def_readwrite("max_trials", &EvolutionConfig::max_trials)
      .def_readwrite("seed", &EvolutionConfig::seed)
      .def_readwrite("threads", &EvolutionConfig::threads)
      .def_property(
          "functions",
          [](const EvolutionConfig& c) {
            std::vector<std::string> names;
            for (auto f : c.functions) names.emplace_back(definition(f).name);
            return names;
          },
          [](EvolutionConfig& c, const std::vector<std::string>& names) {
            c.functions.clear();
            for (const auto& n : names) c.functions.push_back(lookup_function(n).function);
          })
      .def_property(
          "weights",
          [](const EvolutionConfig& c) {
            py::dict d;
            for (auto op : kMutationOps) d[py::str(std::string(to_string(op)))] = c.operator_weights[static_cast<std::size_t>(op)];
            return d;
          },
          [](EvolutionConfig& c, const std::map<std::string, std::uint32_t>& w) {
            for (const auto& [name, value] : w) c.operator_weights[static_cast<std::size_t>(parse_mutation_op(name))] = value;
          })
      .def("validate", &EvolutionConfig::validate);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("champion", &RunResult::champion)
      .def_property_readonly("mismatches", [](const RunResult& r) { return r.champion_fitness.mismatches; })
      .def_readonly("solved", &RunResult::solved)
      .def_readonly("generations_used", &RunResult::generations_used)
      .def_readonly("trial_index", &RunResult::trial_index)
      .def_readonly("trials_run", &RunResult::trials_run)
      .def_readonly("output_index", &RunResult::output_index)
      .def_property_readonly("history",
                             [](const RunResult& r) {
                               py::list rows;
                               for (const auto& g : r.history) rows.append(history_row(g));
                               return rows;
                             })
      .def("convergence_csv", [](const RunResult& r) { return convergence_csv(r.history); });

  m.def(
      "run_evolution",
      [](const TruthTable& table, std::size_t output, const EvolutionConfig& config, std::uint64_t seed) {
        py::gil_scoped_release release;
        Rng rng(seed);
        return run_evolution(table, output, config, rng);
      },
      py::arg("table"), py::arg("output"), py::arg("config"), py::arg("seed"));
  m.def(
      "run_trials",
      [](const TruthTable& table, const EvolutionConfig& config, std::uint64_t seed) {
        py::gil_scoped_release release;
        Rng rng(seed);
        return run_trials(table, config, rng);
      },
      py::arg("table"), py::arg("config"), py::arg("seed"));

  m.def(
      "synthesize",
      [](const TruthTable& table, const EvolutionConfig& config) {
        RunReport report;
        {
          py::gil_scoped_release release;
          report = synthesize(table, config);
        }
        py::list outputs;
        for (const auto& o : report.outputs) {
          py::dict d;
          d["name"] = o.name;
          d["circuit"] = o.champion_prefix;
          d["solved"] = o.solved;
          d["trial_index"] = o.trial_index;
          d["trials_run"] = o.trials_run;
          d["generations_used"] = o.generations_used;
          d["verdict"] = o.verdict.correct() ? "Correct" : "Wrong";
          outputs.append(d);
        }
        return outputs;
      },
      py::arg("table"), py::arg("config"),
      "Evolves every output and verifies each champion; config.seed drives the run.");

}
