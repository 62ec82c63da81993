#include "circuitgp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <memory>
#include <sstream>

#include "circuitgp/error.hpp"
#include "circuitgp/prefix.hpp"
#include "circuitgp/report.hpp"

namespace circuitgp {

namespace fs = std::filesystem;

bool RunReport::all_solved() const {
  return !outputs.empty() &&
         std::all_of(outputs.begin(), outputs.end(), [](const OutputReport& o) { return o.solved; });
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path.string() + "'");
}

std::string file_stem_for(const std::string& name) {
  std::string out = name;
  for (auto& c : out) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') c = '_';
  }
  return out;
}

std::string describe(const Error& e, const fs::path& file) {
  std::string where = file.string();
  if (e.line() > 0) where += ":" + std::to_string(e.line());
  return where + ": " + e.what();
}

TruthTable load_table(const fs::path& path) {
  const auto text = read_text_file(path);
  try {
    return parse_table(text);
  } catch (const Error& e) {
    throw Error(e.code(), describe(e, path));
  }
}

CircuitTree load_circuit(const fs::path& path, std::span<const std::string> names) {
  const auto text = read_text_file(path);
  try {
    return parse_prefix(text, names);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::uint64_t time_seed() {
  return static_cast<std::uint64_t>(std::chrono::system_clock::now().time_since_epoch().count());
}

}  // namespace

RunReport synthesize(const TruthTable& table, const EvolutionConfig& config) {
  config.validate();
  RunReport report;
  report.seed = config.seed;
  Rng root(config.seed);
  const std::uint64_t base = root.next();

  for (std::size_t j = 0; j < table.n_outputs(); ++j) {
    OutputReport out;
    out.name = table.output_names()[j];
    std::size_t first_trial = 1;
    std::size_t trials_run = 0;
    for (;;) {
      auto result = run_output_trials(table, j, config, base, first_trial);
      trials_run += result.trials_run;
      out.champion = result.champion;
      out.trial_index = result.trial_index;
      out.generations_used = result.generations_used;
      out.history = std::move(result.history);
      out.verdict = out.champion ? verify_circuit(*out.champion, table, j)
                                 : Verdict{VerdictStatus::Wrong, table.combination(0)};
      out.solved = result.solved && out.verdict.correct();
      // A zero-fitness champion the verifier rejects means the evaluator is
      // wrong; fall through to the next trial.
      if (out.solved || !result.solved || result.trial_index >= config.max_trials) break;
      first_trial = result.trial_index + 1;
    }
    out.trials_run = trials_run;
    if (out.champion) out.champion_prefix = to_prefix(*out.champion, table.input_names());
    report.outputs.push_back(std::move(out));
  }
  return report;
}

int cmd_synth(const SynthOptions& options, std::ostream& out, std::ostream& err, RunReport* report_out) {
  std::optional<TruthTable> loaded;
  try {
    loaded = load_table(options.table_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const TruthTable& table = *loaded;

  EvolutionConfig config = options.config;
  try {
    config.functions = parse_function_list(options.functions);
    if (!options.weights.empty()) config.operator_weights = parse_operator_weights(options.weights, config.operator_weights);
    config.seed = options.seed.value_or(time_seed());
    config.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  RunReport report = synthesize(table, config);

  try {
    fs::create_directories(options.out_dir);
    for (auto& o : report.outputs) {
      const auto stem = file_stem_for(o.name);
      if (o.champion) {
        o.prefix_path = options.out_dir / (stem + ".prefix");
        o.dot_path = options.out_dir / (stem + ".dot");
        write_text_file(o.prefix_path, o.champion_prefix + "\n");
        write_text_file(o.dot_path, export_dot(*o.champion, table.input_names()));
      }
      if (!o.history.empty()) {
        o.csv_path = options.out_dir / (report.outputs.size() == 1 ? "convergence.csv" : "convergence_" + stem + ".csv");
        write_text_file(o.csv_path, convergence_csv(o.history));
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  out << "seed: " << report.seed << '\n';
  for (const auto& o : report.outputs) {
    out << o.name << ": " << (o.solved ? "solved" : "unsolved") << " trial " << o.trial_index << " of "
        << o.trials_run << " run, generations " << o.generations_used << ", verdict "
        << (o.verdict.correct() ? std::string("Correct")
                                : "Wrong at " + table.format_combination(o.verdict.first_failing_combination.value_or(0)))
        << '\n';
    out << "  " << o.champion_prefix << '\n';
  }

  const bool ok = report.all_solved();
  if (report_out) *report_out = std::move(report);
  return ok ? kExitOk : kExitFailed;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const auto table = load_table(options.table_path);
    const auto tree = load_circuit(options.circuit_path, table.input_names());
    const std::size_t output = options.output.empty() ? 0 : table.output_index(options.output);
    const auto verdict = verify_circuit(tree, table, output);
    if (verdict.correct()) {
      out << "Correct\n";
      return kExitOk;
    }
    out << "Wrong at " << table.format_combination(*verdict.first_failing_combination) << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const auto text = options.circuit_path.empty() ? options.circuit_text : read_text_file(options.circuit_path);
    // Accept any A<k>; the assignment width is checked against what the
    // circuit references.
    const auto tree = parse_prefix(text, default_input_names(31));
    std::size_t referenced = 1;
    for (const auto& node : tree.nodes()) {
      if (node.is_terminal()) referenced = std::max<std::size_t>(referenced, node.input() + 1);
    }
    const std::size_t n = options.n_inputs.value_or(referenced);
    if (n < referenced) {
      throw Error(ErrorCode::UnknownVariable, "circuit references A" + std::to_string(referenced - 1) + " but only " +
                                                  std::to_string(n) + " inputs were declared");
    }
    const auto& bits = options.assignment;
    if (bits.size() != n) {
      throw Error(ErrorCode::WidthMismatch,
                  "assignment has " + std::to_string(bits.size()) + " bits, circuit needs " + std::to_string(n));
    }
    if (bits.find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorCode::SyntaxError, "assignment must contain only 0 and 1");
    }
    std::unique_ptr<bool[]> assignment(new bool[n]);
    for (std::size_t i = 0; i < n; ++i) assignment[i] = bits[n - 1 - i] == '1';
    SequentialFrame frame(tree.size());
    out << (naive_eval_row(tree, {assignment.get(), n}, frame) ? 1 : 0) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const auto tree = parse_prefix(options.expression, options.n_inputs);
    const auto text = serialize_table(table_from_expression(tree, options.n_inputs));
    if (options.out_path.empty()) {
      out << text;
    } else {
      write_text_file(options.out_path, text);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evolves and verifies digital circuits from truth tables", "circuitgp"};
  app.require_subcommand(1);

  SynthOptions synth;
  std::uint64_t seed = 0;
  auto* s = app.add_subcommand("synth", "Evolve a circuit for every output of a truth table");
  s->add_option("--table", synth.table_path, "Truth-table file")->required();
  s->add_option("--functions", synth.functions, "Comma-separated function set")->capture_default_str();
  s->add_option("--pop", synth.config.population_size, "Population size")->capture_default_str();
  s->add_option("--max-generations", synth.config.max_generations, "Generations per trial")->capture_default_str();
  s->add_option("--max-nodes", synth.config.max_nodes, "Maximum nodes per tree")->capture_default_str();
  s->add_option("--init-depth", synth.config.init_depth, "Maximum depth of random trees")->capture_default_str();
  s->add_option("--tournament", synth.config.tournament_size, "Opponents per individual")->capture_default_str();
  s->add_option("--mutation-prob", synth.config.mutation_probability, "Probability an offspring is mutated")
      ->capture_default_str();
  s->add_option("--weights", synth.weights, "Operator weights, e.g. OneNode=100,Swap=50");
  s->add_option("--max-trials", synth.config.max_trials, "Trials per output")->capture_default_str();
  auto* seed_opt = s->add_option("--seed", seed, "Random seed (default: time-derived)");
  s->add_option("--out-dir", synth.out_dir, "Directory for .prefix, .dot and .csv outputs")->capture_default_str();
  s->add_option("--threads", synth.config.threads, "Evaluation threads")->capture_default_str();

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Check a circuit against a truth table on every combination");
  v->add_option("--table", verify.table_path, "Truth-table file")->required();
  v->add_option("--circuit", verify.circuit_path, "Prefix-notation circuit file")->required();
  v->add_option("--output", verify.output, "Output name (default: first)");

  EvalOptions eval;
  std::size_t eval_n = 0;
  auto* e = app.add_subcommand("eval", "Evaluate a circuit on one input assignment");
  auto* circuit_file = e->add_option("--circuit", eval.circuit_path, "Prefix-notation circuit file");
  auto* circuit_expr = e->add_option("--expr", eval.circuit_text, "Prefix-notation circuit text");
  circuit_file->excludes(circuit_expr);
  e->add_option("assignment", eval.assignment, "Input bits, most significant first")->required();
  auto* n_opt = e->add_option("--n-inputs", eval_n, "Declared input count");

  TableOptions table;
  auto* t = app.add_subcommand("table", "Write the truth table of a combinational expression");
  t->add_option("--expr", table.expression, "Prefix-notation circuit")->required();
  t->add_option("--inputs", table.n_inputs, "Number of inputs")->required();
  t->add_option("--out", table.out_path, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (s->parsed()) {
    if (seed_opt->count() > 0) synth.seed = seed;
    return cmd_synth(synth, out, err);
  }
  if (v->parsed()) return cmd_verify(verify, out, err);
  if (e->parsed()) {
    if (circuit_file->count() == 0 && circuit_expr->count() == 0) {
      err << "error: eval needs --circuit or --expr\n";
      return kExitUsage;
    }
    if (n_opt->count() > 0) eval.n_inputs = eval_n;
    return cmd_eval(eval, out, err);
  }
  return cmd_table(table, out, err);
}

}  // namespace circuitgp
