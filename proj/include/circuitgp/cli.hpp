#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "circuitgp/evolution.hpp"
#include "circuitgp/truth_table.hpp"
#include "circuitgp/verifier.hpp"

namespace circuitgp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // unsolved output or Wrong circuit
inline constexpr int kExitUsage = 2;   // bad flags, unreadable or malformed input

struct OutputReport {
  std::string name;
  std::optional<CircuitTree> champion;
  std::string champion_prefix;
  bool solved = false;
  std::size_t trial_index = 0;
  std::size_t trials_run = 0;
  std::size_t generations_used = 0;
  Verdict verdict;
  std::vector<GenerationStats> history;
  std::filesystem::path prefix_path;
  std::filesystem::path dot_path;
  std::filesystem::path csv_path;
};

struct RunReport {
  std::uint64_t seed = 0;
  std::vector<OutputReport> outputs;

  bool all_solved() const;
};

/// Evolves every output column and verifies each champion exhaustively.
/// An output counts as solved only when the verifier says Correct; a
/// champion that fails verification triggers further trials.
RunReport synthesize(const TruthTable& table, const EvolutionConfig& config);

struct SynthOptions {
  std::filesystem::path table_path;
  std::string functions = "AND,OR,NOT,HA,FA";
  std::string weights;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out_dir = ".";
  EvolutionConfig config;
};

struct VerifyOptions {
  std::filesystem::path table_path;
  std::filesystem::path circuit_path;
  std::string output;  // empty = first output
};

struct EvalOptions {
  std::filesystem::path circuit_path;
  std::string circuit_text;  // used when circuit_path is empty
  std::string assignment;    // header order, most significant first
  std::optional<std::size_t> n_inputs;
};

struct TableOptions {
  std::string expression;
  std::size_t n_inputs = 0;
  std::filesystem::path out_path;  // empty = stdout
};

int cmd_synth(const SynthOptions& options, std::ostream& out, std::ostream& err, RunReport* report = nullptr);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& err);
int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err);

/// Full command line without the program name, e.g. {"synth", "--table", "t.tt"}.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace circuitgp
