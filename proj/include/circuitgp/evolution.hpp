#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "circuitgp/evaluator.hpp"
#include "circuitgp/function_set.hpp"
#include "circuitgp/rng.hpp"
#include "circuitgp/truth_table.hpp"
#include "circuitgp/tree.hpp"

namespace circuitgp {

enum class MutationOp : std::uint8_t { OneNode, AllNodes, Swap, Grow, Trunc };

inline constexpr std::size_t kMutationOpCount = 5;
inline constexpr std::array<MutationOp, kMutationOpCount> kMutationOps{
    MutationOp::OneNode, MutationOp::AllNodes, MutationOp::Swap, MutationOp::Grow, MutationOp::Trunc};

std::string_view to_string(MutationOp op);
/// Accepts "OneNode", "AllNodes", "Swap", "Grow", "Trunc" (case-insensitive).
MutationOp parse_mutation_op(std::string_view name);

/// Weight per operator, indexed by `static_cast<std::size_t>(MutationOp)`.
using OperatorWeights = std::array<std::uint32_t, kMutationOpCount>;

/// Parses "OneNode=1,Swap=0,..."; operators not named keep their value in `base`.
OperatorWeights parse_operator_weights(std::string_view text, OperatorWeights base);

#ifdef NDEBUG
inline constexpr bool kValidateByDefault = false;
#else
inline constexpr bool kValidateByDefault = true;
#endif

struct EvolutionConfig {
  std::size_t population_size = 1000;
  std::size_t max_generations = 1000;
  std::size_t max_nodes = 50;
  std::size_t init_depth = 10;
  std::size_t tournament_size = 10;
  double mutation_probability = 1.0;
  OperatorWeights operator_weights{100, 100, 100, 100, 100};
  std::size_t max_trials = 100;
  std::uint64_t seed = 0;
  std::vector<Function> functions{Function::And, Function::Or, Function::Not, Function::HalfAdder,
                                  Function::FullAdder};
  /// Worker threads for offspring evaluation; results do not depend on it.
  std::size_t threads = 1;
  /// Check every tree entering a population with validate_tree.
  bool validate_offspring = kValidateByDefault;

  /// Throws Error{InvalidConfig} when an invariant is broken.
  void validate() const;
};

/// What mutation and random generation may build: the terminal range, the
/// gate alphabet and the size/depth limits.
struct SearchSpace {
  std::size_t n_inputs = 1;
  std::vector<Function> functions;
  std::size_t max_nodes = 50;
  std::size_t max_depth = 10;

  static SearchSpace from(const EvolutionConfig& config, std::size_t n_inputs);
};

struct Individual {
  CircuitTree tree;
  Fitness fitness;
  std::size_t wins = 0;
};

using Population = std::vector<Individual>;

struct GenerationStats {
  std::size_t generation = 0;
  std::size_t best_mismatches = 0;
  double mean_mismatches = 0.0;
  double best_error_pct = 0.0;
  double mean_error_pct = 0.0;

  friend bool operator==(const GenerationStats&, const GenerationStats&) = default;
};

struct RunResult {
  std::optional<CircuitTree> champion;
  Fitness champion_fitness;
  bool solved = false;
  std::size_t generations_used = 0;
  /// 1-based trial that produced the champion.
  std::size_t trial_index = 0;
  /// Trials actually run for this output.
  std::size_t trials_run = 0;
  std::size_t output_index = 0;
  std::uint64_t seed = 0;
  std::vector<GenerationStats> history;
};

/// Grow-style random tree: each position becomes a gate with probability
/// 0.5, forced to a terminal at `max_depth` or when no gate fits the
/// remaining node budget.
CircuitTree random_tree(Rng& rng, std::size_t n_inputs, std::span<const Function> functions, std::size_t max_depth,
                        std::size_t node_budget);

CircuitTree mutate(const CircuitTree& tree, MutationOp op, Rng& rng, const SearchSpace& space);

/// Draws an operator with probability weight / total weight.
MutationOp select_operator(const OperatorWeights& weights, Rng& rng);

/// Each individual meets `tournament_size` opponents drawn with replacement
/// from the whole population (itself included) and wins whenever its
/// mismatch count is lower or equal.
std::vector<std::size_t> tournament_wins(std::span<const Individual> population, Rng& rng,
                                         std::size_t tournament_size);

/// Orders by wins desc, then mismatches asc, then position, and keeps the
/// first half. The result is the parent set in rank order.
Population select_parents(Population population, std::span<const std::size_t> wins);

/// Parents followed by one offspring per parent.
Population breed(Population parents, Rng& rng, const EvolutionConfig& config, const TruthTable& table,
                 std::size_t output_index);

/// One selection + reproduction round.
Population next_generation(Population population, Rng& rng, const EvolutionConfig& config, const TruthTable& table,
                           std::size_t output_index);

Population initial_population(Rng& rng, const EvolutionConfig& config, const TruthTable& table,
                              std::size_t output_index);

/// A single trial with a fresh random population.
RunResult run_evolution(const TruthTable& table, std::size_t output_index, const EvolutionConfig& config, Rng& rng);

/// Independent trials per output until one solves or `max_trials` is spent.
std::vector<RunResult> run_trials(const TruthTable& table, const EvolutionConfig& config, Rng& rng);

/// Trials for one output column, starting at `first_trial` (1-based).
RunResult run_output_trials(const TruthTable& table, std::size_t output_index, const EvolutionConfig& config,
                            std::uint64_t base_seed, std::size_t first_trial = 1);

}  // namespace circuitgp
