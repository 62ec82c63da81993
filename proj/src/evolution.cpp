#include "circuitgp/evolution.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "circuitgp/error.hpp"
#include "circuitgp/prefix.hpp"

namespace circuitgp {

std::string_view to_string(MutationOp op) {
  switch (op) {
    case MutationOp::OneNode: return "OneNode";
    case MutationOp::AllNodes: return "AllNodes";
    case MutationOp::Swap: return "Swap";
    case MutationOp::Grow: return "Grow";
    case MutationOp::Trunc: return "Trunc";
  }
  return "?";
}

MutationOp parse_mutation_op(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const auto key = lower(name);
  for (auto op : kMutationOps) {
    if (lower(to_string(op)) == key) return op;
  }
  // Table II spells it "Allnode".
  if (key == "allnode") return MutationOp::AllNodes;
  throw Error(ErrorCode::InvalidConfig, "unknown mutation operator '" + std::string(name) + "'");
}

OperatorWeights parse_operator_weights(std::string_view text, OperatorWeights base) {
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidConfig, "weight entry '" + std::string(item) + "' is not op=weight");
    }
    auto op = parse_mutation_op(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    std::size_t used = 0;
    unsigned long w = 0;
    try {
      w = std::stoul(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size() || value.front() == '-') {
      throw Error(ErrorCode::InvalidConfig, "bad weight '" + value + "'");
    }
    base[static_cast<std::size_t>(op)] = static_cast<std::uint32_t>(w);
  }
  return base;
}

void EvolutionConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); };
  if (population_size < 2 || population_size % 2 != 0) fail("population size must be even and at least 2");
  if (tournament_size < 1) fail("tournament size must be at least 1");
  if (max_nodes < 1) fail("max nodes must be at least 1");
  if (init_depth < 1) fail("initial depth must be at least 1");
  if (max_trials < 1) fail("max trials must be at least 1");
  if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0)) fail("mutation probability must be in [0, 1]");
  if (std::all_of(operator_weights.begin(), operator_weights.end(), [](auto w) { return w == 0; })) {
    fail("at least one mutation operator needs a positive weight");
  }
  if (functions.empty()) fail("function set is empty");
}

SearchSpace SearchSpace::from(const EvolutionConfig& config, std::size_t n_inputs) {
  return SearchSpace{n_inputs, config.functions, config.max_nodes, config.init_depth};
}

// ---------------------------------------------------------------------------
// Random trees

namespace {

class TreeGrower {
 public:
  TreeGrower(Rng& rng, std::size_t n_inputs, std::span<const Function> functions, std::size_t max_depth,
             std::size_t budget)
      : rng_(rng), n_inputs_(n_inputs), functions_(functions), max_depth_(max_depth), budget_(budget) {}

  std::vector<Node> grow() {
    grow_at(1, 0);
    return std::move(nodes_);
  }

 private:
  // `pending` = open slots still to fill after this one; each needs at least
  // one node, so they are reserved from the budget.
  void grow_at(std::size_t depth, std::size_t pending) {
    const std::size_t available = budget_ - nodes_.size() - pending;
    fitting_.clear();
    if (depth < max_depth_) {
      for (auto f : functions_) {
        if (1 + std::size_t{definition(f).arity} <= available) fitting_.push_back(f);
      }
    }
    if (fitting_.empty() || !rng_.coin()) {
      nodes_.push_back(Node::terminal(static_cast<std::uint32_t>(rng_.below(n_inputs_))));
      return;
    }
    const Function f = fitting_[rng_.below(fitting_.size())];
    nodes_.push_back(Node::gate(f));
    const std::size_t arity = definition(f).arity;
    for (std::size_t c = 0; c < arity; ++c) grow_at(depth + 1, pending + (arity - 1 - c));
  }

  Rng& rng_;
  std::size_t n_inputs_;
  std::span<const Function> functions_;
  std::size_t max_depth_;
  std::size_t budget_;
  std::vector<Node> nodes_;
  std::vector<Function> fitting_;
};

}  // namespace

CircuitTree random_tree(Rng& rng, std::size_t n_inputs, std::span<const Function> functions, std::size_t max_depth,
                        std::size_t node_budget) {
  if (n_inputs == 0 || node_budget == 0 || max_depth == 0) {
    throw Error(ErrorCode::InvalidConfig, "random_tree needs inputs, a positive budget and a positive depth");
  }
  return CircuitTree(TreeGrower(rng, n_inputs, functions, max_depth, node_budget).grow());
}

// ---------------------------------------------------------------------------
// Mutation

namespace {

Node redraw_same_arity(const Node& node, Rng& rng, const SearchSpace& space) {
  if (node.is_terminal()) return Node::terminal(static_cast<std::uint32_t>(rng.below(space.n_inputs)));
  const auto arity = node.arity();
  std::array<Function, kFunctionCount> same{};
  std::size_t count = 0;
  for (auto f : space.functions) {
    if (definition(f).arity == arity) same[count++] = f;
  }
  if (count == 0) return node;
  return Node::gate(same[rng.below(count)]);
}

template <typename Pred>
std::vector<std::size_t> positions_where(const CircuitTree& tree, Pred pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (pred(tree[i])) out.push_back(i);
  }
  return out;
}

CircuitTree mutate_one_node(const CircuitTree& tree, Rng& rng, const SearchSpace& space) {
  std::vector<Node> nodes(tree.nodes().begin(), tree.nodes().end());
  auto& target = nodes[rng.below(nodes.size())];
  target = redraw_same_arity(target, rng, space);
  return CircuitTree(std::move(nodes));
}

CircuitTree mutate_all_nodes(const CircuitTree& tree, Rng& rng, const SearchSpace& space) {
  std::vector<Node> nodes(tree.nodes().begin(), tree.nodes().end());
  for (auto& node : nodes) node = redraw_same_arity(node, rng, space);
  return CircuitTree(std::move(nodes));
}

CircuitTree mutate_swap(const CircuitTree& tree, Rng& rng) {
  auto candidates = positions_where(tree, [](const Node& n) { return n.arity() >= 2; });
  if (candidates.empty()) return tree;
  const auto pos = candidates[rng.below(candidates.size())];
  auto kids = tree.children(pos);
  for (std::size_t i = kids.size() - 1; i > 0; --i) std::swap(kids[i], kids[rng.below(i + 1)]);

  const auto nodes = tree.nodes();
  std::vector<Node> out(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
  out.reserve(nodes.size());
  for (auto k : kids) {
    out.insert(out.end(), nodes.begin() + static_cast<std::ptrdiff_t>(k),
               nodes.begin() + static_cast<std::ptrdiff_t>(tree.subtree_end(k)));
  }
  const auto end = tree.subtree_end(pos);
  out.insert(out.end(), nodes.begin() + static_cast<std::ptrdiff_t>(end), nodes.end());
  return CircuitTree(std::move(out));
}

CircuitTree mutate_grow(const CircuitTree& tree, Rng& rng, const SearchSpace& space) {
  auto terminals = positions_where(tree, [](const Node& n) { return n.is_terminal(); });
  const auto pos = terminals[rng.below(terminals.size())];
  const auto depth = tree.node_depths()[pos];
  // The replaced terminal frees one node.
  const std::ptrdiff_t budget =
      static_cast<std::ptrdiff_t>(space.max_nodes) - static_cast<std::ptrdiff_t>(tree.size()) + 1;
  const std::ptrdiff_t depth_room =
      static_cast<std::ptrdiff_t>(space.max_depth) - static_cast<std::ptrdiff_t>(depth) + 1;
  if (budget < 2 || depth_room < 2) return mutate_one_node(tree, rng, space);
  auto sub = random_tree(rng, space.n_inputs, space.functions, static_cast<std::size_t>(depth_room),
                         static_cast<std::size_t>(budget));
  return tree.replace_subtree(pos, sub.nodes());
}

CircuitTree mutate_trunc(const CircuitTree& tree, Rng& rng, const SearchSpace& space) {
  auto gates = positions_where(tree, [](const Node& n) { return !n.is_terminal(); });
  if (gates.empty()) return tree;
  const auto pos = gates[rng.below(gates.size())];
  const Node leaf = Node::terminal(static_cast<std::uint32_t>(rng.below(space.n_inputs)));
  return tree.replace_subtree(pos, std::span<const Node>(&leaf, 1));
}

}  // namespace

CircuitTree mutate(const CircuitTree& tree, MutationOp op, Rng& rng, const SearchSpace& space) {
  switch (op) {
    case MutationOp::OneNode: return mutate_one_node(tree, rng, space);
    case MutationOp::AllNodes: return mutate_all_nodes(tree, rng, space);
    case MutationOp::Swap: return mutate_swap(tree, rng);
    case MutationOp::Grow: return mutate_grow(tree, rng, space);
    case MutationOp::Trunc: return mutate_trunc(tree, rng, space);
  }
  return tree;
}

MutationOp select_operator(const OperatorWeights& weights, Rng& rng) {
  const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  if (total == 0) throw Error(ErrorCode::InvalidConfig, "all operator weights are zero");
  auto r = rng.below(total);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (r < weights[i]) return kMutationOps[i];
    r -= weights[i];
  }
  return kMutationOps.back();
}

// ---------------------------------------------------------------------------
// Selection and generations

std::vector<std::size_t> tournament_wins(std::span<const Individual> population, Rng& rng,
                                         std::size_t tournament_size) {
  std::vector<std::size_t> wins(population.size(), 0);
  for (std::size_t i = 0; i < population.size(); ++i) {
    for (std::size_t k = 0; k < tournament_size; ++k) {
      const auto& opponent = population[rng.below(population.size())];
      if (population[i].fitness.mismatches <= opponent.fitness.mismatches) ++wins[i];
    }
  }
  return wins;
}

Population select_parents(Population population, std::span<const std::size_t> wins) {
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (wins[a] != wins[b]) return wins[a] > wins[b];
    return population[a].fitness.mismatches < population[b].fitness.mismatches;
  });
  Population parents;
  parents.reserve(population.size() / 2);
  for (std::size_t i = 0; i < population.size() / 2; ++i) {
    auto& ind = population[order[i]];
    ind.wins = wins[order[i]];
    parents.push_back(std::move(ind));
  }
  return parents;
}

namespace {

void check_tree(const CircuitTree& tree, const EvolutionConfig& config, std::size_t n_inputs) {
  auto violations = validate_tree(tree, config.max_nodes, n_inputs);
  if (!violations.empty()) {
    throw std::logic_error("invalid tree entered the population: " + violations.front().message + " in " +
                           to_prefix(tree));
  }
}

void evaluate_all(std::span<Individual> individuals, const TruthTable& table, std::size_t output_index,
                  std::size_t threads) {
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      individuals[i].fitness = fitness(individuals[i].tree, table, output_index);
    }
  };
  threads = std::clamp<std::size_t>(threads, 1, individuals.size());
  if (threads <= 1) {
    work(0, individuals.size());
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (individuals.size() + threads - 1) / threads;
  for (std::size_t begin = 0; begin < individuals.size(); begin += chunk) {
    pool.emplace_back(work, begin, std::min(begin + chunk, individuals.size()));
  }
}

GenerationStats stats_of(std::span<const Individual> population, std::size_t generation, std::size_t total_rows) {
  GenerationStats s;
  s.generation = generation;
  s.best_mismatches = total_rows;
  double sum = 0.0;
  for (const auto& ind : population) {
    s.best_mismatches = std::min(s.best_mismatches, ind.fitness.mismatches);
    sum += static_cast<double>(ind.fitness.mismatches);
  }
  s.mean_mismatches = population.empty() ? 0.0 : sum / static_cast<double>(population.size());
  s.best_error_pct = error_percent({s.best_mismatches, total_rows});
  s.mean_error_pct = 100.0 * s.mean_mismatches / static_cast<double>(total_rows);
  return s;
}

// Zero-mismatch individual with the fewest nodes, earliest on ties.
const Individual* smallest_solution(std::span<const Individual> population) {
  const Individual* best = nullptr;
  for (const auto& ind : population) {
    if (ind.fitness.mismatches == 0 && (best == nullptr || ind.tree.size() < best->tree.size())) best = &ind;
  }
  return best;
}

const Individual& best_individual(std::span<const Individual> population) {
  const Individual* best = &population.front();
  for (const auto& ind : population) {
    if (ind.fitness.mismatches < best->fitness.mismatches ||
        (ind.fitness.mismatches == best->fitness.mismatches && ind.tree.size() < best->tree.size())) {
      best = &ind;
    }
  }
  return *best;
}

}  // namespace

Population breed(Population parents, Rng& rng, const EvolutionConfig& config, const TruthTable& table,
                 std::size_t output_index) {
  const auto space = SearchSpace::from(config, table.n_inputs());
  const std::uint64_t child_seed = rng.next();
  const std::size_t n_parents = parents.size();
  parents.reserve(2 * n_parents);
  for (std::size_t i = 0; i < n_parents; ++i) {
    Rng child_rng(mix_seed(child_seed, i));
    const auto& parent = parents[i].tree;
    Individual child;
    if (child_rng.uniform() < config.mutation_probability) {
      child.tree = mutate(parent, select_operator(config.operator_weights, child_rng), child_rng, space);
    } else {
      child.tree = parent;
    }
    if (config.validate_offspring) check_tree(child.tree, config, table.n_inputs());
    parents.push_back(std::move(child));
  }
  evaluate_all(std::span<Individual>(parents).subspan(n_parents), table, output_index, config.threads);
  return parents;
}

Population next_generation(Population population, Rng& rng, const EvolutionConfig& config, const TruthTable& table,
                           std::size_t output_index) {
  auto wins = tournament_wins(population, rng, config.tournament_size);
  auto parents = select_parents(std::move(population), wins);
  return breed(std::move(parents), rng, config, table, output_index);
}

Population initial_population(Rng& rng, const EvolutionConfig& config, const TruthTable& table,
                              std::size_t output_index) {
  Population population(config.population_size);
  const std::uint64_t base = rng.next();
  for (std::size_t i = 0; i < population.size(); ++i) {
    Rng tree_rng(mix_seed(base, i));
    population[i].tree =
        random_tree(tree_rng, table.n_inputs(), config.functions, config.init_depth, config.max_nodes);
    if (config.validate_offspring) check_tree(population[i].tree, config, table.n_inputs());
  }
  evaluate_all(population, table, output_index, config.threads);
  return population;
}

RunResult run_evolution(const TruthTable& table, std::size_t output_index, const EvolutionConfig& config, Rng& rng) {
  config.validate();
  if (output_index >= table.n_outputs()) throw Error(ErrorCode::InvalidConfig, "output index out of range");

  RunResult result;
  result.output_index = output_index;
  const std::uint64_t run_seed = rng.next();
  const std::size_t rows = table.row_count();

  Rng init_rng(mix_seed(run_seed, 0));
  auto population = initial_population(init_rng, config, table, output_index);

  auto finish = [&](const Individual& champion, bool solved, std::size_t generations) {
    result.champion = champion.tree;
    result.champion_fitness = champion.fitness;
    result.solved = solved;
    result.generations_used = generations;
    return result;
  };

  // The success predicate is only computed on retained parents, so a run
  // without any selection round is never solved.
  if (config.max_generations == 0) return finish(best_individual(population), false, 0);

  for (std::size_t gen = 1; gen <= config.max_generations; ++gen) {
    Rng gen_rng(mix_seed(run_seed, gen));
    result.history.push_back(stats_of(population, gen, rows));
    auto wins = tournament_wins(population, gen_rng, config.tournament_size);
    auto parents = select_parents(std::move(population), wins);
    if (const auto* sol = smallest_solution(parents)) return finish(*sol, true, gen);
    if (gen == config.max_generations) return finish(best_individual(parents), false, gen);
    population = breed(std::move(parents), gen_rng, config, table, output_index);
  }
  return result;  // unreachable
}

RunResult run_output_trials(const TruthTable& table, std::size_t output_index, const EvolutionConfig& config,
                            std::uint64_t base_seed, std::size_t first_trial) {
  std::optional<RunResult> best;
  std::size_t trials = 0;
  for (std::size_t trial = first_trial; trial <= config.max_trials; ++trial) {
    const std::uint64_t seed = mix_seed(mix_seed(base_seed, output_index), trial);
    Rng rng(seed);
    auto result = run_evolution(table, output_index, config, rng);
    result.trial_index = trial;
    result.seed = seed;
    ++trials;
    const bool better = !best || result.solved ||
                        result.champion_fitness.mismatches < best->champion_fitness.mismatches;
    if (better) best = std::move(result);
    if (best->solved) break;
  }
  if (!best) {
    best.emplace();
    best->output_index = output_index;
  }
  best->trials_run = trials;
  return *best;
}

std::vector<RunResult> run_trials(const TruthTable& table, const EvolutionConfig& config, Rng& rng) {
  config.validate();
  const std::uint64_t base = rng.next();
  std::vector<RunResult> results;
  results.reserve(table.n_outputs());
  for (std::size_t j = 0; j < table.n_outputs(); ++j) results.push_back(run_output_trials(table, j, config, base));
  return results;
}

}  // namespace circuitgp
