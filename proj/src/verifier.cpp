#include "circuitgp/verifier.hpp"

#include <cassert>
#include <memory>

namespace circuitgp {

namespace {

struct Interpreter {
  const CircuitTree& tree;
  std::span<const bool> assignment;
  SequentialFrame& frame;

  // Returns the node's value; `pos` advances past its subtree.
  bool eval(std::size_t& pos) {
    const std::size_t self = pos++;
    const Node& node = tree[self];
    if (node.is_terminal()) return assignment[node.input()];

    const FunctionDef& def = definition(node.function());
    bool args[3] = {false, false, false};
    for (std::size_t k = 0; k < def.arity; ++k) args[k] = eval(pos);
    const std::span<const bool> in(args, def.arity);
    if (!def.sequential()) return apply_combinational(def, in);

    const bool next = flipflop_step(def, frame.get(self), in);
    frame.set(self, next);
    return next;
  }
};

}  // namespace

bool naive_eval_row(const CircuitTree& tree, std::span<const bool> assignment, SequentialFrame& frame) {
  assert(!tree.empty());
  std::size_t pos = 0;
  return Interpreter{tree, assignment, frame}.eval(pos);
}

std::vector<bool> assignment_from_combination(std::uint32_t combination, std::size_t n_inputs) {
  std::vector<bool> bits(n_inputs);
  for (std::size_t i = 0; i < n_inputs; ++i) bits[i] = (combination >> i) & 1U;
  return bits;
}

Verdict verify_circuit(const CircuitTree& tree, const TruthTable& table, std::size_t output_index) {
  const std::size_t combinations = std::size_t{1} << table.n_inputs();
  SequentialFrame frame(tree.size());
  std::unique_ptr<bool[]> assignment(new bool[table.n_inputs()]);

  for (std::size_t row = 0; row < combinations; ++row) {
    const auto code = table.combination(row);
    for (std::size_t i = 0; i < table.n_inputs(); ++i) assignment[i] = (code >> i) & 1U;
    const bool desired = table.output_column(output_index).get(row);
    const bool measured = naive_eval_row(tree, {assignment.get(), table.n_inputs()}, frame);
    if (desired != measured) return Verdict{VerdictStatus::Wrong, code};
  }
  return Verdict{};
}

}  // namespace circuitgp
