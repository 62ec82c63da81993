#include "circuitgp/evaluator.hpp"

#include <array>
#include <cassert>

#include "circuitgp/error.hpp"

namespace circuitgp {

namespace {

using Word = PackedColumn::Word;

// Evaluates the tree for one 64-row word. Nodes are visited in reverse
// prefix order, so popping yields children left to right.
Word eval_word(std::span<const Node> nodes, const TruthTable& table, std::size_t w, Word mask,
               std::vector<Word>& stack) {
  stack.clear();
  for (std::size_t i = nodes.size(); i-- > 0;) {
    const Node& node = nodes[i];
    if (node.is_terminal()) {
      stack.push_back(table.input_column(node.input()).words()[w]);
      continue;
    }
    const Word a = stack.back();
    Word r = 0;
    switch (node.function()) {
      case Function::Not: r = ~a & mask; stack.back() = r; continue;
      case Function::Or: stack.pop_back(); r = a | stack.back(); break;
      case Function::And: stack.pop_back(); r = a & stack.back(); break;
      case Function::Nand: stack.pop_back(); r = ~(a & stack.back()) & mask; break;
      case Function::Nor: stack.pop_back(); r = ~(a | stack.back()) & mask; break;
      case Function::HalfAdder: stack.pop_back(); r = a ^ stack.back(); break;
      case Function::FullAdder: {
        stack.pop_back();
        const Word b = stack.back();
        stack.pop_back();
        r = a ^ b ^ stack.back();
        break;
      }
      default:
        throw Error(ErrorCode::SequentialNotAllowed, "flip-flop in a packed evaluation");
    }
    stack.back() = r;
  }
  assert(stack.size() == 1);
  return stack.back();
}

void require_combinational(const CircuitTree& tree) {
  if (tree_metrics(tree).contains_sequential) {
    throw Error(ErrorCode::SequentialNotAllowed, "tree contains flip-flops");
  }
}

}  // namespace

PackedColumn eval_packed(const CircuitTree& tree, const TruthTable& table) {
  require_combinational(tree);
  PackedColumn out(table.row_count());
  std::vector<Word> stack;
  stack.reserve(tree.size());
  auto words = out.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    words[w] = eval_word(tree.nodes(), table, w, out.mask(w), stack);
  }
  return out;
}

PackedColumn eval_sequential(const CircuitTree& tree, const TruthTable& table) {
  PackedColumn out(table.row_count());
  SequentialFrame frame(tree.size());
  std::vector<bool> stack;
  stack.reserve(tree.size());
  std::array<bool, 3> args{};
  const auto nodes = tree.nodes();

  for (std::size_t row = 0; row < table.row_count(); ++row) {
    const auto combination = table.combination(row);
    stack.clear();
    for (std::size_t i = nodes.size(); i-- > 0;) {
      const Node& node = nodes[i];
      if (node.is_terminal()) {
        stack.push_back((combination >> node.input()) & 1U);
        continue;
      }
      const auto& def = definition(node.function());
      for (std::size_t k = 0; k < def.arity; ++k) {
        args[k] = stack.back();
        stack.pop_back();
      }
      const std::span<const bool> in(args.data(), def.arity);
      bool value;
      if (def.sequential()) {
        value = flipflop_step(def, frame.get(i), in);
        frame.set(i, value);
      } else {
        value = apply_combinational(def, in);
      }
      stack.push_back(value);
    }
    out.set(row, stack.back());
  }
  return out;
}

PackedColumn evaluate(const CircuitTree& tree, const TruthTable& table) {
  return tree_metrics(tree).contains_sequential ? eval_sequential(tree, table) : eval_packed(tree, table);
}

Fitness fitness(const CircuitTree& tree, const TruthTable& table, std::size_t output_index) {
  assert(output_index < table.n_outputs());
  const auto& target = table.output_column(output_index);
  return Fitness{hamming_distance(evaluate(tree, table), target), table.row_count()};
}

double error_percent(const Fitness& f) {
  assert(f.total_rows > 0);
  return 100.0 * static_cast<double>(f.mismatches) / static_cast<double>(f.total_rows);
}

}  // namespace circuitgp
