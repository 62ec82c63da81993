#include "circuitgp/error.hpp"
#include "circuitgp/evaluator.hpp"
#include "circuitgp/prefix.hpp"
#include "circuitgp/truth_table.hpp"

#include <numeric>

namespace circuitgp {

TruthTable table_from_expression(const CircuitTree& tree, std::size_t n_inputs) {
  if (tree_metrics(tree).contains_sequential) {
    throw Error(ErrorCode::SequentialNotAllowed, "expression tables need a combinational tree");
  }
  if (n_inputs == 0 || n_inputs > 31) throw Error(ErrorCode::TooManyInputs, std::to_string(n_inputs) + " inputs");
  if (auto v = validate_tree(tree, tree.size(), n_inputs); !v.empty()) {
    throw Error(v.front().kind == ViolationKind::Terminal ? ErrorCode::UnknownVariable : ErrorCode::ArityError,
                v.front().message);
  }

  std::vector<std::uint32_t> combinations(std::size_t{1} << n_inputs);
  std::iota(combinations.begin(), combinations.end(), 0U);
  auto names = default_input_names(n_inputs);

  // Evaluate against an input-only table carrying a placeholder output.
  TruthTable inputs_only(names, {"F"}, combinations, {PackedColumn(combinations.size())});
  auto column = eval_packed(tree, inputs_only);
  return TruthTable(std::move(names), {"F"}, std::move(combinations), {std::move(column)});
}

}  // namespace circuitgp
