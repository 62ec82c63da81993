#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "circuitgp/truth_table.hpp"
#include "circuitgp/tree.hpp"

namespace circuitgp {

/// Mismatch count of a circuit against one target column.
struct Fitness {
  std::size_t mismatches = 0;
  std::size_t total_rows = 0;

  bool correct() const noexcept { return mismatches == 0; }
  friend bool operator==(const Fitness&, const Fitness&) = default;
};

/// Flip-flop states for one evaluation, keyed by node position in the
/// tree. Every state starts at 0.
class SequentialFrame {
 public:
  explicit SequentialFrame(std::size_t node_count) : state_(node_count, 0) {}
  bool get(std::size_t pos) const { return state_[pos] != 0; }
  void set(std::size_t pos, bool v) { state_[pos] = v ? 1 : 0; }

 private:
  std::vector<std::uint8_t> state_;
};

/// Word-parallel evaluation of a combinational tree over every row of
/// `table`. Throws Error{SequentialNotAllowed} for flip-flop trees.
PackedColumn eval_packed(const CircuitTree& tree, const TruthTable& table);

/// Row-by-row evaluation treating each row as one clock edge, rows taken in
/// table order with all flip-flops starting at 0.
PackedColumn eval_sequential(const CircuitTree& tree, const TruthTable& table);

/// Dispatches on whether the tree has flip-flops.
PackedColumn evaluate(const CircuitTree& tree, const TruthTable& table);

Fitness fitness(const CircuitTree& tree, const TruthTable& table, std::size_t output_index);

/// 100 * mismatches / total_rows.
double error_percent(const Fitness& f);

}  // namespace circuitgp
