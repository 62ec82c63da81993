#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "circuitgp/evaluator.hpp"
#include "circuitgp/truth_table.hpp"
#include "circuitgp/tree.hpp"

namespace circuitgp {

// Exhaustive checker for finished circuits. It interprets the tree one row
// at a time by direct recursion and shares no evaluation code with
// evaluator.cpp, so the two act as oracles for each other.

enum class VerdictStatus { Correct, Wrong };

struct Verdict {
  VerdictStatus status = VerdictStatus::Correct;
  /// Input combination code of the first failing row, in table row order.
  std::optional<std::uint32_t> first_failing_combination;

  bool correct() const noexcept { return status == VerdictStatus::Correct; }
};

/// Value of the tree for one input assignment (`assignment[i]` is input
/// index i). Flip-flops read and update `frame`.
bool naive_eval_row(const CircuitTree& tree, std::span<const bool> assignment, SequentialFrame& frame);

/// Unpacks a combination code into an assignment of `n_inputs` bits.
std::vector<bool> assignment_from_combination(std::uint32_t combination, std::size_t n_inputs);

Verdict verify_circuit(const CircuitTree& tree, const TruthTable& table, std::size_t output_index);

}  // namespace circuitgp
