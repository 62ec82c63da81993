#pragma once

// Shared fixtures for the unit and acceptance suites: the bundled sample
// table, random instance generators and literal gate tables that do not go
// through the library's evaluation code.

#include <cstdint>
#include <string>
#include <vector>

#include "circuitgp/evolution.hpp"
#include "circuitgp/function_set.hpp"
#include "circuitgp/prefix.hpp"
#include "circuitgp/rng.hpp"
#include "circuitgp/truth_table.hpp"

namespace circuitgp::testing {

inline constexpr const char* kTable3Text =
    "# sample 3-input table\n"
    "inputs: A2 A1 A0\n"
    "outputs: F\n"
    "000 0\n"
    "001 0\n"
    "010 0\n"
    "011 1\n"
    "100 1\n"
    "101 1\n"
    "110 1\n"
    "111 1\n";

inline constexpr const char* kGoldenCircuit = "(AND (OR A0 A2) (OR A2 A1))";

inline TruthTable table3() { return parse_table(kTable3Text); }

inline const std::vector<Function>& combinational_functions() {
  static const std::vector<Function> fs{Function::Or,   Function::And, Function::Not,       Function::Nand,
                                        Function::Nor,  Function::HalfAdder, Function::FullAdder};
  return fs;
}

inline const std::vector<Function>& all_functions() {
  static const std::vector<Function> fs = [] {
    std::vector<Function> out;
    for (const auto& d : function_table()) out.push_back(d.function);
    return out;
  }();
  return fs;
}

/// Value of `f` read off a literal truth table. Row index packs the
/// arguments with args[0] as bit 0.
inline bool literal_gate(Function f, std::uint32_t row) {
  //                          row: 0 1 2 3 4 5 6 7
  switch (f) {
    case Function::Or: return (0b1110u >> row) & 1u;
    case Function::And: return (0b1000u >> row) & 1u;
    case Function::Not: return (0b01u >> row) & 1u;
    case Function::Nand: return (0b0111u >> row) & 1u;
    case Function::Nor: return (0b0001u >> row) & 1u;
    case Function::HalfAdder: return (0b0110u >> row) & 1u;
    case Function::FullAdder: return (0b10010110u >> row) & 1u;
    default: return false;
  }
}

/// Next state from a literal characteristic table. Row packs
/// (inputs[0], inputs[1], ..., Q) with inputs[0] as bit 0 and Q as the
/// highest bit.
inline bool literal_next_state(Function f, std::uint32_t row) {
  switch (f) {
    // J K Q : J=bit0 K=bit1 Q=bit2
    // Q=0: JK=00->0 10->1 01->0 11->1 ; Q=1: 00->1 10->1 01->0 11->0
    case Function::JkFlipFlop: return (0b0011'1010u >> row) & 1u;
    // S R Q : Q=0: 00->0 10->1 01->0 11->1 ; Q=1: 00->1 10->1 01->0 11->1
    case Function::RsFlipFlop: return (0b1011'1010u >> row) & 1u;
    // T Q : T=bit0 Q=bit1 ; 00->0 10->1 01->1 11->0
    case Function::TFlipFlop: return (0b0110u >> row) & 1u;
    // D Q : 00->0 10->1 01->0 11->1
    case Function::DFlipFlop: return (0b1010u >> row) & 1u;
    default: return false;
  }
}

/// Random table over `n` inputs with a random row order and `m` random
/// output columns.
inline TruthTable random_table(Rng& rng, std::size_t n, std::size_t m, bool shuffle_rows = true) {
  std::vector<std::uint32_t> combos(std::size_t{1} << n);
  for (std::uint32_t i = 0; i < combos.size(); ++i) combos[i] = i;
  if (shuffle_rows) {
    for (std::size_t i = combos.size() - 1; i > 0; --i) std::swap(combos[i], combos[rng.below(i + 1)]);
  }
  std::vector<PackedColumn> outs(m, PackedColumn(combos.size()));
  std::vector<std::string> out_names;
  for (std::size_t j = 0; j < m; ++j) {
    out_names.push_back("F" + std::to_string(j));
    for (std::size_t r = 0; r < combos.size(); ++r) outs[j].set(r, rng.coin());
  }
  return TruthTable(default_input_names(n), out_names, combos, outs);
}

}  // namespace circuitgp::testing
