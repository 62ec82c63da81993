#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circuitgp/tree.hpp"

namespace circuitgp {

/// Bit column over the rows of a truth table; bit i is row i. Bits past
/// `length()` in the last word are always zero.
class PackedColumn {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  PackedColumn() = default;
  explicit PackedColumn(std::size_t length) : words_(word_count(length), 0), length_(length) {}

  static constexpr std::size_t word_count(std::size_t length) noexcept { return (length + kWordBits - 1) / kWordBits; }

  std::size_t length() const noexcept { return length_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  /// Valid-bit mask for word `w`.
  Word mask(std::size_t w) const noexcept {
    const auto rem = length_ - w * kWordBits;
    return rem >= kWordBits ? ~Word{0} : ((Word{1} << rem) - 1);
  }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool v) noexcept {
    const Word bit = Word{1} << (i % kWordBits);
    if (v) words_[i / kWordBits] |= bit; else words_[i / kWordBits] &= ~bit;
  }

  std::size_t popcount() const noexcept;

  friend bool operator==(const PackedColumn&, const PackedColumn&) = default;

 private:
  std::vector<Word> words_;
  std::size_t length_ = 0;
};

/// Number of positions where `a` and `b` differ. Lengths must match.
std::size_t hamming_distance(const PackedColumn& a, const PackedColumn& b);

inline constexpr std::size_t kDefaultMaxInputs = 20;

struct TruthRow {
  /// Input combination code: bit i holds input index i.
  std::uint32_t combination;
  std::vector<bool> outputs;
};

/// A complete truth table: 2^n rows in source order, each input
/// combination exactly once. Input index 0 is the least significant
/// (rightmost) header column, so a header `inputs: A2 A1 A0` gives A0
/// index 0. Row order doubles as the clock sequence for sequential trees.
class TruthTable {
 public:
  /// Validates completeness and widths. `outputs[j]` is the output column j
  /// in row order.
  TruthTable(std::vector<std::string> input_names, std::vector<std::string> output_names,
             std::vector<std::uint32_t> combinations, std::vector<PackedColumn> outputs);

  std::size_t n_inputs() const noexcept { return input_names_.size(); }
  std::size_t n_outputs() const noexcept { return output_names_.size(); }
  std::size_t row_count() const noexcept { return combinations_.size(); }

  /// Names by input index (index 0 first).
  const std::vector<std::string>& input_names() const noexcept { return input_names_; }
  const std::vector<std::string>& output_names() const noexcept { return output_names_; }

  std::uint32_t combination(std::size_t row) const { return combinations_[row]; }
  std::span<const std::uint32_t> combinations() const noexcept { return combinations_; }
  TruthRow row(std::size_t row) const;

  const PackedColumn& input_column(std::size_t input) const { return inputs_[input]; }
  const PackedColumn& output_column(std::size_t output) const { return outputs_[output]; }

  /// Index of the named output; throws Error{UnknownVariable}.
  std::size_t output_index(std::string_view name) const;

  /// Bits of `combination` in header order (most significant first), e.g. "011".
  std::string format_combination(std::uint32_t combination) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
  std::vector<std::uint32_t> combinations_;
  std::vector<PackedColumn> inputs_;
  std::vector<PackedColumn> outputs_;
};

/// Input columns for the given row sequence: column i bit r = bit i of
/// `combinations[r]`.
std::vector<PackedColumn> pack_columns(std::span<const std::uint32_t> combinations, std::size_t n_inputs);

/// Reads the text format:
///   inputs: A2 A1 A0
///   outputs: F
///   011 1
/// `#` starts a comment; blank lines are skipped.
TruthTable parse_table(std::string_view text, std::size_t max_inputs = kDefaultMaxInputs);

std::string serialize_table(const TruthTable& table);

/// Canonical-order table (row r = combination r) whose single output `F`
/// is the given combinational tree. Throws Error{SequentialNotAllowed}.
TruthTable table_from_expression(const CircuitTree& tree, std::size_t n_inputs);

}  // namespace circuitgp
