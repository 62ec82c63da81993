#include "circuitgp/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "circuitgp/error.hpp"

namespace circuitgp {

std::size_t PackedColumn::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t hamming_distance(const PackedColumn& a, const PackedColumn& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t n = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) n += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return n;
}

std::vector<PackedColumn> pack_columns(std::span<const std::uint32_t> combinations, std::size_t n_inputs) {
  std::vector<PackedColumn> cols(n_inputs, PackedColumn(combinations.size()));
  for (std::size_t r = 0; r < combinations.size(); ++r) {
    for (std::size_t i = 0; i < n_inputs; ++i) {
      if ((combinations[r] >> i) & 1U) cols[i].set(r, true);
    }
  }
  return cols;
}

TruthTable::TruthTable(std::vector<std::string> input_names, std::vector<std::string> output_names,
                       std::vector<std::uint32_t> combinations, std::vector<PackedColumn> outputs)
    : input_names_(std::move(input_names)),
      output_names_(std::move(output_names)),
      combinations_(std::move(combinations)),
      outputs_(std::move(outputs)) {
  const auto n = input_names_.size();
  if (n == 0) throw Error(ErrorCode::SyntaxError, "a truth table needs at least one input");
  if (n > 31) throw Error(ErrorCode::TooManyInputs, std::to_string(n) + " inputs");
  if (output_names_.empty()) throw Error(ErrorCode::SyntaxError, "a truth table needs at least one output");
  if (outputs_.size() != output_names_.size()) {
    throw Error(ErrorCode::WidthMismatch, "output column count differs from output names");
  }
  const std::size_t expected = std::size_t{1} << n;
  std::vector<bool> seen(expected, false);
  for (auto c : combinations_) {
    if (c >= expected) throw Error(ErrorCode::WidthMismatch, "combination out of range");
    if (seen[c]) throw Error(ErrorCode::DuplicateCombination, "combination " + format_combination(c) + " repeated");
    seen[c] = true;
  }
  if (combinations_.size() != expected) {
    auto missing = static_cast<std::uint32_t>(std::find(seen.begin(), seen.end(), false) - seen.begin());
    throw Error(ErrorCode::MissingCombination, "combination " + format_combination(missing) + " absent");
  }
  for (const auto& col : outputs_) {
    if (col.length() != expected) throw Error(ErrorCode::WidthMismatch, "output column length mismatch");
  }
  inputs_ = pack_columns(combinations_, n);
}

TruthRow TruthTable::row(std::size_t r) const {
  TruthRow out{combinations_[r], {}};
  out.outputs.reserve(outputs_.size());
  for (const auto& col : outputs_) out.outputs.push_back(col.get(r));
  return out;
}

std::size_t TruthTable::output_index(std::string_view name) const {
  auto it = std::find(output_names_.begin(), output_names_.end(), name);
  if (it == output_names_.end()) throw Error(ErrorCode::UnknownVariable, "no output named '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - output_names_.begin());
}

std::string TruthTable::format_combination(std::uint32_t combination) const {
  std::string out;
  for (std::size_t k = input_names_.size(); k-- > 0;) out += ((combination >> k) & 1U) ? '1' : '0';
  return out;
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> header_names(std::string_view line, std::string_view key, std::size_t lineno) {
  auto colon = line.find(':');
  auto head = split_ws(line.substr(0, colon));
  if (colon == std::string_view::npos || head.size() != 1 || head[0] != key) {
    throw Error(ErrorCode::SyntaxError, "expected '" + std::string(key) + ": <names>'", lineno);
  }
  auto names = split_ws(line.substr(colon + 1));
  if (names.empty()) throw Error(ErrorCode::SyntaxError, "no names after '" + std::string(key) + ":'", lineno);
  std::unordered_set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) throw Error(ErrorCode::SyntaxError, "duplicate name", lineno);
  return names;
}

}  // namespace

TruthTable parse_table(std::string_view text, std::size_t max_inputs) {
  std::vector<std::string> header_inputs;
  std::vector<std::string> outputs;
  std::vector<std::uint32_t> combinations;
  std::vector<std::vector<bool>> output_rows;
  std::vector<std::size_t> row_lines;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t lineno = 0;
  std::unordered_set<std::uint32_t> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (header_inputs.empty()) {
      header_inputs = header_names(line, "inputs", lineno);
      n = header_inputs.size();
      if (n > max_inputs) {
        throw Error(ErrorCode::TooManyInputs,
                    std::to_string(n) + " inputs exceed the limit of " + std::to_string(max_inputs), lineno);
      }
      if (n > 31) throw Error(ErrorCode::TooManyInputs, std::to_string(n) + " inputs", lineno);
      continue;
    }
    if (outputs.empty()) {
      outputs = header_names(line, "outputs", lineno);
      m = outputs.size();
      continue;
    }

    std::string bits;
    for (const auto& t : tokens) bits += t;
    if (bits.size() != n + m) {
      throw Error(ErrorCode::WidthMismatch,
                  "row has " + std::to_string(bits.size()) + " bits, expected " + std::to_string(n + m), lineno);
    }
    if (bits.find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorCode::SyntaxError, "row contains a character other than 0 or 1", lineno);
    }
    std::uint32_t code = 0;
    for (std::size_t k = 0; k < n; ++k) code = (code << 1) | static_cast<std::uint32_t>(bits[k] == '1');
    if (!seen.insert(code).second) {
      throw Error(ErrorCode::DuplicateCombination, "combination " + bits.substr(0, n) + " repeated", lineno);
    }
    combinations.push_back(code);
    std::vector<bool> out_bits(m);
    for (std::size_t j = 0; j < m; ++j) out_bits[j] = bits[n + j] == '1';
    output_rows.push_back(std::move(out_bits));
  }

  if (header_inputs.empty()) throw Error(ErrorCode::SyntaxError, "missing 'inputs:' header", lineno);
  if (outputs.empty()) throw Error(ErrorCode::SyntaxError, "missing 'outputs:' header", lineno);
  const std::size_t expected = std::size_t{1} << n;
  if (combinations.size() != expected) {
    throw Error(ErrorCode::MissingCombination,
                std::to_string(combinations.size()) + " of " + std::to_string(expected) + " combinations present",
                lineno);
  }

  std::vector<PackedColumn> cols(m, PackedColumn(expected));
  for (std::size_t r = 0; r < expected; ++r) {
    for (std::size_t j = 0; j < m; ++j) cols[j].set(r, output_rows[r][j]);
  }
  std::vector<std::string> input_names(header_inputs.rbegin(), header_inputs.rend());
  return TruthTable(std::move(input_names), std::move(outputs), std::move(combinations), std::move(cols));
}

std::string serialize_table(const TruthTable& table) {
  std::string out = "inputs:";
  for (auto it = table.input_names().rbegin(); it != table.input_names().rend(); ++it) out += " " + *it;
  out += "\noutputs:";
  for (const auto& name : table.output_names()) out += " " + name;
  out += '\n';
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    out += table.format_combination(table.combination(r));
    out += ' ';
    for (std::size_t j = 0; j < table.n_outputs(); ++j) out += table.output_column(j).get(r) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace circuitgp
