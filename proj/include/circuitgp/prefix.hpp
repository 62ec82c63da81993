#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circuitgp/tree.hpp"

namespace circuitgp {

/// Default terminal names A0..A{n-1}; entry i names input index i.
std::vector<std::string> default_input_names(std::size_t n_inputs);

/// Renders `(NAME child ...)` for gates and the bare input name for
/// terminals. With no names given, terminals print as A<index>.
std::string to_prefix(const CircuitTree& tree, std::span<const std::string> input_names = {});

/// Inverse of to_prefix. Throws Error with SyntaxError, ArityError,
/// UnknownFunction or UnknownVariable.
CircuitTree parse_prefix(std::string_view text, std::span<const std::string> input_names);
CircuitTree parse_prefix(std::string_view text, std::size_t n_inputs);

}  // namespace circuitgp
