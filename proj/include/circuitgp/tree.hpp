#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "circuitgp/function_set.hpp"

namespace circuitgp {

/// One parse-tree node: either a gate or a terminal reading an input.
class Node {
 public:
  static constexpr Node terminal(std::uint32_t input) noexcept { return Node(input); }
  static constexpr Node gate(Function f) noexcept { return Node(f); }

  constexpr bool is_terminal() const noexcept { return terminal_; }
  constexpr Function function() const noexcept { return function_; }
  constexpr std::uint32_t input() const noexcept { return input_; }
  std::uint8_t arity() const noexcept { return terminal_ ? 0 : definition(function_).arity; }

  friend constexpr bool operator==(const Node&, const Node&) = default;

 private:
  constexpr explicit Node(std::uint32_t input) noexcept : input_(input), function_(Function::Or), terminal_(true) {}
  constexpr explicit Node(Function f) noexcept : input_(0), function_(f), terminal_(false) {}

  std::uint32_t input_;
  Function function_;
  bool terminal_;
};

/// Circuit genome stored as a pre-order (prefix) node sequence. The subtree
/// rooted at position p occupies the contiguous range [p, subtree_end(p)).
/// Node positions are stable identities for the lifetime of a tree value.
///
/// Construction does not validate; use validate_tree() on untrusted input.
class CircuitTree {
 public:
  CircuitTree() = default;
  explicit CircuitTree(std::vector<Node> prefix) : nodes_(std::move(prefix)) {}

  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  const Node& operator[](std::size_t pos) const { return nodes_[pos]; }

  /// One past the last node of the subtree rooted at `pos`.
  std::size_t subtree_end(std::size_t pos) const;

  /// Positions of the direct children of `pos`, left to right.
  std::vector<std::size_t> children(std::size_t pos) const;

  /// Depth of every node, root = 1.
  std::vector<std::size_t> node_depths() const;

  /// Copy with the subtree at `pos` replaced by `replacement`.
  CircuitTree replace_subtree(std::size_t pos, std::span<const Node> replacement) const;

  friend bool operator==(const CircuitTree&, const CircuitTree&) = default;

 private:
  std::vector<Node> nodes_;
};

struct TreeMetrics {
  std::size_t node_count = 0;
  std::size_t depth = 0;
  bool contains_sequential = false;
};

TreeMetrics tree_metrics(const CircuitTree& tree);

enum class ViolationKind { Arity, Budget, Terminal, Empty };

struct Violation {
  ViolationKind kind;
  std::size_t position;
  std::string message;
};

/// Every structural problem found, or an empty list when the tree is valid.
std::vector<Violation> validate_tree(const CircuitTree& tree, std::size_t max_nodes, std::size_t n_inputs);

inline bool is_valid(const CircuitTree& tree, std::size_t max_nodes, std::size_t n_inputs) {
  return validate_tree(tree, max_nodes, n_inputs).empty();
}

}  // namespace circuitgp
