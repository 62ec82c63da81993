#include "circuitgp/tree.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace circuitgp {

std::size_t CircuitTree::subtree_end(std::size_t pos) const {
  std::size_t open = 1;
  while (open > 0 && pos < nodes_.size()) {
    open = open - 1 + nodes_[pos].arity();
    ++pos;
  }
  return pos;
}

std::vector<std::size_t> CircuitTree::children(std::size_t pos) const {
  std::vector<std::size_t> out;
  const auto arity = nodes_[pos].arity();
  out.reserve(arity);
  std::size_t child = pos + 1;
  for (std::uint8_t i = 0; i < arity && child < nodes_.size(); ++i) {
    out.push_back(child);
    child = subtree_end(child);
  }
  return out;
}

std::vector<std::size_t> CircuitTree::node_depths() const {
  std::vector<std::size_t> depths(nodes_.size(), 0);
  // (depth, remaining children) of open ancestors
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t pos = 0; pos < nodes_.size(); ++pos) {
    while (!stack.empty() && stack.back().second == 0) stack.pop_back();
    std::size_t depth = 1;
    if (!stack.empty()) {
      depth = stack.back().first + 1;
      --stack.back().second;
    }
    depths[pos] = depth;
    if (auto a = nodes_[pos].arity(); a > 0) stack.emplace_back(depth, a);
  }
  return depths;
}

CircuitTree CircuitTree::replace_subtree(std::size_t pos, std::span<const Node> replacement) const {
  const auto end = subtree_end(pos);
  std::vector<Node> out;
  out.reserve(nodes_.size() - (end - pos) + replacement.size());
  out.insert(out.end(), nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), nodes_.begin() + static_cast<std::ptrdiff_t>(end), nodes_.end());
  return CircuitTree(std::move(out));
}

TreeMetrics tree_metrics(const CircuitTree& tree) {
  TreeMetrics m;
  m.node_count = tree.size();
  auto depths = tree.node_depths();
  m.depth = depths.empty() ? 0 : *std::max_element(depths.begin(), depths.end());
  m.contains_sequential = std::any_of(tree.nodes().begin(), tree.nodes().end(), [](const Node& n) {
    return !n.is_terminal() && definition(n.function()).sequential();
  });
  return m;
}

std::vector<Violation> validate_tree(const CircuitTree& tree, std::size_t max_nodes, std::size_t n_inputs) {
  std::vector<Violation> out;
  if (tree.empty()) {
    out.push_back({ViolationKind::Empty, 0, "tree has no nodes"});
    return out;
  }
  if (tree.size() > max_nodes) {
    out.push_back({ViolationKind::Budget, 0,
                   std::to_string(tree.size()) + " nodes exceed the budget of " + std::to_string(max_nodes)});
  }

  // (position, children still expected)
  std::vector<std::pair<std::size_t, std::size_t>> open;
  bool root_closed = false;
  for (std::size_t pos = 0; pos < tree.size(); ++pos) {
    const Node& node = tree[pos];
    if (root_closed) {
      out.push_back({ViolationKind::Arity, pos, "node outside the root's subtree"});
    }
    if (!open.empty() && --open.back().second == 0) open.pop_back();
    if (node.is_terminal()) {
      if (node.input() >= n_inputs) {
        out.push_back({ViolationKind::Terminal, pos,
                       "terminal A" + std::to_string(node.input()) + " is out of range for " +
                           std::to_string(n_inputs) + " inputs"});
      }
    } else {
      open.emplace_back(pos, node.arity());
    }
    if (open.empty()) root_closed = true;
  }
  for (const auto& [pos, missing] : open) {
    const auto& def = definition(tree[pos].function());
    out.push_back({ViolationKind::Arity, pos,
                   std::string(def.name) + " has " + std::to_string(def.arity - missing) + " of " +
                       std::to_string(def.arity) + " children"});
  }
  return out;
}

}  // namespace circuitgp
