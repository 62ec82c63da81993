#include "circuitgp/report.hpp"

#include <cstdio>
#include <sstream>

#include "circuitgp/error.hpp"

namespace circuitgp {

std::string export_dot(const CircuitTree& tree, std::span<const std::string> input_names) {
  std::string out = "digraph circuit {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const Node& node = tree[i];
    out += "  n" + std::to_string(i) + " [label=\"";
    if (node.is_terminal()) {
      out += node.input() < input_names.size() ? input_names[node.input()] : "A" + std::to_string(node.input());
      out += "\", shape=plaintext];\n";
    } else {
      out += definition(node.function()).name;
      out += "\", shape=box];\n";
    }
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (auto child : tree.children(i)) {
      out += "  n" + std::to_string(child) + " -> n" + std::to_string(i) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

void write_convergence_csv(std::ostream& out, std::span<const GenerationStats> history) {
  if (history.empty()) throw Error(ErrorCode::Io, "empty convergence history");
  out << kConvergenceHeader << '\n';
  char line[128];
  for (const auto& g : history) {
    std::snprintf(line, sizeof line, "%zu,%.6f,%.6f,%zu\n", g.generation, g.best_error_pct, g.mean_error_pct,
                  g.best_mismatches);
    out << line;
  }
}

std::string convergence_csv(std::span<const GenerationStats> history) {
  std::ostringstream out;
  write_convergence_csv(out, history);
  return out.str();
}

}  // namespace circuitgp
