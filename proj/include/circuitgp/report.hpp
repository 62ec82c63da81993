#pragma once

#include <ostream>
#include <span>
#include <string>

#include "circuitgp/evolution.hpp"
#include "circuitgp/tree.hpp"

namespace circuitgp {

/// Graphviz digraph of the tree. Nodes are numbered n0.. in pre-order,
/// gates labeled by name and terminals by input name; edges run child to
/// parent.
std::string export_dot(const CircuitTree& tree, std::span<const std::string> input_names = {});

inline constexpr const char* kConvergenceHeader = "generation,best_error_pct,mean_error_pct,best_mismatches";

void write_convergence_csv(std::ostream& out, std::span<const GenerationStats> history);
std::string convergence_csv(std::span<const GenerationStats> history);

}  // namespace circuitgp
