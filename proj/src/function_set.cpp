#include "circuitgp/function_set.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "circuitgp/error.hpp"

namespace circuitgp {

namespace {

constexpr auto C = FunctionKind::Combinational;
constexpr auto S = FunctionKind::Sequential;

constexpr std::array<FunctionDef, kFunctionCount> kTable{{
    {Function::Or, "OR", 2, C},
    {Function::And, "AND", 2, C},
    {Function::Not, "NOT", 1, C},
    {Function::Nand, "NAND", 2, C},
    {Function::Nor, "NOR", 2, C},
    {Function::HalfAdder, "HA", 2, C},
    {Function::FullAdder, "FA", 3, C},
    {Function::JkFlipFlop, "JKFF", 2, S},
    {Function::RsFlipFlop, "RSFF", 2, S},
    {Function::TFlipFlop, "TFF", 1, S},
    {Function::DFlipFlop, "DFF", 1, S},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

const std::array<FunctionDef, kFunctionCount>& function_table() noexcept { return kTable; }

const FunctionDef& definition(Function f) noexcept { return kTable[static_cast<std::size_t>(f)]; }

const FunctionDef& lookup_function(std::string_view name) {
  auto it = std::find_if(kTable.begin(), kTable.end(), [&](const FunctionDef& d) { return d.name == name; });
  if (it == kTable.end()) {
    throw Error(ErrorCode::UnknownFunction, "unknown function '" + std::string(name) + "'");
  }
  return *it;
}

std::vector<Function> parse_function_list(std::string_view list) {
  std::vector<Function> out;
  while (!list.empty()) {
    auto comma = list.find(',');
    auto item = trim(list.substr(0, comma));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (item.empty()) continue;
    auto f = lookup_function(item).function;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidConfig, "empty function list");
  return out;
}

bool apply_combinational(const FunctionDef& def, std::span<const bool> args) {
  assert(!def.sequential() && args.size() == def.arity);
  switch (def.function) {
    case Function::Or: return args[0] || args[1];
    case Function::And: return args[0] && args[1];
    case Function::Not: return !args[0];
    case Function::Nand: return !(args[0] && args[1]);
    case Function::Nor: return !(args[0] || args[1]);
    case Function::HalfAdder: return args[0] != args[1];
    case Function::FullAdder: return (args[0] != args[1]) != args[2];
    default: break;
  }
  assert(false && "sequential function passed to apply_combinational");
  return false;
}

bool flipflop_step(const FunctionDef& def, bool state, std::span<const bool> inputs) {
  assert(def.sequential() && inputs.size() == def.arity);
  switch (def.function) {
    case Function::JkFlipFlop: return (inputs[0] && !state) || (!inputs[1] && state);
    case Function::RsFlipFlop: return inputs[0] || (!inputs[1] && state);
    case Function::TFlipFlop: return inputs[0] != state;
    case Function::DFlipFlop: return inputs[0];
    default: break;
  }
  assert(false && "combinational function passed to flipflop_step");
  return state;
}

}  // namespace circuitgp
