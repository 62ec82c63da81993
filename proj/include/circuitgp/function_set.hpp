#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace circuitgp {

/// The gates and memory elements a circuit tree may be built from.
enum class Function : std::uint8_t {
  Or,
  And,
  Not,
  Nand,
  Nor,
  HalfAdder,
  FullAdder,
  JkFlipFlop,
  RsFlipFlop,
  TFlipFlop,
  DFlipFlop,
};

inline constexpr std::size_t kFunctionCount = 11;

enum class FunctionKind : std::uint8_t { Combinational, Sequential };

struct FunctionDef {
  Function function;
  std::string_view name;
  std::uint8_t arity;
  FunctionKind kind;

  bool sequential() const noexcept { return kind == FunctionKind::Sequential; }
};

/// All eleven definitions, indexed by `static_cast<std::size_t>(Function)`.
const std::array<FunctionDef, kFunctionCount>& function_table() noexcept;

const FunctionDef& definition(Function f) noexcept;

/// Throws Error{UnknownFunction} for names outside the table. Names are
/// case-sensitive and uppercase ("AND", "JKFF", ...).
const FunctionDef& lookup_function(std::string_view name);

/// Parses a comma-separated list such as "AND,OR,NOT". Duplicates are
/// dropped; order of first appearance is kept.
std::vector<Function> parse_function_list(std::string_view list);

/// HA and FA yield only their sum bit. `args.size()` must equal the arity.
bool apply_combinational(const FunctionDef& def, std::span<const bool> args);

/// Next state Q' of a flip-flop given its current state and inputs.
/// JK: J·¬Q + ¬K·Q.  RS: S + ¬R·Q, with S=R=1 setting.  T: T⊕Q.  D: D.
bool flipflop_step(const FunctionDef& def, bool state, std::span<const bool> inputs);

}  // namespace circuitgp
