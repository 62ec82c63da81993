#include "circuitgp/prefix.hpp"

#include <algorithm>
#include <cctype>

#include "circuitgp/error.hpp"

namespace circuitgp {

std::vector<std::string> default_input_names(std::size_t n_inputs) {
  std::vector<std::string> names;
  names.reserve(n_inputs);
  for (std::size_t i = 0; i < n_inputs; ++i) names.push_back("A" + std::to_string(i));
  return names;
}

namespace {

void write_prefix(const CircuitTree& tree, std::size_t pos, std::span<const std::string> names, std::string& out) {
  const Node& node = tree[pos];
  if (node.is_terminal()) {
    if (node.input() < names.size()) {
      out += names[node.input()];
    } else {
      out += 'A';
      out += std::to_string(node.input());
    }
    return;
  }
  out += '(';
  out += definition(node.function()).name;
  for (auto child : tree.children(pos)) {
    out += ' ';
    write_prefix(tree, child, names, out);
  }
  out += ')';
}

class PrefixParser {
 public:
  PrefixParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

  CircuitTree parse() {
    parse_node();
    skip_space();
    if (pos_ != text_.size()) fail(ErrorCode::SyntaxError, "trailing input");
    return CircuitTree(std::move(nodes_));
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& what) const {
    throw Error(code, what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view read_symbol() {
    skip_space();
    auto start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') break;
      ++pos_;
    }
    if (start == pos_) fail(ErrorCode::SyntaxError, "expected a symbol");
    return text_.substr(start, pos_ - start);
  }

  void parse_node() {
    skip_space();
    if (pos_ >= text_.size()) fail(ErrorCode::SyntaxError, "unexpected end of input");
    if (text_[pos_] == ')') fail(ErrorCode::SyntaxError, "unbalanced ')'");
    if (text_[pos_] != '(') {
      auto name = read_symbol();
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) fail(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
      nodes_.push_back(Node::terminal(static_cast<std::uint32_t>(it - names_.begin())));
      return;
    }
    ++pos_;
    auto name = read_symbol();
    const FunctionDef* def = nullptr;
    try {
      def = &lookup_function(name);
    } catch (const Error&) {
      fail(ErrorCode::UnknownFunction, "unknown function '" + std::string(name) + "'");
    }
    nodes_.push_back(Node::gate(def->function));
    std::size_t count = 0;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail(ErrorCode::SyntaxError, "unbalanced '('");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      parse_node();
      ++count;
    }
    if (count != def->arity) {
      fail(ErrorCode::ArityError, std::string(def->name) + " expects " + std::to_string(def->arity) +
                                      " arguments, got " + std::to_string(count));
    }
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;
};

}  // namespace

std::string to_prefix(const CircuitTree& tree, std::span<const std::string> input_names) {
  std::string out;
  if (!tree.empty()) write_prefix(tree, 0, input_names, out);
  return out;
}

CircuitTree parse_prefix(std::string_view text, std::span<const std::string> input_names) {
  return PrefixParser(text, input_names).parse();
}

CircuitTree parse_prefix(std::string_view text, std::size_t n_inputs) {
  auto names = default_input_names(n_inputs);
  return parse_prefix(text, names);
}

}  // namespace circuitgp
