#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xorsym/bitvec.hpp"
#include "xorsym/errors.hpp"

namespace xorsym {

enum class GateOp { Not, And, Or, Xor, Const0, Const1 };

const char* to_string(GateOp op);

// Acyclic multi-output gate network. Signals are the inputs followed by the
// gates in definition order; operands always refer to earlier signals, which
// makes the network acyclic by construction. NOT takes exactly one operand,
// AND/OR/XOR take two or more (left fold), CONST0/CONST1 take none.
//
// File format (UTF-8, line oriented, '#' starts a comment):
//   inputs a b c
//   g1 = AND a b
//   out = XOR g1 c
//   outputs out
// The outputs line may appear anywhere after the inputs line. The input
// declaration order is the coordinate order for all vectors and bases.
class Circuit {
public:
  using Signal = std::uint32_t;

  struct Gate {
    std::string name;
    GateOp op;
    std::vector<Signal> operands;
  };

  explicit Circuit(std::vector<std::string> input_names);

  static Circuit parse(std::string_view text);
  std::string emit() const;

  std::size_t num_inputs() const { return inputs_.size(); }
  std::size_t num_gates() const { return gates_.size(); }
  std::size_t num_outputs() const { return outputs_.size(); }
  const std::vector<std::string>& input_names() const { return inputs_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<Signal>& outputs() const { return outputs_; }

  Signal input(std::size_t i) const { return static_cast<Signal>(i); }
  const std::string& signal_name(Signal s) const;
  // Signal for a defined name, or npos_signal when unknown.
  Signal find_signal(std::string_view name) const;
  static constexpr Signal npos_signal = ~Signal{0};

  // Derives an unused name from base by appending underscores.
  std::string fresh_name(std::string base) const;

  Signal add_gate(std::string name, GateOp op, std::vector<Signal> operands);
  void mark_output(Signal s);

  // Single forward pass; every gate is evaluated exactly once regardless of
  // fan-out. gate_evals, when given, is incremented per gate evaluation.
  BitVec eval(const BitVec& x, std::size_t* gate_evals = nullptr) const;

private:
  std::vector<std::string> inputs_;
  std::vector<Gate> gates_;
  std::vector<Signal> outputs_;
  std::unordered_map<std::string, Signal> by_name_;
};

}  // namespace xorsym
