#include "xorsym/circuit.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "xorsym/errors.hpp"

namespace xorsym {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const char c = s[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

bool op_from_token(const std::string& tok, GateOp& op) {
  if (tok == "NOT") op = GateOp::Not;
  else if (tok == "AND") op = GateOp::And;
  else if (tok == "OR") op = GateOp::Or;
  else if (tok == "XOR") op = GateOp::Xor;
  else if (tok == "CONST0") op = GateOp::Const0;
  else if (tok == "CONST1") op = GateOp::Const1;
  else return false;
  return true;
}

void check_arity(GateOp op, std::size_t n, std::size_t line) {
  switch (op) {
    case GateOp::Not:
      if (n != 1) throw parse_error(line, "NOT takes exactly one operand");
      break;
    case GateOp::And:
    case GateOp::Or:
    case GateOp::Xor:
      if (n < 2) throw parse_error(line, std::string(to_string(op)) + " takes at least two operands");
      break;
    case GateOp::Const0:
    case GateOp::Const1:
      if (n != 0) throw parse_error(line, std::string(to_string(op)) + " takes no operands");
      break;
  }
}

}  // namespace

const char* to_string(GateOp op) {
  switch (op) {
    case GateOp::Not: return "NOT";
    case GateOp::And: return "AND";
    case GateOp::Or: return "OR";
    case GateOp::Xor: return "XOR";
    case GateOp::Const0: return "CONST0";
    case GateOp::Const1: return "CONST1";
  }
  return "?";
}

Circuit::Circuit(std::vector<std::string> input_names) : inputs_(std::move(input_names)) {
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (!valid_name(inputs_[i])) throw std::invalid_argument("invalid input name: " + inputs_[i]);
    if (!by_name_.emplace(inputs_[i], static_cast<Signal>(i)).second)
      throw std::invalid_argument("duplicate input name: " + inputs_[i]);
  }
}

const std::string& Circuit::signal_name(Signal s) const {
  if (s < inputs_.size()) return inputs_[s];
  return gates_.at(s - inputs_.size()).name;
}

Circuit::Signal Circuit::find_signal(std::string_view name) const {
  const auto it = by_name_.find(std::string(name));
  return it == by_name_.end() ? npos_signal : it->second;
}

std::string Circuit::fresh_name(std::string base) const {
  while (by_name_.count(base) != 0) base += '_';
  return base;
}

Circuit::Signal Circuit::add_gate(std::string name, GateOp op, std::vector<Signal> operands) {
  if (!valid_name(name)) throw std::invalid_argument("invalid gate name: " + name);
  const Signal id = static_cast<Signal>(inputs_.size() + gates_.size());
  for (Signal s : operands)
    if (s >= id) throw std::invalid_argument("gate operand must refer to an earlier signal");
  const std::size_t arity = operands.size();
  const bool arity_ok = (op == GateOp::Not && arity == 1) ||
                        ((op == GateOp::And || op == GateOp::Or || op == GateOp::Xor) && arity >= 2) ||
                        ((op == GateOp::Const0 || op == GateOp::Const1) && arity == 0);
  if (!arity_ok) throw std::invalid_argument("bad operand count for " + std::string(to_string(op)));
  if (!by_name_.emplace(name, id).second) throw std::invalid_argument("duplicate name: " + name);
  gates_.push_back(Gate{std::move(name), op, std::move(operands)});
  return id;
}

void Circuit::mark_output(Signal s) {
  if (s >= inputs_.size() + gates_.size()) throw std::invalid_argument("unknown output signal");
  outputs_.push_back(s);
}

Circuit Circuit::parse(std::string_view text) {
  std::vector<Circuit> holder;  // delayed construction once the header is seen
  std::vector<std::string> output_names;
  std::size_t outputs_line = 0;
  std::size_t lineno = 0;

  std::string_view rest = text;
  while (!rest.empty() || lineno == 0) {
    const std::size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) {
      if (rest.empty()) break;
      continue;
    }

    if (holder.empty()) {
      if (toks[0] != "inputs") throw parse_error(lineno, "expected 'inputs' header");
      std::vector<std::string> names(toks.begin() + 1, toks.end());
      for (const std::string& n : names)
        if (!valid_name(n)) throw parse_error(lineno, "invalid input name: " + n);
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
          if (names[i] == names[j]) throw parse_error(lineno, "duplicate input name: " + names[i]);
      holder.emplace_back(std::move(names));
      continue;
    }
    Circuit& c = holder.front();

    if (toks[0] == "inputs") throw parse_error(lineno, "duplicate inputs line");
    if (toks[0] == "outputs") {
      if (outputs_line != 0) throw parse_error(lineno, "duplicate outputs line");
      if (toks.size() < 2) throw parse_error(lineno, "outputs line names no signals");
      output_names.assign(toks.begin() + 1, toks.end());
      outputs_line = lineno;
      continue;
    }

    if (toks.size() < 3 || toks[1] != "=") throw parse_error(lineno, "malformed line");
    const std::string& name = toks[0];
    if (!valid_name(name)) throw parse_error(lineno, "invalid gate name: " + name);
    if (c.find_signal(name) != npos_signal) throw parse_error(lineno, "duplicate name: " + name);
    GateOp op;
    if (!op_from_token(toks[2], op)) throw parse_error(lineno, "unknown operation: " + toks[2]);
    check_arity(op, toks.size() - 3, lineno);
    std::vector<Signal> operands;
    for (std::size_t i = 3; i < toks.size(); ++i) {
      const Signal s = c.find_signal(toks[i]);
      if (s == npos_signal) throw parse_error(lineno, "unknown reference: " + toks[i]);
      operands.push_back(s);
    }
    c.add_gate(name, op, std::move(operands));
  }

  if (holder.empty()) throw parse_error(0, "missing inputs header");
  if (outputs_line == 0) throw parse_error(0, "missing outputs line");
  Circuit& c = holder.front();
  for (const std::string& n : output_names) {
    const Signal s = c.find_signal(n);
    if (s == npos_signal) throw parse_error(outputs_line, "unknown reference: " + n);
    c.mark_output(s);
  }
  return std::move(c);
}

std::string Circuit::emit() const {
  std::ostringstream out;
  out << "inputs";
  for (const std::string& n : inputs_) out << ' ' << n;
  out << '\n';
  for (const Gate& g : gates_) {
    out << g.name << " = " << to_string(g.op);
    for (Signal s : g.operands) out << ' ' << signal_name(s);
    out << '\n';
  }
  out << "outputs";
  for (Signal s : outputs_) out << ' ' << signal_name(s);
  out << '\n';
  return out.str();
}

BitVec Circuit::eval(const BitVec& x, std::size_t* gate_evals) const {
  if (x.size() != inputs_.size()) throw std::invalid_argument("input length mismatch");
  std::vector<std::uint8_t> val(inputs_.size() + gates_.size(), 0);
  for (std::size_t i = 0; i < inputs_.size(); ++i) val[i] = x.get(i);
  std::size_t idx = inputs_.size();
  for (const Gate& g : gates_) {
    std::uint8_t v = 0;
    switch (g.op) {
      case GateOp::Not:
        v = !val[g.operands[0]];
        break;
      case GateOp::And:
        v = 1;
        for (Signal s : g.operands) v = static_cast<std::uint8_t>(v & val[s]);
        break;
      case GateOp::Or:
        v = 0;
        for (Signal s : g.operands) v = static_cast<std::uint8_t>(v | val[s]);
        break;
      case GateOp::Xor:
        v = 0;
        for (Signal s : g.operands) v = static_cast<std::uint8_t>(v ^ val[s]);
        break;
      case GateOp::Const0:
        v = 0;
        break;
      case GateOp::Const1:
        v = 1;
        break;
    }
    val[idx++] = v;
    if (gate_evals != nullptr) ++*gate_evals;
  }
  BitVec out(outputs_.size());
  for (std::size_t k = 0; k < outputs_.size(); ++k) out.set(k, val[outputs_[k]] != 0);
  return out;
}

}  // namespace xorsym
