#include "xorsym/families.hpp"

#include <random>
#include <stdexcept>

namespace xorsym {

namespace {

std::vector<std::string> numbered_inputs(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace

Circuit xor_chain_circuit(std::size_t n) {
  if (n < 2) throw std::invalid_argument("chain needs at least two inputs");
  Circuit c(numbered_inputs(n));
  for (std::size_t i = 0; i + 1 < n; ++i)
    c.mark_output(c.add_gate("y" + std::to_string(i + 1), GateOp::Xor,
                             {c.input(i), c.input(i + 1)}));
  return c;
}

Circuit linear_map_circuit(const std::vector<BitVec>& matrix_rows, std::size_t n) {
  Circuit c(numbered_inputs(n));
  for (std::size_t r = 0; r < matrix_rows.size(); ++r) {
    const BitVec& row = matrix_rows[r];
    if (row.size() != n) throw std::invalid_argument("matrix row length mismatch");
    std::vector<Circuit::Signal> terms;
    for (std::size_t j = 0; j < n; ++j)
      if (row.get(j)) terms.push_back(c.input(j));
    const std::string name = "y" + std::to_string(r + 1);
    Circuit::Signal s;
    if (terms.empty())
      s = c.add_gate(name, GateOp::Const0, {});
    else if (terms.size() == 1)
      s = c.add_gate(name, GateOp::Or, {terms[0], terms[0]});
    else
      s = c.add_gate(name, GateOp::Xor, terms);
    c.mark_output(s);
  }
  return c;
}

std::vector<BitVec> random_matrix(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BitVec> rows;
  rows.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    BitVec row(n);
    for (std::size_t j = 0; j < n; ++j)
      if (rng() & 1) row.set(j, true);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace xorsym
