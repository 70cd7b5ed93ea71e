#pragma once

#include <cstdint>
#include <vector>

#include "xorsym/bitvec.hpp"
#include "xorsym/circuit.hpp"

namespace xorsym {

// Difference chain x -> (x1+x2, x2+x3, ..., x_{n-1}+x_n). Linear, so its
// invariant shifts are the kernel of the chain matrix: span of the all-ones
// vector. n >= 2.
Circuit xor_chain_circuit(std::size_t n);

// f(x) = A x over GF(2) as XOR gates, one output per matrix row; invariant
// shifts are the null space of A.
Circuit linear_map_circuit(const std::vector<BitVec>& matrix_rows, std::size_t n);

std::vector<BitVec> random_matrix(std::size_t m, std::size_t n, std::uint64_t seed);

}  // namespace xorsym
