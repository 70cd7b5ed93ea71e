#pragma once

#include <cstdint>
#include <functional>

#include "xorsym/bitvec.hpp"
#include "xorsym/circuit.hpp"
#include "xorsym/oracle.hpp"
#include "xorsym/truth_table.hpp"

namespace xorsym {

// Copy of a single-output circuit in which every use of input v is routed
// through a shared AND(v, q_v) gate for a fresh companion input q_v. Input
// order of the result: original inputs, then the companions.
Circuit masked_input_copy(const Circuit& c);

// Single-output circuit over p1..pn, q1..qn that is true at exactly one
// point: all p set, all q clear.
Circuit single_point_detector(std::size_t n);

// Satisfiability-to-symmetry transformation. For a single-output circuit C
// over n inputs, `transformed` has 2n+1 inputs ordered (selector, originals,
// companions) and computes
//   (sel OR (masked(C) XOR detector)) AND (NOT sel OR detector);
// it has a nonzero invariant shift iff C is unsatisfiable, and then flipping
// the selector alone is such a shift.
struct HardnessInstance {
  Circuit source;
  Circuit transformed;
};

HardnessInstance hardness_reduction(const Circuit& c);

// Hidden-shift instance: a function B^n -> B^n invariant under the given
// nonzero shift by construction, drawn from a seeded generator. pivot is the
// first set coordinate of the shift; the half-domain with that coordinate
// clear is filled with random rows and the other half mirrors it through the
// shift. Identical (n, shift, seed) give a bit-identical table.
struct SimonInstance {
  std::size_t n;
  BitVec shift;
  std::size_t pivot;
  std::uint64_t seed;
  TruthTable table;
};

SimonInstance simon_instance(std::size_t n, const BitVec& shift, std::uint64_t seed,
                             std::size_t cap = kDefaultOracleCap);

// As above, but redraws with derived seeds until the invariant space has
// dimension exactly 1 (at most max_retries attempts).
SimonInstance simon_instance_exact(std::size_t n, const BitVec& shift, std::uint64_t seed,
                                   std::size_t max_retries = 64,
                                   std::size_t cap = kDefaultOracleCap);

// Answers "does a nonzero shift consistent with this fixed prefix exist".
using PrefixDecision = std::function<bool(const std::vector<std::uint8_t>&)>;

// Recovers a nonzero invariant shift with at most n decision calls, fixing
// coordinates left to right and preferring 0. The caller asserts that some
// nonzero shift exists; an inconsistent decision handle is reported instead
// of returning the zero vector.
BitVec search_via_decision(const PrefixDecision& decide, std::size_t n);

}  // namespace xorsym
