#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "xorsym/circuit.hpp"
#include "xorsym/obdd.hpp"
#include "xorsym/space.hpp"
#include "xorsym/truth_table.hpp"

namespace xorsym {

inline constexpr std::size_t kDefaultOracleCap = 13;

// Black-box handle on a total function B^arity -> B^out_arity. The oracle
// below deliberately uses nothing but point queries.
struct Evaluable {
  std::size_t arity = 0;
  std::size_t out_arity = 0;
  std::function<BitVec(const BitVec&)> fn;
};

Evaluable make_evaluable(Circuit c);
Evaluable make_evaluable(Obdd d);
Evaluable make_evaluable(TruthTable t);

// Every shift s with f(x+s) = f(x) for all x, zero included, by exhaustive
// enumeration over a precomputed table. Ground truth for everything else in
// this project; keep it simple.
std::vector<BitVec> brute_force_members(const Evaluable& f, std::size_t cap = kDefaultOracleCap);

Subspace brute_force_space(const Evaluable& f, std::size_t cap = kDefaultOracleCap);

// Whether some nonzero shift consistent with the fixed leading coordinates
// exists; the engine behind search-by-decision.
bool brute_force_decide(const Evaluable& f, const std::vector<std::uint8_t>& prefix,
                        std::size_t cap = kDefaultOracleCap);

}  // namespace xorsym
