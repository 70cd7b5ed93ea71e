#pragma once

#include <map>
#include <unordered_map>
#include <utility>

#include "xorsym/circuit.hpp"
#include "xorsym/obdd.hpp"
#include "xorsym/space.hpp"

namespace xorsym {

// Shift-invariance tables of an ordered BDD, filled bottom up, one level at a
// time. For a node T at level i, node_space[T] is the space of shifts s over
// the coordinates of variables i..n (ambient n-i+1) with T(x+s) = T(x) for
// all x. For two distinct nodes T, U at the same level, pair_witness holds
// the coset of shifts with T(x) = U(x+s) for all x: either empty, or
// offset + node_space[T] (the node spaces of T and U agree whenever the coset
// is nonempty). One entry per unordered pair serves both directions.
struct SymmetryAnalysis {
  Obdd reduced;
  std::unordered_map<Obdd::NodeId, Subspace> node_space;
  std::map<std::pair<Obdd::NodeId, Obdd::NodeId>, AffineSpace> pair_witness;
  Subspace basis;  // shifts fixing every output, over all n coordinates

  // Coset of shifts mapping child b onto child a, lifted to the coordinates
  // strictly below a level-parent_level node (ambient n - parent_level).
  // Variables skipped between parent and child constrain nothing: witness
  // offsets gain zeros, subspaces gain free coordinates.
  AffineSpace child_coset(Obdd::NodeId a, Obdd::NodeId b, std::uint32_t parent_level) const;

  // Table lookup for a distinct same-level pair, in either order.
  const AffineSpace& witness(Obdd::NodeId a, Obdd::NodeId b) const;
};

// Runs the level sweep. The input is normalized with Obdd::reduced() first;
// normalize=false skips that (only meaningful for probing the tables on
// deliberately unreduced inputs).
SymmetryAnalysis analyze_symmetries(const Obdd& d, bool normalize = true);

// Canonical basis of {s | f(x+s) = f(x) for all x} for the function of the
// whole BDD, coordinates in variable order. Polynomial in the BDD size.
Subspace symmetry_basis(const Obdd& d);

bool has_nonzero_symmetry(const Obdd& d);

// Circuit front end: compile under the given order, analyze, and report the
// basis in the circuit's input declaration order.
Subspace circuit_symmetry_basis(const Circuit& c, const std::vector<std::string>& order,
                                std::size_t node_cap = kDefaultNodeCap);
Subspace circuit_symmetry_basis(const Circuit& c, std::size_t node_cap = kDefaultNodeCap);

}  // namespace xorsym
