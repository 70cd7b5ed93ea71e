#include "xorsym/symmetry.hpp"

#include <stdexcept>

namespace xorsym {

namespace {

using NodeId = Obdd::NodeId;

std::pair<NodeId, NodeId> unordered_key(NodeId a, NodeId b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

using SpaceMap = std::unordered_map<NodeId, Subspace>;
using PairMap = std::map<std::pair<NodeId, NodeId>, AffineSpace>;

// Shared by the sweep and by SymmetryAnalysis::child_coset. Requires the
// tables for every level below parent_level to be filled.
AffineSpace child_coset_impl(const Obdd& d, const SpaceMap& spaces, const PairMap& pairs,
                             NodeId a, NodeId b, std::uint32_t parent_level) {
  const std::size_t target = d.num_vars() - parent_level;
  if (a == b) {
    // A child paired with itself: the zero-offset coset over its own space.
    const Subspace& s = spaces.at(a);
    return extend_free(AffineSpace(BitVec(s.ambient()), s), target - s.ambient());
  }
  if (d.level(a) != d.level(b) || d.is_terminal(a))
    return AffineSpace::empty(target);  // distinct variables, or the two constants
  const auto it = pairs.find(unordered_key(a, b));
  if (it == pairs.end()) throw std::logic_error("pair table incomplete");
  if (it->second.is_empty()) return AffineSpace::empty(target);
  return extend_free(it->second, target - it->second.ambient());
}

Subspace node_space_of(const Obdd& d, const SpaceMap& spaces, const PairMap& pairs,
                       NodeId t, std::uint32_t lvl) {
  const std::size_t below = d.num_vars() - lvl;
  const auto pad = [&](NodeId c) {
    const Subspace& s = spaces.at(c);
    return extend_free(s, below - s.ambient());
  };
  const Subspace base = intersect(pad(d.hi(t)), pad(d.lo(t)));
  std::vector<BitVec> rows;
  rows.reserve(base.dim() + 1);
  for (const BitVec& r : base.rows()) rows.push_back(extend_zero(r, 1));
  // A shift that swaps the two children while fixing each branch function
  // fixes the node; it contributes one extra generator with the node's own
  // coordinate set.
  const AffineSpace swap = child_coset_impl(d, spaces, pairs, d.hi(t), d.lo(t), lvl);
  if (!swap.is_empty()) {
    BitVec v = extend_zero(swap.offset(), 1);
    v.set(0, true);
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, below + 1);
}

AffineSpace pair_witness_of(const Obdd& d, const SpaceMap& spaces, const PairMap& pairs,
                            NodeId t, NodeId u, std::uint32_t lvl) {
  const std::size_t ambient = d.num_vars() - lvl + 1;
  const auto cc = [&](NodeId a, NodeId b) { return child_coset_impl(d, spaces, pairs, a, b, lvl); };
  const auto finish = [&](const AffineSpace& found, bool new_coordinate) {
    const Subspace& vt = spaces.at(t);
    if (spaces.at(u) != vt) throw std::logic_error("witness exists but node spaces differ");
    BitVec off = extend_zero(found.offset(), 1);
    off.set(0, new_coordinate);
    return AffineSpace(std::move(off), vt);
  };
  // New coordinate 0 first: both like branches must map onto each other.
  const AffineSpace straight = intersect(cc(d.hi(t), d.hi(u)), cc(d.lo(t), d.lo(u)));
  if (!straight.is_empty()) return finish(straight, false);
  // Otherwise 1: the shift flips this variable, so the branches cross.
  const AffineSpace crossed = intersect(cc(d.hi(t), d.lo(u)), cc(d.lo(t), d.hi(u)));
  if (!crossed.is_empty()) return finish(crossed, true);
  return AffineSpace::empty(ambient);
}

}  // namespace

AffineSpace SymmetryAnalysis::child_coset(NodeId a, NodeId b, std::uint32_t parent_level) const {
  return child_coset_impl(reduced, node_space, pair_witness, a, b, parent_level);
}

const AffineSpace& SymmetryAnalysis::witness(NodeId a, NodeId b) const {
  return pair_witness.at(unordered_key(a, b));
}

SymmetryAnalysis analyze_symmetries(const Obdd& d, bool normalize) {
  const std::size_t n = d.num_vars();
  SymmetryAnalysis an{normalize ? d.reduced() : d, {}, {}, Subspace(n)};
  const Obdd& r = an.reduced;

  an.node_space.emplace(Obdd::kTerm0, Subspace(0));
  an.node_space.emplace(Obdd::kTerm1, Subspace(0));

  const auto by_level = r.nodes_by_level();
  for (std::size_t lvl = n; lvl >= 1; --lvl) {
    const auto& ids = by_level[lvl];
    for (NodeId t : ids)
      an.node_space.emplace(t, node_space_of(r, an.node_space, an.pair_witness, t,
                                             static_cast<std::uint32_t>(lvl)));
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        an.pair_witness.emplace(unordered_key(ids[i], ids[j]),
                                pair_witness_of(r, an.node_space, an.pair_witness, ids[i], ids[j],
                                                static_cast<std::uint32_t>(lvl)));
  }

  // A shift fixes the whole function iff it fixes every output; outputs above
  // level 1 (and terminal outputs) leave the skipped top variables free.
  Subspace acc = Subspace::full(n);
  for (NodeId out : r.outputs()) {
    const Subspace& s = an.node_space.at(out);
    acc = intersect(acc, extend_free(s, n - s.ambient()));
  }
  an.basis = std::move(acc);
  return an;
}

Subspace symmetry_basis(const Obdd& d) { return analyze_symmetries(d).basis; }

bool has_nonzero_symmetry(const Obdd& d) { return symmetry_basis(d).dim() > 0; }

Subspace circuit_symmetry_basis(const Circuit& c, const std::vector<std::string>& order,
                                std::size_t node_cap) {
  const Subspace in_order_coords = symmetry_basis(compile(c, order, node_cap));
  std::vector<std::size_t> declaration_pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Circuit::Signal s = c.find_signal(order[k]);
    declaration_pos[k] = static_cast<std::size_t>(s);
  }
  return permute_coordinates(in_order_coords, declaration_pos);
}

Subspace circuit_symmetry_basis(const Circuit& c, std::size_t node_cap) {
  return circuit_symmetry_basis(c, c.input_names(), node_cap);
}

}  // namespace xorsym
