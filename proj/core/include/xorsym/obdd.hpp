#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xorsym/bitvec.hpp"
#include "xorsym/errors.hpp"
#include "xorsym/circuit.hpp"

namespace xorsym {

inline constexpr std::size_t kDefaultNodeCap = std::size_t{1} << 22;

// Ordered BDD over a fixed variable order. Node id 0 and 1 are the 0/1
// terminals; levels are 1-based and terminals sit at level n+1. A node at
// level i with children (hi, lo) reads "if variable i then hi else lo", and
// both children live at strictly greater levels.
//
// File format (UTF-8, line oriented):
//   order p q r
//   node <id> <var> <hi> <lo>     child references are node ids or @0 / @1
//   outputs <id>...
class Obdd {
public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kTerm0 = 0;
  static constexpr NodeId kTerm1 = 1;

  struct Node {
    std::uint32_t level;
    NodeId hi;
    NodeId lo;
  };

  class Builder {
  public:
    explicit Builder(std::vector<std::string> order);
    NodeId add_node(std::uint32_t level, NodeId hi, NodeId lo);
    void add_output(NodeId id);
    Obdd build() &&;

  private:
    std::vector<std::string> order_;
    std::vector<Node> nodes_;
    std::vector<NodeId> outputs_;
  };

  static Obdd parse(std::string_view text);

  std::size_t num_vars() const { return order_.size(); }
  const std::vector<std::string>& order() const { return order_; }
  std::size_t num_internal_nodes() const { return nodes_.size() - 2; }
  std::size_t num_nodes() const { return nodes_.size(); }

  bool is_terminal(NodeId id) const { return id <= kTerm1; }
  std::uint32_t level(NodeId id) const { return nodes_[id].level; }
  NodeId hi(NodeId id) const { return nodes_[id].hi; }
  NodeId lo(NodeId id) const { return nodes_[id].lo; }
  const std::vector<NodeId>& outputs() const { return outputs_; }

  // Internal node ids grouped by level; index 0 is unused.
  std::vector<std::vector<NodeId>> nodes_by_level() const;

  bool eval_output(std::size_t k, const BitVec& x) const;
  BitVec eval(const BitVec& x) const;

  // Removes nodes with equal children and merges structurally equal nodes,
  // bottom up; the function is unchanged.
  Obdd reduced() const;

private:
  Obdd() = default;

  std::vector<std::string> order_;
  std::vector<Node> nodes_;
  std::vector<NodeId> outputs_;
};

// Builds a reduced OBDD computing the same function as the circuit under the
// given variable order (a permutation of the circuit inputs), via memoized
// binary apply over the gate DAG. Throws resource_error past node_cap nodes.
Obdd compile(const Circuit& c, const std::vector<std::string>& order,
             std::size_t node_cap = kDefaultNodeCap);

}  // namespace xorsym
