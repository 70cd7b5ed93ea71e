#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "test_support.hpp"

using namespace xorsym;
using testsup::kExampleBddText;

namespace {

bool ordered_everywhere(const Obdd& d) {
  for (Obdd::NodeId id = 2; id < d.num_nodes(); ++id)
    if (d.level(d.hi(id)) <= d.level(id) || d.level(d.lo(id)) <= d.level(id)) return false;
  return true;
}

bool is_reduced(const Obdd& d) {
  std::set<std::tuple<std::uint32_t, Obdd::NodeId, Obdd::NodeId>> seen;
  for (Obdd::NodeId id = 2; id < d.num_nodes(); ++id) {
    if (d.hi(id) == d.lo(id)) return false;
    if (!seen.insert({d.level(id), d.hi(id), d.lo(id)}).second) return false;
  }
  return true;
}

// Random valid OBDD, generally unreduced: children are drawn from strictly
// deeper nodes or terminals, so the order invariant holds by construction.
Obdd random_obdd(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> order;
  for (std::size_t i = 0; i < n; ++i) order.push_back("v" + std::to_string(i + 1));
  Obdd::Builder b(order);
  std::vector<std::vector<Obdd::NodeId>> deeper(n + 2);
  deeper[n + 1] = {Obdd::kTerm0, Obdd::kTerm1};
  std::vector<Obdd::NodeId> all = {Obdd::kTerm0, Obdd::kTerm1};
  for (std::size_t lvl = n; lvl >= 1; --lvl) {
    std::vector<Obdd::NodeId> here;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Obdd::NodeId> candidates;
      for (std::size_t j = lvl + 1; j <= n + 1; ++j)
        candidates.insert(candidates.end(), deeper[j].begin(), deeper[j].end());
      const Obdd::NodeId hi = candidates[rng() % candidates.size()];
      const Obdd::NodeId lo = candidates[rng() % candidates.size()];
      here.push_back(b.add_node(static_cast<std::uint32_t>(lvl), hi, lo));
    }
    deeper[lvl] = here;
    all.insert(all.end(), here.begin(), here.end());
  }
  const std::size_t m = 1 + rng() % 3;
  for (std::size_t k = 0; k < m; ++k) b.add_output(all[rng() % all.size()]);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("parse accepts the worked example") {
  const Obdd d = Obdd::parse(kExampleBddText);
  CHECK(d.num_vars() == 3);
  CHECK(d.num_internal_nodes() == 5);
  CHECK(d.outputs().size() == 1);
  CHECK(d.level(d.outputs()[0]) == 1);
  CHECK(ordered_everywhere(d));
}

TEST_CASE("parse rejects malformed files") {
  CHECK_THROWS_AS(Obdd::parse("order p q\nnode 1 q @0 @1\nnode 2 p 1 3\noutputs 2\n"),
                  parse_error);  // unknown child 3
  CHECK_THROWS_AS(Obdd::parse("order p q\nnode 1 p @0 @1\nnode 2 p 1 @0\noutputs 2\n"),
                  parse_error);  // child at equal level
  CHECK_THROWS_AS(Obdd::parse("order p\nnode 1 p @0 @1\nnode 1 p @1 @0\noutputs 1\n"),
                  parse_error);  // duplicate id
  CHECK_THROWS_AS(Obdd::parse("node 1 p @0 @1\noutputs 1\n"), parse_error);  // no order
  CHECK_THROWS_AS(Obdd::parse("order p\nnode 1 p @0 @1\n"), parse_error);   // no outputs
  CHECK_THROWS_AS(Obdd::parse("order p\nnode 1 z @0 @1\noutputs 1\n"), parse_error);
  CHECK_THROWS_AS(Obdd::parse("order p\nnode 0 p @0 @1\noutputs 0\n"), parse_error);
}

TEST_CASE("terminal-only outputs give constant functions") {
  const Obdd d = Obdd::parse("order p q\noutputs @1\n");
  for (std::uint64_t i = 0; i < 4; ++i)
    CHECK(d.eval(BitVec::from_index(i, 2)) == BitVec::parse("1"));
}

TEST_CASE("evaluation walks hi on 1 and lo on 0") {
  const Obdd d = Obdd::parse(kExampleBddText);
  CHECK(d.eval(BitVec::parse("110")) == BitVec::parse("1"));
  CHECK(d.eval(BitVec::parse("011")) == BitVec::parse("1"));
  // full satisfying set is exactly {110, 011}
  for (std::uint64_t i = 0; i < 8; ++i) {
    const BitVec x = BitVec::from_index(i, 3);
    const bool expect = x.to_string() == "110" || x.to_string() == "011";
    CHECK(d.eval_output(0, x) == expect);
  }
}

TEST_CASE("reduce removes redundant nodes and merges duplicates") {
  Obdd::Builder b({"p", "q"});
  const auto q1 = b.add_node(2, Obdd::kTerm1, Obdd::kTerm0);
  const auto q2 = b.add_node(2, Obdd::kTerm1, Obdd::kTerm0);  // structural duplicate
  const auto q3 = b.add_node(2, Obdd::kTerm1, Obdd::kTerm1);  // redundant
  const auto root = b.add_node(1, q1, q2);                    // collapses once q1=q2
  b.add_output(root);
  b.add_output(q3);
  const Obdd d = std::move(b).build();

  const Obdd r = d.reduced();
  CHECK(is_reduced(r));
  CHECK(r.num_internal_nodes() == 1);            // just one q-node survives
  CHECK(r.outputs()[0] == r.outputs()[0]);
  CHECK(r.is_terminal(r.outputs()[1]));          // p(A,A) -> A, then A = @1
  for (std::uint64_t i = 0; i < 4; ++i) {
    const BitVec x = BitVec::from_index(i, 2);
    CHECK(r.eval(x) == d.eval(x));
  }
}

TEST_CASE("the worked example is already reduced") {
  const Obdd d = Obdd::parse(kExampleBddText);
  const Obdd r = d.reduced();
  CHECK(is_reduced(d));
  CHECK(r.num_internal_nodes() == d.num_internal_nodes());
}

TEST_CASE("reduce preserves semantics on random diagrams") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Obdd d = random_obdd(rng, n);
    const Obdd r = d.reduced();
    CHECK(is_reduced(r));
    CHECK(ordered_everywhere(r));
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const BitVec x = BitVec::from_index(i, n);
      CHECK(r.eval(x) == d.eval(x));
    }
  }
}

TEST_CASE("compile produces the expected small diagrams") {
  const Circuit cx = Circuit::parse("inputs a b\no = XOR a b\noutputs o\n");
  CHECK(compile(cx, {"a", "b"}).num_internal_nodes() == 3);
  const Circuit ca = Circuit::parse("inputs a b\no = AND a b\noutputs o\n");
  CHECK(compile(ca, {"a", "b"}).num_internal_nodes() == 2);
}

TEST_CASE("compile agrees with circuit evaluation") {
  const Circuit c = Circuit::parse(
      "inputs x1 x2 x3\n"
      "a = AND x1 x2\n"
      "b = AND a x3\n"
      "nb = NOT b\n"
      "d = OR x2 x3\n"
      "nd = NOT d\n"
      "f1 = OR a nb\n"
      "f2 = AND nb nd\n"
      "outputs f1 f2\n");
  const Obdd d = compile(c, {"x1", "x2", "x3"});
  const TruthTable t = circuit_to_table(c);
  for (std::uint64_t i = 0; i < 8; ++i) CHECK(d.eval(BitVec::from_index(i, 3)) == t.row(i));
}

TEST_CASE("compile agrees under random orders and gate mixes") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Circuit c = testsup::random_circuit(rng, n, 1 + rng() % 14, 1 + rng() % 3);
    const Obdd d = compile(c, testsup::random_order(rng, c));
    CHECK(ordered_everywhere(d));
    CHECK(is_reduced(d));
    // reorder x back into declaration coordinates when evaluating the BDD
    std::vector<std::size_t> level_of(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& order = d.order();
      for (std::size_t k = 0; k < n; ++k)
        if (order[k] == c.input_names()[i]) level_of[i] = k;
    }
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const BitVec x = BitVec::from_index(i, n);
      BitVec ordered_x(n);
      for (std::size_t j = 0; j < n; ++j) ordered_x.set(level_of[j], x.get(j));
      CHECK(d.eval(ordered_x) == c.eval(x));
    }
  }
}

TEST_CASE("compile validates the order and the node budget") {
  const Circuit c = Circuit::parse("inputs a b\no = AND a b\noutputs o\n");
  CHECK_THROWS_AS(compile(c, {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(compile(c, {"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(compile(c, {"a", "z"}), std::invalid_argument);

  const Circuit chain = xor_chain_circuit(12);
  CHECK_THROWS_AS(compile(chain, chain.input_names(), 3), resource_error);
}
