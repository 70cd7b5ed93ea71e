#include "xorsym/oracle.hpp"

#include <memory>
#include <stdexcept>

#include "xorsym/errors.hpp"

namespace xorsym {

Evaluable make_evaluable(Circuit c) {
  const std::size_t n = c.num_inputs();
  const std::size_t m = c.num_outputs();
  auto held = std::make_shared<Circuit>(std::move(c));
  return Evaluable{n, m, [held](const BitVec& x) { return held->eval(x); }};
}

Evaluable make_evaluable(Obdd d) {
  const std::size_t n = d.num_vars();
  const std::size_t m = d.outputs().size();
  auto held = std::make_shared<Obdd>(std::move(d));
  return Evaluable{n, m, [held](const BitVec& x) { return held->eval(x); }};
}

Evaluable make_evaluable(TruthTable t) {
  const std::size_t n = t.arity();
  const std::size_t m = t.out_arity();
  auto held = std::make_shared<TruthTable>(std::move(t));
  return Evaluable{n, m, [held](const BitVec& x) { return held->eval(x); }};
}

namespace {

TruthTable probe_all(const Evaluable& f, std::size_t cap) {
  if (f.arity > cap)
    throw resource_error("arity " + std::to_string(f.arity) + " exceeds oracle cap " +
                         std::to_string(cap));
  TruthTable t(f.arity, f.out_arity);
  for (std::uint64_t i = 0; i < t.num_rows(); ++i)
    t.set_row(i, f.fn(BitVec::from_index(i, f.arity)));
  return t;
}

bool shift_fixes_table(const TruthTable& t, std::uint64_t s) {
  for (std::uint64_t x = 0; x < t.num_rows(); ++x)
    if (!t.rows_equal(x, x ^ s)) return false;
  return true;
}

}  // namespace

std::vector<BitVec> brute_force_members(const Evaluable& f, std::size_t cap) {
  const TruthTable t = probe_all(f, cap);
  const std::size_t n = f.arity;
  std::vector<BitVec> members;
  members.push_back(BitVec(n));
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
    if (shift_fixes_table(t, s)) members.push_back(BitVec::from_index(s, n));
  return members;
}

Subspace brute_force_space(const Evaluable& f, std::size_t cap) {
  return Subspace::span(brute_force_members(f, cap), f.arity);
}

bool brute_force_decide(const Evaluable& f, const std::vector<std::uint8_t>& prefix,
                        std::size_t cap) {
  const std::size_t n = f.arity;
  if (prefix.size() > n) throw std::invalid_argument("prefix longer than arity");
  const TruthTable t = probe_all(f, cap);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    bool consistent = true;
    for (std::size_t j = 0; j < prefix.size() && consistent; ++j)
      consistent = ((s >> (n - 1 - j)) & 1) == (prefix[j] != 0);
    if (consistent && shift_fixes_table(t, s)) return true;
  }
  return false;
}

}  // namespace xorsym
