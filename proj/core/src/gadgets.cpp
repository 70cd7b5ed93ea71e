#include "xorsym/gadgets.hpp"

#include <random>
#include <stdexcept>

#include "xorsym/errors.hpp"

namespace xorsym {

namespace {

using Signal = Circuit::Signal;

std::vector<std::string> companion_names(const Circuit& c, const std::vector<std::string>& taken) {
  std::vector<std::string> all = taken;
  std::vector<std::string> companions;
  const auto used = [&all](const std::string& name) {
    for (const std::string& t : all)
      if (t == name) return true;
    return false;
  };
  for (const std::string& base : c.input_names()) {
    std::string cand = "q_" + base;
    while (used(cand) || c.find_signal(cand) != Circuit::npos_signal) cand += '_';
    companions.push_back(cand);
    all.push_back(cand);
  }
  return companions;
}

// Appends copies of src's gates to dst with inputs remapped; returns the
// signal carrying src's single output.
Signal append_copy(Circuit& dst, const Circuit& src, const std::vector<Signal>& input_map) {
  std::vector<Signal> map(src.num_inputs() + src.num_gates());
  for (std::size_t i = 0; i < src.num_inputs(); ++i) map[i] = input_map[i];
  std::size_t idx = src.num_inputs();
  for (const Circuit::Gate& g : src.gates()) {
    std::vector<Signal> operands;
    operands.reserve(g.operands.size());
    for (Signal s : g.operands) operands.push_back(map[s]);
    map[idx++] = dst.add_gate(dst.fresh_name(g.name), g.op, std::move(operands));
  }
  return map[src.outputs()[0]];
}

void require_single_output(const Circuit& c) {
  if (c.num_outputs() != 1) throw std::invalid_argument("circuit must have exactly one output");
}

}  // namespace

Circuit masked_input_copy(const Circuit& c) {
  require_single_output(c);
  const std::size_t n = c.num_inputs();
  std::vector<std::string> names = c.input_names();
  const std::vector<std::string> companions = companion_names(c, names);
  names.insert(names.end(), companions.begin(), companions.end());

  Circuit h(names);
  std::vector<Signal> masked(n);
  for (std::size_t i = 0; i < n; ++i)
    masked[i] = h.add_gate(h.fresh_name("m_" + c.input_names()[i]), GateOp::And,
                           {h.input(i), h.input(n + i)});
  h.mark_output(append_copy(h, c, masked));
  return h;
}

Circuit single_point_detector(std::size_t n) {
  if (n < 1) throw std::invalid_argument("detector needs at least one variable");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i + 1));
  Circuit d(names);
  std::vector<Signal> operands;
  for (std::size_t i = 0; i < n; ++i) operands.push_back(d.input(i));
  for (std::size_t i = 0; i < n; ++i)
    operands.push_back(d.add_gate("nq" + std::to_string(i + 1), GateOp::Not, {d.input(n + i)}));
  d.mark_output(d.add_gate("hit", GateOp::And, operands));
  return d;
}

HardnessInstance hardness_reduction(const Circuit& c) {
  require_single_output(c);
  const std::size_t n = c.num_inputs();
  if (n < 1) throw std::invalid_argument("source circuit needs at least one input");

  std::string selector = "p";
  {
    bool clash = c.find_signal(selector) != Circuit::npos_signal;
    while (clash) {
      selector += '_';
      clash = c.find_signal(selector) != Circuit::npos_signal;
    }
  }
  std::vector<std::string> names{selector};
  names.insert(names.end(), c.input_names().begin(), c.input_names().end());
  const std::vector<std::string> companions = companion_names(c, names);
  names.insert(names.end(), companions.begin(), companions.end());

  Circuit f(names);
  const Signal sel = f.input(0);

  std::vector<Signal> masked(n);
  for (std::size_t i = 0; i < n; ++i)
    masked[i] = f.add_gate(f.fresh_name("m_" + c.input_names()[i]), GateOp::And,
                           {f.input(1 + i), f.input(1 + n + i)});
  const Signal h_out = append_copy(f, c, masked);

  // Detector over the raw variables (not the masked copies).
  std::vector<Signal> det_operands;
  for (std::size_t i = 0; i < n; ++i) det_operands.push_back(f.input(1 + i));
  for (std::size_t i = 0; i < n; ++i)
    det_operands.push_back(
        f.add_gate(f.fresh_name("n_" + companions[i]), GateOp::Not, {f.input(1 + n + i)}));
  const Signal det = f.add_gate(f.fresh_name("hit"), GateOp::And, det_operands);

  const Signal mix = f.add_gate(f.fresh_name("mix"), GateOp::Xor, {h_out, det});
  const Signal left = f.add_gate(f.fresh_name("left"), GateOp::Or, {sel, mix});
  const Signal nsel = f.add_gate(f.fresh_name("nsel"), GateOp::Not, {sel});
  const Signal right = f.add_gate(f.fresh_name("right"), GateOp::Or, {nsel, det});
  f.mark_output(f.add_gate(f.fresh_name("out"), GateOp::And, {left, right}));

  return HardnessInstance{c, std::move(f)};
}

SimonInstance simon_instance(std::size_t n, const BitVec& shift, std::uint64_t seed,
                             std::size_t cap) {
  if (shift.size() != n) throw std::invalid_argument("shift length must equal n");
  if (shift.is_zero()) throw std::invalid_argument("shift must be nonzero");
  if (n > cap) throw resource_error("arity " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));

  const auto pivot = static_cast<std::size_t>(shift.first_set());
  const std::uint64_t pivot_mask = std::uint64_t{1} << (n - 1 - pivot);
  const std::uint64_t shift_index = shift.to_index();

  TruthTable t(n, n);
  std::mt19937_64 rng(seed);
  const std::uint64_t row_mask = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  // Fill the half-domain where the pivot coordinate is clear with random
  // rows, in ascending index order so the draw sequence is reproducible.
  for (std::uint64_t x = 0; x < t.num_rows(); ++x) {
    if ((x & pivot_mask) != 0) continue;
    const std::uint64_t bits = rng() & row_mask;
    BitVec row(n);
    for (std::size_t j = 0; j < n; ++j)
      if ((bits >> j) & 1) row.set(j, true);
    t.set_row(x, row);
  }
  // The other half mirrors through the shift; x + shift clears the pivot.
  for (std::uint64_t x = 0; x < t.num_rows(); ++x)
    if ((x & pivot_mask) != 0) t.set_row(x, t.row(x ^ shift_index));

  return SimonInstance{n, shift, pivot, seed, std::move(t)};
}

SimonInstance simon_instance_exact(std::size_t n, const BitVec& shift, std::uint64_t seed,
                                   std::size_t max_retries, std::size_t cap) {
  std::uint64_t derived = seed;
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    SimonInstance inst = simon_instance(n, shift, derived, cap);
    if (brute_force_space(make_evaluable(inst.table), cap).dim() == 1) return inst;
    derived += 0x9e3779b97f4a7c15ull;  // fixed stride keeps redraws reproducible
  }
  throw resource_error("no dimension-1 instance found within the retry limit");
}

BitVec search_via_decision(const PrefixDecision& decide, std::size_t n) {
  std::vector<std::uint8_t> prefix;
  prefix.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    prefix.push_back(0);
    if (!decide(prefix)) prefix.back() = 1;
  }
  BitVec s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, prefix[i] != 0);
  if (s.is_zero())
    throw std::runtime_error("decision handle inconsistent: no nonzero shift exists");
  return s;
}

}  // namespace xorsym
