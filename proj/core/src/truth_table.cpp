#include "xorsym/truth_table.hpp"

#include <charconv>
#include <stdexcept>

#include "xorsym/errors.hpp"

namespace xorsym {

namespace {

constexpr std::size_t kParseArityLimit = 24;  // 2^24 rows is already a 16M-line file

std::size_t parse_size(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw parse_error(line, "expected a number");
  return value;
}

}  // namespace

TruthTable::TruthTable(std::size_t n, std::size_t m)
    : n_(n), m_(m), words_per_row_((m + 63) / 64 > 0 ? (m + 63) / 64 : 1) {
  if (n > kParseArityLimit) throw resource_error("table arity " + std::to_string(n) + " too large");
  data_.assign((std::uint64_t{1} << n) * words_per_row_, 0);
}

BitVec TruthTable::row(std::uint64_t index) const {
  BitVec v(m_);
  const std::uint64_t* w = &data_[index * words_per_row_];
  for (std::size_t j = 0; j < m_; ++j)
    if ((w[j / 64] >> (j % 64)) & 1) v.set(j, true);
  return v;
}

void TruthTable::set_row(std::uint64_t index, const BitVec& value) {
  if (value.size() != m_) throw std::invalid_argument("row width mismatch");
  std::uint64_t* w = &data_[index * words_per_row_];
  for (std::size_t k = 0; k < words_per_row_; ++k) w[k] = 0;
  for (std::size_t j = 0; j < m_; ++j)
    if (value.get(j)) w[j / 64] |= std::uint64_t{1} << (j % 64);
}

bool TruthTable::rows_equal(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t* wa = &data_[a * words_per_row_];
  const std::uint64_t* wb = &data_[b * words_per_row_];
  for (std::size_t k = 0; k < words_per_row_; ++k)
    if (wa[k] != wb[k]) return false;
  return true;
}

TruthTable TruthTable::parse(std::string_view text) {
  std::size_t lineno = 0;
  std::size_t header_n = 0, header_m = 0;
  bool have_header = false;
  std::uint64_t next_row = 0;
  std::vector<TruthTable> holder;

  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++lineno;
    if (line.empty()) continue;

    if (!have_header) {
      const std::size_t sp = line.find(' ');
      if (sp == std::string_view::npos) throw parse_error(lineno, "expected '<n> <m>' header");
      header_n = parse_size(line.substr(0, sp), lineno);
      header_m = parse_size(line.substr(sp + 1), lineno);
      if (header_n > kParseArityLimit)
        throw resource_error("table arity " + std::to_string(header_n) + " too large");
      if (header_m == 0) throw parse_error(lineno, "output arity must be positive");
      holder.emplace_back(header_n, header_m);
      have_header = true;
      continue;
    }

    if (next_row >= holder.front().num_rows()) throw parse_error(lineno, "more rows than 2^n");
    if (line.size() != header_m) throw parse_error(lineno, "row width does not match m");
    BitVec v = BitVec(header_m);
    for (std::size_t j = 0; j < header_m; ++j) {
      if (line[j] == '1')
        v.set(j, true);
      else if (line[j] != '0')
        throw parse_error(lineno, "rows may only contain 0 and 1");
    }
    holder.front().set_row(next_row++, v);
  }

  if (!have_header) throw parse_error(0, "missing table header");
  if (next_row != holder.front().num_rows()) throw parse_error(0, "fewer rows than 2^n");
  return std::move(holder.front());
}

std::string TruthTable::emit() const {
  std::string out = std::to_string(n_) + " " + std::to_string(m_) + "\n";
  out.reserve(out.size() + num_rows() * (m_ + 1));
  for (std::uint64_t i = 0; i < num_rows(); ++i) {
    out += row(i).to_string();
    out += '\n';
  }
  return out;
}

TruthTable circuit_to_table(const Circuit& c, std::size_t cap) {
  if (c.num_inputs() > cap)
    throw resource_error("circuit arity " + std::to_string(c.num_inputs()) +
                         " exceeds table cap " + std::to_string(cap));
  TruthTable t(c.num_inputs(), c.num_outputs());
  for (std::uint64_t i = 0; i < t.num_rows(); ++i)
    t.set_row(i, c.eval(BitVec::from_index(i, c.num_inputs())));
  return t;
}

Circuit circuit_from_table(const TruthTable& t) {
  const std::size_t n = t.arity();
  const std::size_t m = t.out_arity();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  Circuit c(names);

  if (n == 0) {
    const BitVec value = t.row(0);
    for (std::size_t j = 0; j < m; ++j) {
      const auto op = value.get(j) ? GateOp::Const1 : GateOp::Const0;
      c.mark_output(c.add_gate("y" + std::to_string(j + 1), op, {}));
    }
    return c;
  }

  std::vector<Circuit::Signal> negated(n, Circuit::npos_signal);
  auto literal = [&](std::size_t var, bool positive) {
    if (positive) return c.input(var);
    if (negated[var] == Circuit::npos_signal)
      negated[var] = c.add_gate("nx" + std::to_string(var + 1), GateOp::Not, {c.input(var)});
    return negated[var];
  };

  std::vector<Circuit::Signal> minterm(t.num_rows(), Circuit::npos_signal);
  auto minterm_of = [&](std::uint64_t idx) {
    if (minterm[idx] != Circuit::npos_signal) return minterm[idx];
    std::vector<Circuit::Signal> lits;
    for (std::size_t var = 0; var < n; ++var)
      lits.push_back(literal(var, ((idx >> (n - 1 - var)) & 1) != 0));
    minterm[idx] = n == 1 ? lits[0] : c.add_gate("m" + std::to_string(idx), GateOp::And, lits);
    return minterm[idx];
  };

  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Circuit::Signal> terms;
    for (std::uint64_t idx = 0; idx < t.num_rows(); ++idx)
      if (t.row(idx).get(j)) terms.push_back(minterm_of(idx));
    const std::string out_name = "y" + std::to_string(j + 1);
    Circuit::Signal s;
    if (terms.empty())
      s = c.add_gate(out_name, GateOp::Const0, {});
    else if (terms.size() == 1)
      s = c.add_gate(out_name, GateOp::Or, {terms[0], terms[0]});
    else
      s = c.add_gate(out_name, GateOp::Or, terms);
    c.mark_output(s);
  }
  return c;
}

}  // namespace xorsym
