#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xorsym/bitvec.hpp"
#include "xorsym/errors.hpp"
#include "xorsym/circuit.hpp"

namespace xorsym {

inline constexpr std::size_t kDefaultTableArityCap = 20;

// Exhaustive value table of a function B^n -> B^m. The row index encodes the
// input with variable 0 as the most significant bit.
//
// File format: header line "<n> <m>", then 2^n lines of m characters in {0,1}.
class TruthTable {
public:
  TruthTable(std::size_t n, std::size_t m);

  static TruthTable parse(std::string_view text);
  std::string emit() const;

  std::size_t arity() const { return n_; }
  std::size_t out_arity() const { return m_; }
  std::uint64_t num_rows() const { return std::uint64_t{1} << n_; }

  BitVec row(std::uint64_t index) const;
  void set_row(std::uint64_t index, const BitVec& value);
  bool rows_equal(std::uint64_t a, std::uint64_t b) const;

  BitVec eval(const BitVec& x) const { return row(x.to_index()); }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
  std::size_t n_;
  std::size_t m_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> data_;
};

TruthTable circuit_to_table(const Circuit& c, std::size_t cap = kDefaultTableArityCap);

// Minterm expansion; inputs x1..xn, outputs y1..ym. Not optimized.
Circuit circuit_from_table(const TruthTable& t);

}  // namespace xorsym
