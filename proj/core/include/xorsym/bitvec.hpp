#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace xorsym {

// Fixed-length vector over GF(2). Coordinate 0 is the first variable of the
// active range; to_string() prints coordinates left to right. Addition is
// coordinate-wise XOR, so every vector is its own inverse.
class BitVec {
public:
  BitVec() = default;
  explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  // "101" -> vector of length 3. Characters other than 0/1 are rejected.
  static BitVec parse(std::string_view bits);

  // Unpacks an integer row index; coordinate 0 is the most significant bit.
  static BitVec from_index(std::uint64_t index, std::size_t len);
  std::uint64_t to_index() const;

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }

  bool is_zero() const;
  // Index of the leftmost 1, or -1 for the zero vector.
  int first_set() const;
  std::size_t count() const;

  BitVec& operator+=(const BitVec& o);
  friend BitVec operator+(BitVec a, const BitVec& b) {
    a += b;
    return a;
  }

  std::string to_string() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;

private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

BitVec concat(const BitVec& a, const BitVec& b);
BitVec slice(const BitVec& v, std::size_t from, std::size_t count);

// k zero coordinates prepended.
BitVec extend_zero(const BitVec& v, std::size_t k);

}  // namespace xorsym
