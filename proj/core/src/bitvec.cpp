#include "xorsym/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace xorsym {

BitVec BitVec::parse(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may only contain 0 and 1");
  }
  return v;
}

BitVec BitVec::from_index(std::uint64_t index, std::size_t len) {
  if (len > 63) throw std::invalid_argument("index form only supports up to 63 coordinates");
  BitVec v(len);
  for (std::size_t j = 0; j < len; ++j)
    if ((index >> (len - 1 - j)) & 1) v.set(j, true);
  return v;
}

std::uint64_t BitVec::to_index() const {
  if (len_ > 63) throw std::invalid_argument("index form only supports up to 63 coordinates");
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < len_; ++j)
    if (get(j)) idx |= std::uint64_t{1} << (len_ - 1 - j);
  return idx;
}

bool BitVec::is_zero() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

int BitVec::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

BitVec& BitVec::operator+=(const BitVec& o) {
  if (len_ != o.len_) throw std::invalid_argument("vector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

std::string BitVec::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVec concat(const BitVec& a, const BitVec& b) {
  BitVec r(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, a.get(i));
  for (std::size_t i = 0; i < b.size(); ++i) r.set(a.size() + i, b.get(i));
  return r;
}

BitVec slice(const BitVec& v, std::size_t from, std::size_t count) {
  if (from + count > v.size()) throw std::invalid_argument("slice out of range");
  BitVec r(count);
  for (std::size_t i = 0; i < count; ++i) r.set(i, v.get(from + i));
  return r;
}

BitVec extend_zero(const BitVec& v, std::size_t k) {
  BitVec r(v.size() + k);
  for (std::size_t i = 0; i < v.size(); ++i) r.set(k + i, v.get(i));
  return r;
}

}  // namespace xorsym
