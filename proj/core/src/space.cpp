#include "xorsym/space.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "xorsym/errors.hpp"

namespace xorsym {

namespace {

void require_same_ambient(const std::size_t a, const std::size_t b) {
  if (a != b) throw std::invalid_argument("ambient dimension mismatch");
}

// Zassenhaus block matrix: rows (v|v) for v in a, (w|0) for w in b, reduced
// to RREF over the 2d columns. Any row (c, x) of the result satisfies x in a
// and c = x + y for some y in b; rows with zero left half read off a basis of
// the intersection on the right.
Subspace zassenhaus_rows(const Subspace& a, const Subspace& b) {
  const std::size_t d = a.ambient();
  std::vector<BitVec> rows;
  rows.reserve(a.dim() + b.dim());
  for (const BitVec& r : a.rows()) rows.push_back(concat(r, r));
  const BitVec zero(d);
  for (const BitVec& r : b.rows()) rows.push_back(concat(r, zero));
  return Subspace::span(rows, 2 * d);
}

std::vector<BitVec> intersection_rows(const Subspace& combined, std::size_t d) {
  std::vector<BitVec> inter;
  for (const BitVec& r : combined.rows())
    if (static_cast<std::size_t>(r.first_set()) >= d) inter.push_back(slice(r, d, d));
  return inter;
}

}  // namespace

Subspace Subspace::span(const std::vector<BitVec>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  for (const BitVec& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("vector length mismatch");
    s.insert(v);
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    BitVec unit(ambient);
    unit.set(i, true);
    s.rows_.push_back(std::move(unit));
  }
  return s;
}

BitVec Subspace::reduce(BitVec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
  for (const BitVec& r : rows_) {
    const std::size_t p = static_cast<std::size_t>(r.first_set());
    if (v.get(p)) v += r;
  }
  return v;
}

void Subspace::insert(BitVec v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return;
  const std::size_t p = static_cast<std::size_t>(v.first_set());
  for (BitVec& r : rows_)
    if (r.get(p)) r += v;
  auto it = std::find_if(rows_.begin(), rows_.end(),
                         [p](const BitVec& r) { return static_cast<std::size_t>(r.first_set()) > p; });
  rows_.insert(it, std::move(v));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a.ambient(), b.ambient());
  std::vector<BitVec> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return Subspace::span(rows, a.ambient());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a.ambient(), b.ambient());
  const std::size_t d = a.ambient();
  const Subspace combined = zassenhaus_rows(a, b);
  return Subspace::span(intersection_rows(combined, d), d);
}

Subspace extend_free(const Subspace& s, std::size_t k) {
  if (k == 0) return s;
  std::vector<BitVec> rows;
  rows.reserve(s.dim() + k);
  const std::size_t ambient = s.ambient() + k;
  for (std::size_t i = 0; i < k; ++i) {
    BitVec unit(ambient);
    unit.set(i, true);
    rows.push_back(std::move(unit));
  }
  for (const BitVec& r : s.rows()) rows.push_back(extend_zero(r, k));
  return Subspace::span(rows, ambient);
}

Subspace kernel(const std::vector<BitVec>& rows, std::size_t ambient) {
  const Subspace constraints = Subspace::span(rows, ambient);
  std::vector<bool> is_pivot(ambient, false);
  for (const BitVec& r : constraints.rows())
    is_pivot[static_cast<std::size_t>(r.first_set())] = true;
  std::vector<BitVec> basis;
  for (std::size_t c = 0; c < ambient; ++c) {
    if (is_pivot[c]) continue;
    BitVec v(ambient);
    v.set(c, true);
    for (const BitVec& r : constraints.rows())
      if (r.get(c)) v.set(static_cast<std::size_t>(r.first_set()), true);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, ambient);
}

Subspace permute_coordinates(const Subspace& s, const std::vector<std::size_t>& new_pos) {
  if (new_pos.size() != s.ambient()) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(s.ambient(), false);
  for (std::size_t p : new_pos) {
    if (p >= s.ambient() || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  std::vector<BitVec> rows;
  rows.reserve(s.dim());
  for (const BitVec& r : s.rows()) {
    BitVec w(s.ambient());
    for (std::size_t i = 0; i < s.ambient(); ++i)
      if (r.get(i)) w.set(new_pos[i], true);
    rows.push_back(std::move(w));
  }
  return Subspace::span(rows, s.ambient());
}

AffineSpace AffineSpace::empty(std::size_t ambient) {
  AffineSpace a;
  a.empty_ = true;
  a.offset_ = BitVec(ambient);
  a.space_ = Subspace(ambient);
  return a;
}

AffineSpace::AffineSpace(BitVec offset, Subspace space) : offset_(std::move(offset)), space_(std::move(space)) {
  if (offset_.size() != space_.ambient()) throw std::invalid_argument("offset length mismatch");
  offset_ = space_.reduce(std::move(offset_));
}

const BitVec& AffineSpace::offset() const {
  if (empty_) throw std::logic_error("empty affine space has no offset");
  return offset_;
}

const Subspace& AffineSpace::space() const {
  if (empty_) throw std::logic_error("empty affine space has no subspace");
  return space_;
}

bool AffineSpace::contains(const BitVec& v) const {
  return !empty_ && space_.contains(v + offset_);
}

AffineSpace intersect(const AffineSpace& a, const AffineSpace& b) {
  require_same_ambient(a.ambient(), b.ambient());
  const std::size_t d = a.ambient();
  if (a.is_empty() || b.is_empty()) return AffineSpace::empty(d);

  const Subspace combined = zassenhaus_rows(a.space(), b.space());

  // Reduce the offset difference against the left block while tracking the
  // right block; the accumulated right half is the a.space part of the
  // combination, which shifts a.offset onto a common point.
  BitVec t = concat(a.offset() + b.offset(), BitVec(d));
  for (const BitVec& r : combined.rows()) {
    const std::size_t p = static_cast<std::size_t>(r.first_set());
    if (p >= d) break;
    if (t.get(p)) t += r;
  }
  if (!slice(t, 0, d).is_zero()) return AffineSpace::empty(d);

  BitVec point = a.offset() + slice(t, d, d);
  return AffineSpace(std::move(point), Subspace::span(intersection_rows(combined, d), d));
}

AffineSpace extend_free(const AffineSpace& a, std::size_t k) {
  if (a.is_empty()) return AffineSpace::empty(a.ambient() + k);
  return AffineSpace(extend_zero(a.offset(), k), extend_free(a.space(), k));
}

std::string emit_basis(const Subspace& s) {
  std::string out = "n " + std::to_string(s.ambient()) + "\ndim " + std::to_string(s.dim()) + "\n";
  for (const BitVec& r : s.rows()) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

namespace {

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw parse_error(line, std::string("expected ") + what);
  return value;
}

}  // namespace

Subspace parse_basis(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 2) throw parse_error(0, "missing basis header");

  if (lines[0].substr(0, 2) != "n ") throw parse_error(1, "expected 'n <ambient>'");
  const std::size_t ambient = parse_count(lines[0].substr(2), 1, "ambient dimension");
  if (lines[1].substr(0, 4) != "dim ") throw parse_error(2, "expected 'dim <k>'");
  const std::size_t dim = parse_count(lines[1].substr(4), 2, "dimension");

  if (lines.size() != 2 + dim) throw parse_error(0, "row count does not match dim");
  std::vector<BitVec> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    BitVec row = BitVec::parse(lines[2 + i]);
    if (row.size() != ambient) throw parse_error(3 + i, "row length does not match ambient");
    rows.push_back(std::move(row));
  }
  Subspace s = Subspace::span(rows, ambient);
  if (s.rows() != rows) throw parse_error(0, "rows are not a reduced echelon basis");
  return s;
}

}  // namespace xorsym
