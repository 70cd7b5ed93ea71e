#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xorsym/bitvec.hpp"
#include "xorsym/errors.hpp"

namespace xorsym {

// Linear subspace of B^d held as a reduced-row-echelon basis: each row's
// leading 1 is strictly right of the previous row's, and every pivot column
// contains a single 1. Two subspaces span the same set iff they compare equal.
class Subspace {
public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(const std::vector<BitVec>& vectors, std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }

  // Remainder of v after elimination against the pivot rows.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  void insert(BitVec v);

  std::size_t ambient_;
  std::vector<BitVec> rows_;
};

Subspace sum(const Subspace& a, const Subspace& b);

// Zassenhaus block elimination over 2d columns; sum and intersection bases
// fall out of the same sweep, we return the intersection.
Subspace intersect(const Subspace& a, const Subspace& b);

// Embeds into k extra leading coordinates that the represented function
// ignores: old rows are zero-padded in front and one unit vector is adjoined
// per new coordinate, so the dimension grows by exactly k.
Subspace extend_free(const Subspace& s, std::size_t k);

// Null space of the matrix whose rows are the given vectors.
Subspace kernel(const std::vector<BitVec>& rows, std::size_t ambient);

// Rewrites coordinates: coordinate i of every row moves to new_pos[i].
Subspace permute_coordinates(const Subspace& s, const std::vector<std::size_t>& new_pos);

// Coset offset + space, or the empty set. The offset is kept reduced against
// the space's pivots, so equal cosets compare equal.
class AffineSpace {
public:
  static AffineSpace empty(std::size_t ambient);
  AffineSpace(BitVec offset, Subspace space);

  bool is_empty() const { return empty_; }
  std::size_t ambient() const { return space_.ambient(); }
  const BitVec& offset() const;
  const Subspace& space() const;
  bool contains(const BitVec& v) const;

  friend bool operator==(const AffineSpace&, const AffineSpace&) = default;

private:
  AffineSpace() : space_(0) {}

  bool empty_ = false;
  BitVec offset_;
  Subspace space_;
};

// Empty unless offset difference lies in sum(a.space, b.space); otherwise the
// coset of intersect(a.space, b.space) through a common point.
AffineSpace intersect(const AffineSpace& a, const AffineSpace& b);

// Witness offsets are zero-padded while the subspace part gains free
// coordinates, matching how a skipped variable constrains nothing.
AffineSpace extend_free(const AffineSpace& a, std::size_t k);

// Basis text form: "n <ambient>", "dim <k>", then k rows as bit strings.
std::string emit_basis(const Subspace& s);
Subspace parse_basis(std::string_view text);

}  // namespace xorsym
