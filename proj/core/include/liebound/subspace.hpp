#ifndef LIEBOUND_SUBSPACE_HPP
#define LIEBOUND_SUBSPACE_HPP

#include <liebound/matrix.hpp>
#include <liebound/scalar.hpp>

#include <cstddef>
#include <vector>

namespace liebound {

/// A coordinate subspace of Q^n stored by its reduced row-echelon basis.
///
/// The basis is canonical: two subspaces are equal as sets exactly when their
/// basis matrices are entrywise equal, which is what operator== compares.
/// Because every basis row has a 1 at its pivot and zeros at the other pivots,
/// the coordinates of a member vector are simply its pivot entries.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  // Row space of the given matrix.
  static Subspace row_space(const Matrix& m);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector basis_vector(std::size_t k) const { return basis_.row(k); }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v in this basis. Throws NotInvariant if v is not a member.
  Vector coordinates(const Vector& v) const;
  // Inverse of coordinates().
  Vector from_coordinates(const Vector& coords) const;

  // The complement coordinates: indices not among the pivots, ascending.
  std::vector<std::size_t> free_columns() const;

  // Image of the subspace under a linear map on the ambient space.
  Subspace image(const Matrix& map) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots);

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
// true iff v is contained in u.
bool contains(const Subspace& u, const Subspace& v);

// Pivot sequences compared first, then basis entries.
bool lex_less(const Subspace& a, const Subspace& b);

/// Coordinates on ambient / s using the non-pivot columns of s.
/// projection * lift = identity, and projection kills s.
struct QuotientMaps {
  Matrix projection;  // (n - dim s) x n
  Matrix lift;        // n x (n - dim s)
};
QuotientMaps quotient_maps(const Subspace& s);

}  // namespace liebound

#endif  // LIEBOUND_SUBSPACE_HPP
