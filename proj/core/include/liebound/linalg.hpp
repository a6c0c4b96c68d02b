#ifndef LIEBOUND_LINALG_HPP
#define LIEBOUND_LINALG_HPP

#include <liebound/matrix.hpp>
#include <liebound/poly.hpp>
#include <liebound/subspace.hpp>

#include <optional>
#include <vector>

namespace liebound {

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form.
///
/// Rows are scaled to integers, eliminated fraction-free (Bareiss), and only
/// then normalized, so intermediate values stay integral and bounded by minors
/// of the input.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);

/// Some x with m x = rhs, or nullopt when the system is inconsistent. Free
/// variables are set to zero, so the answer is deterministic.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

Scalar determinant(const Matrix& m);
// Throws NotInvertible.
Matrix inverse(const Matrix& m);

/// Characteristic polynomial det(x I - m), monic (Faddeev-LeVerrier).
Poly char_poly(const Matrix& m);

/// Minimal polynomial from the first linear dependence among I, m, m^2, ...
Poly min_poly(const Matrix& m);

}  // namespace liebound

#endif  // LIEBOUND_LINALG_HPP
