#include <liebound/error.hpp>
#include <liebound/linalg.hpp>
#include <liebound/subspace.hpp>

#include <algorithm>

namespace liebound {

Subspace::Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim), {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(ambient_dim, Matrix::identity(ambient_dim), std::move(pivots));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<Scalar> entries(r.reduced.entries().begin(),
                              r.reduced.entries().begin() + static_cast<std::ptrdiff_t>(r.rank * m.cols()));
  return Subspace(m.cols(), Matrix(r.rank, m.cols(), std::move(entries)), std::move(r.pivots));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(vectors, ambient_dim));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(basis_.row(k));
  return out;
}

Vector Subspace::from_coordinates(const Vector& coords) const {
  if (coords.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  Vector v(ambient_);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    for (std::size_t c = pivots_[k]; c < ambient_; ++c)
      if (sgn(basis_(k, c)) != 0) v[c] += coords[k] * basis_(k, c);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length vs ambient dimension");
  Vector coords(dim());
  for (std::size_t k = 0; k < dim(); ++k) coords[k] = v[pivots_[k]];
  return from_coordinates(coords) == v;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.basis_.row(k))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length vs ambient dimension");
  Vector coords(dim());
  for (std::size_t k = 0; k < dim(); ++k) coords[k] = v[pivots_[k]];
  if (from_coordinates(coords) != v) throw Error(ErrorCode::NotInvariant, "vector lies outside the subspace");
  return coords;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Subspace Subspace::image(const Matrix& map) const {
  if (map.cols() != ambient_) throw Error(ErrorCode::DimensionMismatch, "map domain vs ambient dimension");
  std::vector<Vector> images;
  images.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) images.push_back(map.apply(basis_.row(k)));
  return span(map.rows(), images);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  return Subspace::row_space(vstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(n);
  // a.U = b.V  <=>  [U^T | -V^T] (a, b) = 0
  Matrix system(n, u.dim() + v.dim());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < u.dim(); ++k) system(c, k) = u.basis()(k, c);
    for (std::size_t k = 0; k < v.dim(); ++k) system(c, u.dim() + k) = -v.basis()(k, c);
  }
  const Subspace sol = kernel(system);
  std::vector<Vector> vectors;
  for (std::size_t s = 0; s < sol.dim(); ++s) {
    Vector a = sol.basis().row(s);
    a.resize(u.dim());
    vectors.push_back(u.from_coordinates(a));
  }
  return Subspace::span(n, vectors);
}

bool contains(const Subspace& u, const Subspace& v) { return u.contains(v); }

bool lex_less(const Subspace& a, const Subspace& b) {
  if (a.pivots() != b.pivots())
    return std::lexicographical_compare(a.pivots().begin(), a.pivots().end(), b.pivots().begin(),
                                        b.pivots().end());
  return lex_less(a.basis(), b.basis());
}

QuotientMaps quotient_maps(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  const std::vector<std::size_t> free = s.free_columns();
  const std::size_t q = free.size();
  Matrix proj(q, n);
  Matrix lift(n, q);
  for (std::size_t a = 0; a < q; ++a) {
    proj(a, free[a]) = 1;
    lift(free[a], a) = 1;
  }
  // e_{p_k} = b_k - (b_k - e_{p_k}) and b_k vanishes in the quotient
  for (std::size_t k = 0; k < s.dim(); ++k)
    for (std::size_t a = 0; a < q; ++a) proj(a, s.pivots()[k]) = -s.basis()(k, free[a]);
  return {std::move(proj), std::move(lift)};
}

}  // namespace liebound
