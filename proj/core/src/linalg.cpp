#include <liebound/error.hpp>
#include <liebound/linalg.hpp>

#include <utility>

namespace liebound {

namespace {

using IntRow = std::vector<Integer>;

// Clears denominators row by row. All-zero rows are dropped; they never
// contribute a pivot.
std::vector<IntRow> integer_rows(const Matrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& v = m(r, c);
      if (sgn(v) == 0) continue;
      nonzero = true;
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    }
    if (!nonzero) continue;
    IntRow row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& v = m(r, c);
      if (sgn(v) == 0) continue;
      Integer q;
      mpz_divexact(q.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
      row[c] = q * v.get_num();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Fraction-free forward elimination to row-echelon form. After the step with
// pivot (r, c) every entry below row r equals a minor of the input divided by
// the previous pivot, so the division is exact.
std::vector<std::size_t> bareiss_echelon(std::vector<IntRow>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t rank = 0;
  Integer t;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[rank], a[p]);
    const IntRow& piv = a[rank];
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      IntRow& row = a[i];
      const Integer factor = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (sgn(factor) == 0) {
          if (sgn(row[j]) == 0) continue;
          t = piv[c] * row[j];
        } else {
          t = piv[c] * row[j] - factor * piv[j];
        }
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv[c];
    pivots.push_back(c);
    ++rank;
  }
  a.resize(rank);
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  const std::size_t cols = m.cols();
  std::vector<IntRow> a = integer_rows(m);
  std::vector<std::size_t> pivots = bareiss_echelon(a, cols);
  const std::size_t rank = pivots.size();

  Matrix reduced(m.rows(), cols);
  for (std::size_t k = 0; k < rank; ++k) {
    const Integer& lead = a[k][pivots[k]];
    for (std::size_t c = pivots[k]; c < cols; ++c)
      if (sgn(a[k][c]) != 0) {
        reduced(k, c) = Scalar(a[k][c], lead);
        reduced(k, c).canonicalize();
      }
  }
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t pc = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar f = reduced(i, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t c = pc; c < cols; ++c)
        if (sgn(reduced(k, c)) != 0) reduced(i, c) -= f * reduced(k, c);
    }
  }
  return {std::move(reduced), rank, std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  std::vector<IntRow> a = integer_rows(m);
  return bareiss_echelon(a, m.cols()).size();
}

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const RrefResult red = rref(aug);
  if (red.rank > 0 && red.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < red.rank; ++k) x[red.pivots[k]] = red.reduced(k, m.cols());
  return x;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
    throw Error(ErrorCode::NotInvertible, "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  Matrix mk(n, n);
  Matrix amk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = amk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    amk = m * mk;
    c[n - k] = -amk.trace() / Scalar(static_cast<unsigned long>(k));
  }
  return Poly(std::move(c));
}

Poly min_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector> powers;  // vec(m^k), row-major
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const Vector& vec = current.entries();
    if (k > 0) {
      const Matrix system = Matrix::from_columns(powers, n * n);
      if (auto coeffs = solve(system, vec)) {
        std::vector<Scalar> c(k + 1);
        for (std::size_t i = 0; i < k; ++i) c[i] = -(*coeffs)[i];
        c[k] = 1;
        return Poly(std::move(c));
      }
    } else if (n == 0) {
      return Poly::constant(1);
    }
    powers.push_back(vec);
    current = current * m;
  }
  throw Error(ErrorCode::InternalInconsistency, "no dependence among the first n+1 powers");
}

}  // namespace liebound
