// Slow, obviously-correct reference computations for the tests. Nothing here
// calls into the library's elimination or polynomial code.
#pragma once

#include <liebound/matrix.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;
using Coeffs = std::vector<Q>;  // ascending

inline Mat to_mat(const liebound::Matrix& m) {
  Mat out(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline liebound::Matrix from_mat(const Mat& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  liebound::Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m[r][c];
  return out;
}

inline Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(rows, std::vector<Q>(cols));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

// Textbook elimination with row swaps; rank = number of pivots found.
inline std::size_t naive_rank(Mat m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Q f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline Mat minor_of(const Mat& m, std::size_t row, std::size_t col) {
  Mat out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == row) continue;
    std::vector<Q> line;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (c != col) line.push_back(m[r][c]);
    out.push_back(line);
  }
  return out;
}

inline Q cofactor_det(const Mat& m) {
  if (m.empty()) return 1;
  Q sum = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (m[0][c] == 0) continue;
    Q term = m[0][c] * cofactor_det(minor_of(m, 0, c));
    sum += c % 2 ? -term : term;
  }
  return sum;
}

inline Coeffs padd(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline Coeffs pmul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// det(xI - A) by Laplace expansion over polynomial entries.
inline Coeffs cofactor_char_poly(const Mat& a) {
  using PMat = std::vector<std::vector<Coeffs>>;
  const std::size_t n = a.size();
  PMat m(n, std::vector<Coeffs>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = r == c ? Coeffs{-a[r][c], 1} : Coeffs{-a[r][c]};

  auto det = [](auto& self, const PMat& p) -> Coeffs {
    if (p.empty()) return {1};
    Coeffs sum;
    for (std::size_t c = 0; c < p.size(); ++c) {
      PMat sub;
      for (std::size_t r = 1; r < p.size(); ++r) {
        std::vector<Coeffs> line;
        for (std::size_t k = 0; k < p.size(); ++k)
          if (k != c) line.push_back(p[r][k]);
        sub.push_back(line);
      }
      Coeffs term = pmul(p[0][c], self(self, sub));
      if (c % 2)
        for (auto& t : term) t = -t;
      sum = padd(sum, term);
    }
    while (!sum.empty() && sum.back() == 0) sum.pop_back();
    return sum;
  };
  return det(det, m);
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat out(a.size(), std::vector<Q>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Mat minus_identity(Mat a) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= 1;
  return a;
}

// Nullity of A - I by the naive rank.
inline std::size_t fix_dim(const Mat& a) { return a.size() - naive_rank(minus_identity(a)); }

// For diagonal matrices only: number of distinct diagonal entries.
inline std::size_t distinct_diagonal(const Mat& a) {
  std::set<Q> seen;
  for (std::size_t i = 0; i < a.size(); ++i) seen.insert(a[i][i]);
  return seen.size();
}

// Dense Jacobi check straight from a coefficient cube c[i][j][k].
using Cube = std::vector<std::vector<std::vector<Q>>>;

inline std::vector<Q> cube_bracket(const Cube& c, const std::vector<Q>& x, const std::vector<Q>& y) {
  const std::size_t n = c.size();
  std::vector<Q> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * c[i][j][k];
    }
  return out;
}

inline bool cube_jacobi_holds(const Cube& c) {
  const std::size_t n = c.size();
  auto e = [&](std::size_t i) {
    std::vector<Q> v(n);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto a = cube_bracket(c, cube_bracket(c, e(i), e(j)), e(k));
        auto b = cube_bracket(c, cube_bracket(c, e(j), e(k)), e(i));
        auto d = cube_bracket(c, cube_bracket(c, e(k), e(i)), e(j));
        for (std::size_t t = 0; t < n; ++t)
          if (a[t] + b[t] + d[t] != 0) return false;
      }
  return true;
}

}  // namespace oracle
