#include <liebound/error.hpp>
#include <liebound/lie_algebra.hpp>
#include <liebound/linalg.hpp>

#include <algorithm>
#include <map>
#include <tuple>

namespace liebound {

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants, std::string name)
    : dim_(dim), name_(std::move(name)), table_(dim * dim) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> acc;
  for (const auto& c : constants) {
    if (c.i >= dim || c.j >= dim || c.k >= dim)
      throw Error(ErrorCode::InvalidParameter, "structure constant index out of range");
    if (c.i == c.j) throw Error(ErrorCode::InvalidParameter, "bracket [e_i, e_i] must be zero");
    if (c.i < c.j)
      acc[{c.i, c.j, c.k}] += c.value;
    else
      acc[{c.j, c.i, c.k}] -= c.value;
  }
  for (const auto& [key, value] : acc) {
    if (sgn(value) == 0) continue;
    const auto [i, j, k] = key;
    table_[i * dim + j].emplace_back(k, value);
    table_[j * dim + i].emplace_back(k, -value);
  }
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  Vector out(dim_);
  for (const auto& [k, v] : entry(i, j)) out[k] = v;
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "bracket operand length differs from dim");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Sparse& e = entry(i, j);
      if (e.empty()) continue;
      const Scalar f = x[i] * y[j];
      for (const auto& [k, v] : e) out[k] += f * v;
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "ad operand length differs from dim");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, v] : entry(i, j)) m(k, j) += x[i] * v;
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(dim_, i)); }

std::vector<StructureConstant> LieAlgebra::constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Sparse e = entry(i, j);
      std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [k, v] : e) out.push_back({i, j, k, v});
    }
  return out;
}

std::vector<JacobiViolation> validate(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<JacobiViolation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector sum = l.bracket(l.bracket_basis(i, j), ek);
        sum = sum + l.bracket(l.bracket_basis(j, k), ei);
        sum = sum + l.bracket(l.bracket_basis(k, i), ej);
        if (!is_zero(sum)) out.push_back({i, j, k, std::move(sum)});
      }
  return out;
}

Subspace subspace_bracket(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != l.dim() || v.ambient_dim() != l.dim())
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension differs from dim");
  std::vector<Vector> products;
  const auto ub = u.basis_vectors();
  const auto vb = v.basis_vectors();
  const bool same = u == v;
  for (std::size_t a = 0; a < ub.size(); ++a)
    for (std::size_t b = same ? a + 1 : 0; b < vb.size(); ++b) {
      Vector p = l.bracket(ub[a], vb[b]);
      if (!is_zero(p)) products.push_back(std::move(p));
    }
  return Subspace::span(l.dim(), products);
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& u) { return u.contains(subspace_bracket(l, u, u)); }

bool is_ideal(const LieAlgebra& l, const Subspace& u, const Subspace& within) {
  return u.contains(subspace_bracket(l, within, u));
}

bool is_ideal(const LieAlgebra& l, const Subspace& u) { return is_ideal(l, u, Subspace::full(l.dim())); }

std::vector<Subspace> derived_series(const LieAlgebra& l, const Subspace& u) {
  std::vector<Subspace> series{u};
  Subspace next = subspace_bracket(l, u, u);
  if (!u.contains(next)) throw Error(ErrorCode::NotSubalgebra, "derived series of a non-subalgebra");
  while (!series.back().is_zero() && next != series.back()) {
    series.push_back(next);
    next = subspace_bracket(l, next, next);
  }
  return series;
}

std::optional<std::size_t> derived_length(const LieAlgebra& l, const Subspace& u) {
  const auto s = derived_series(l, u);
  if (!s.back().is_zero()) return std::nullopt;
  return s.size() - 1;
}

std::optional<std::size_t> derived_length(const LieAlgebra& l) {
  return derived_length(l, Subspace::full(l.dim()));
}

std::vector<Subspace> lower_central_series(const LieAlgebra& l, const Subspace& u) {
  std::vector<Subspace> series{u};
  Subspace next = subspace_bracket(l, u, u);
  if (!u.contains(next)) throw Error(ErrorCode::NotSubalgebra, "lower central series of a non-subalgebra");
  while (!series.back().is_zero() && next != series.back()) {
    series.push_back(next);
    next = subspace_bracket(l, u, next);
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& l, const Subspace& u) {
  const auto s = lower_central_series(l, u);
  if (!s.back().is_zero()) return std::nullopt;
  return s.size() - 1;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& l) {
  return nilpotency_class(l, Subspace::full(l.dim()));
}

Matrix killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad_basis(i));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      // trace(A B) = sum_{r,c} A(r,c) B(c,r)
      Scalar t = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(ads[i](r, c)) != 0 && sgn(ads[j](c, r)) != 0) t += ads[i](r, c) * ads[j](c, r);
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

Subspace radical(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const Subspace full = Subspace::full(n);
  const Subspace derived = subspace_bracket(l, full, full);
  const Matrix kappa = killing_form(l);
  // x with kappa(x, y) = 0 for every basis vector y of [L, L]
  const Subspace rad = kernel(derived.basis() * kappa);

  if (!is_ideal(l, rad))
    throw Error(ErrorCode::InternalInconsistency, "Killing-orthogonal of [L,L] is not an ideal");
  if (!derived_length(l, rad))
    throw Error(ErrorCode::InternalInconsistency, "Killing-orthogonal of [L,L] is not solvable");
  const Quotient q = quotient(l, rad);
  if (sgn(determinant(killing_form(q.algebra))) == 0)
    throw Error(ErrorCode::InternalInconsistency, "quotient by the radical has a degenerate Killing form");
  return rad;
}

Quotient quotient(const LieAlgebra& l, const Subspace& ideal) {
  const std::size_t n = l.dim();
  if (ideal.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "ideal ambient dimension");
  if (!is_ideal(l, ideal)) throw Error(ErrorCode::NotIdeal, "quotient by a subspace that is not an ideal");
  const std::vector<std::size_t> free = ideal.free_columns();
  const std::size_t q = free.size();
  auto [proj, lift] = quotient_maps(ideal);

  std::vector<StructureConstant> constants;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      const Vector image = proj.apply(l.bracket_basis(free[a], free[b]));
      for (std::size_t c = 0; c < q; ++c)
        if (sgn(image[c]) != 0) constants.push_back({a, b, c, image[c]});
    }
  std::string name = l.name().empty() ? std::string{} : l.name() + "/I";
  return {LieAlgebra(q, constants, std::move(name)), std::move(proj), std::move(lift)};
}

LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& u) {
  if (u.ambient_dim() != l.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension");
  const auto basis = u.basis_vectors();
  std::vector<StructureConstant> constants;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const Vector p = l.bracket(basis[a], basis[b]);
      if (!u.contains(p)) throw Error(ErrorCode::NotSubalgebra, "subspace is not closed under the bracket");
      const Vector c = u.coordinates(p);
      for (std::size_t t = 0; t < c.size(); ++t)
        if (sgn(c[t]) != 0) constants.push_back({a, b, t, c[t]});
    }
  return LieAlgebra(basis.size(), constants, l.name().empty() ? std::string{} : "sub(" + l.name() + ")");
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<StructureConstant> constants = a.constants();
  const std::size_t shift = a.dim();
  for (auto c : b.constants()) {
    c.i += shift;
    c.j += shift;
    c.k += shift;
    constants.push_back(c);
  }
  std::string name;
  if (a.dim() == 0) name = b.name();
  else if (b.dim() == 0) name = a.name();
  else name = a.name() + "+" + b.name();
  return LieAlgebra(a.dim() + b.dim(), constants, std::move(name));
}

std::string_view to_string(SubnormalSeries::Step step) {
  switch (step) {
    case SubnormalSeries::Step::FixedPointFree: return "fixed-point-free-segment";
    case SubnormalSeries::Step::Line: return "line-step";
    case SubnormalSeries::Step::Derived: return "derived-step";
  }
  return "unknown";
}

bool is_subnormal(const LieAlgebra& l, const SubnormalSeries& s, const Subspace& top) {
  if (s.terms.empty() || s.terms.front() != top || !s.terms.back().is_zero()) return false;
  if (s.steps.size() + 1 != s.terms.size()) return false;
  for (std::size_t k = 0; k + 1 < s.terms.size(); ++k) {
    const Subspace& big = s.terms[k];
    const Subspace& small = s.terms[k + 1];
    if (!big.contains(small) || small.dim() >= big.dim()) return false;
    if (!is_ideal(l, small, big)) return false;
  }
  return true;
}

}  // namespace liebound
