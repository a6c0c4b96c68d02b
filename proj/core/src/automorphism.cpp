#include <liebound/automorphism.hpp>
#include <liebound/error.hpp>
#include <liebound/linalg.hpp>
#include <liebound/poly.hpp>

#include <numeric>

namespace liebound {

namespace {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Matrix minus_identity(const Matrix& a) { return a - Matrix::identity(a.rows()); }

}  // namespace

std::size_t eig_count(const Matrix& a) {
  if (a.rows() == 0) return 0;
  return static_cast<std::size_t>(squarefree_part(char_poly(a)).degree());
}

Subspace fixed_space(const Matrix& a) { return kernel(minus_identity(a)); }

std::size_t fix_dim(const Matrix& a) { return a.cols() - rank(minus_identity(a)); }

std::optional<std::uint64_t> matrix_order(const Matrix& a) {
  const Poly p = min_poly(a);
  if (!is_squarefree(p)) return std::nullopt;
  const auto deg = static_cast<std::uint64_t>(p.degree());
  Poly rest = p;
  std::uint64_t order = 1;
  // phi(d) >= sqrt(d / 2), so a factor of degree <= deg has d <= 2 deg^2.
  for (std::uint64_t d = 1; rest.degree() > 0 && d <= 2 * deg * deg; ++d) {
    if (euler_phi(d) > static_cast<std::uint64_t>(rest.degree())) continue;
    auto [q, r] = divmod(rest, cyclotomic(d));
    if (!r.is_zero()) continue;
    rest = std::move(q);
    order = std::lcm(order, d);
  }
  if (rest.degree() != 0) return std::nullopt;
  if (power(a, order) != Matrix::identity(a.rows()))
    throw Error(ErrorCode::InternalInconsistency, "cyclotomic order does not annihilate the matrix");
  return order;
}

AutStats stats(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "automorphism statistics of a non-square matrix");
  AutStats s;
  s.eig = eig_count(a);
  s.fix = fix_dim(a);
  s.semisimple = is_squarefree(min_poly(a));
  s.order = matrix_order(a);
  return s;
}

Automorphism validate_aut(const LieAlgebra& l, const Matrix& a) {
  const std::size_t n = l.dim();
  if (a.rows() != n || a.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "automorphism matrix must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
  if (sgn(determinant(a)) == 0) throw Error(ErrorCode::NotInvertible, "automorphism matrix is singular");
  std::vector<Vector> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) images.push_back(a.column(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.apply(l.bracket_basis(i, j)) != l.bracket(images[i], images[j]))
        throw Error(ErrorCode::NotHomomorphism,
                    "A[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] != [Ae" +
                        std::to_string(i + 1) + ",Ae" + std::to_string(j + 1) + "]");
  return Automorphism(l, a);
}

Matrix restrict(const Matrix& a, const Subspace& u) {
  if (!a.is_square() || a.rows() != u.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "restriction: matrix and subspace shapes differ");
  std::vector<Vector> columns;
  columns.reserve(u.dim());
  for (std::size_t j = 0; j < u.dim(); ++j) {
    const Vector image = a.apply(u.basis_vector(j));
    if (!u.contains(image)) throw Error(ErrorCode::NotInvariant, "subspace is not mapped into itself");
    columns.push_back(u.coordinates(image));
  }
  return Matrix::from_columns(columns, u.dim());
}

Automorphism restrict(const Automorphism& a, const Subspace& u) {
  return validate_aut(subalgebra(a.algebra(), u), restrict(a.matrix(), u));
}

Matrix induced_on_section(const Matrix& a, const Subspace& upper, const Subspace& lower) {
  if (!upper.contains(lower)) throw Error(ErrorCode::PreconditionViolation, "section: lower not inside upper");
  const Matrix r = restrict(a, upper);
  std::vector<Vector> coords;
  for (const auto& b : lower.basis_vectors()) coords.push_back(upper.coordinates(b));
  const Subspace inner = Subspace::span(upper.dim(), coords);
  if (inner.image(r) != inner) throw Error(ErrorCode::NotInvariant, "section: lower is not invariant");
  const QuotientMaps maps = quotient_maps(inner);
  return maps.projection * r * maps.lift;
}

InducedQuotient induced_quotient(const Automorphism& a, const Subspace& ideal) {
  Quotient q = quotient(a.algebra(), ideal);
  if (ideal.image(a.matrix()) != ideal) throw Error(ErrorCode::NotInvariant, "ideal is not invariant");
  const Matrix induced = q.projection * a.matrix() * q.lift;
  if (q.projection * a.matrix() != induced * q.projection)
    throw Error(ErrorCode::InternalInconsistency, "induced map does not commute with the projection");
  Automorphism aut = validate_aut(q.algebra, induced);
  return {std::move(q), std::move(aut)};
}

Subspace invariant_complement(const Matrix& a, const Subspace& v, const Subspace& w, const Subspace& d) {
  const std::size_t n = v.ambient_dim();
  if (w.ambient_dim() != n || d.ambient_dim() != n || a.rows() != n)
    throw Error(ErrorCode::DimensionMismatch, "invariant_complement: ambient dimensions differ");
  if (!v.contains(w) || !v.contains(d))
    throw Error(ErrorCode::PreconditionViolation, "W and D must lie inside V");
  if (v.image(a) != v || w.image(a) != w || d.image(a) != d)
    throw Error(ErrorCode::PreconditionViolation, "V, W and D must be invariant");
  if (!subspace_intersect(w, d).is_zero())
    throw Error(ErrorCode::PreconditionViolation, "W and D intersect nontrivially");

  // Coordinates inside V, then inside V / D.
  const Matrix av = restrict(a, v);
  const std::size_t k = v.dim();
  auto to_v = [&](const Subspace& s) {
    std::vector<Vector> c;
    for (const auto& b : s.basis_vectors()) c.push_back(v.coordinates(b));
    return Subspace::span(k, c);
  };
  const Subspace wv = to_v(w);
  const Subspace dv = to_v(d);
  const QuotientMaps maps = quotient_maps(dv);
  const Matrix aq = maps.projection * av * maps.lift;
  const std::size_t q = aq.rows();
  std::vector<Vector> wq_vectors;
  for (const auto& b : wv.basis_vectors()) wq_vectors.push_back(maps.projection.apply(b));
  const Subspace wq = Subspace::span(q, wq_vectors);

  // Unknown P, entry (r, c) at index r*q + c.
  std::vector<Vector> equations;
  Vector rhs;
  auto idx = [q](std::size_t r, std::size_t c) { return r * q + c; };
  // P A - A P = 0
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < q; ++c) {
      Vector eq(q * q);
      for (std::size_t t = 0; t < q; ++t) {
        eq[idx(r, t)] += aq(t, c);
        eq[idx(t, c)] -= aq(r, t);
      }
      equations.push_back(std::move(eq));
      rhs.emplace_back(0);
    }
  // P w = w on the image of W
  for (const auto& wb : wq.basis_vectors())
    for (std::size_t r = 0; r < q; ++r) {
      Vector eq(q * q);
      for (std::size_t c = 0; c < q; ++c) eq[idx(r, c)] = wb[c];
      equations.push_back(std::move(eq));
      rhs.push_back(wb[r]);
    }
  // image of P inside the image of W: y^T P = 0 for y annihilating it
  const Subspace annihilator = kernel(wq.basis());
  for (const auto& y : annihilator.basis_vectors())
    for (std::size_t c = 0; c < q; ++c) {
      Vector eq(q * q);
      for (std::size_t r = 0; r < q; ++r) eq[idx(r, c)] = y[r];
      equations.push_back(std::move(eq));
      rhs.emplace_back(0);
    }

  Subspace kernel_q = Subspace::zero(q);
  if (q > 0) {
    const auto sol = solve(Matrix::from_rows(equations, q * q), rhs);
    if (!sol) throw Error(ErrorCode::NoSolution, "no invariant projection exists; the map is not semisimple");
    kernel_q = kernel(Matrix(q, q, *sol));
  }

  std::vector<Vector> generators;
  for (const auto& b : kernel_q.basis_vectors()) generators.push_back(v.from_coordinates(maps.lift.apply(b)));
  for (const auto& b : d.basis_vectors()) generators.push_back(b);
  const Subspace c = Subspace::span(n, generators);

  if (c.image(a) != c || !c.contains(d) || !subspace_intersect(c, w).is_zero() ||
      c.dim() + w.dim() != v.dim())
    throw Error(ErrorCode::InternalInconsistency, "invariant complement failed its postconditions");
  return c;
}

RefinedSeries refine_series(const LieAlgebra& l, const Matrix& a, const Subspace& top, const BoundFunction& k) {
  if (top.ambient_dim() != l.dim()) throw Error(ErrorCode::DimensionMismatch, "refine_series: ambient dimension");
  const auto dl = derived_length(l, top);
  if (!dl) throw Error(ErrorCode::NotSolvable, "refine_series needs a solvable algebra");
  const Matrix on_top = restrict(a, top);
  const AutStats top_stats = stats(on_top);
  if (!top_stats.semisimple) throw Error(ErrorCode::NotSemisimple, "refine_series needs a semisimple automorphism");

  RefinedSeries out;
  out.eig = top_stats.eig;
  out.fix = top_stats.fix;
  out.derived_length = *dl;
  out.stated_bound = out.eig == 0 ? 0 : dl_bound(out.fix, out.eig, k);

  auto& terms = out.series.terms;
  auto& steps = out.series.steps;
  terms.push_back(top);
  const Subspace all_fixed = subspace_intersect(fixed_space(a), top);
  Subspace current = top;
  bool segments_ok = true;

  auto push_segment = [&](const std::vector<Subspace>& ds, std::size_t depth, const Matrix& induced) {
    SeriesSegment seg;
    seg.kind = SubnormalSeries::Step::FixedPointFree;
    seg.first_term = terms.size() - 1;
    for (std::size_t t = 1; t <= depth; ++t) {
      terms.push_back(ds[t]);
      steps.push_back(SubnormalSeries::Step::FixedPointFree);
    }
    seg.last_term = terms.size() - 1;
    if (fix_dim(induced) != 0)
      throw Error(ErrorCode::InternalInconsistency, "segment quotient still has fixed points");
    seg.eig = eig_count(induced);
    seg.derived_length = depth;
    seg.contribution = k(seg.eig);
    segments_ok = segments_ok && seg.derived_length <= seg.contribution;
    out.segments.push_back(seg);
  };

  for (;;) {
    const Subspace fixed = subspace_intersect(all_fixed, current);
    const std::vector<Subspace> ds = derived_series(l, current);
    if (fixed.is_zero()) {
      if (!current.is_zero()) push_segment(ds, ds.size() - 1, restrict(a, current));
      break;
    }
    // Deepest derived term still holding every fixed point; above it the
    // induced map is fixed-point-free.
    std::size_t depth = 0;
    while (depth + 1 < ds.size() && ds[depth + 1].contains(fixed)) ++depth;
    if (depth > 0) push_segment(ds, depth, induced_on_section(a, current, ds[depth]));

    const Subspace& gi = ds[depth];
    const Subspace next = depth + 1 < ds.size() ? ds[depth + 1] : Subspace::zero(l.dim());
    const Subspace commutator = subspace_bracket(l, gi, gi);
    std::optional<Vector> x;
    for (const auto& b : fixed.basis_vectors())
      if (!subspace_sum(next, commutator).contains(b)) {
        x = b;
        break;
      }
    if (!x) throw Error(ErrorCode::InternalInconsistency, "no fixed point outside the next derived term");
    const Subspace line = Subspace::span(l.dim(), {*x});
    const Subspace complement = invariant_complement(a, gi, line, commutator);

    SeriesSegment seg;
    seg.kind = SubnormalSeries::Step::Line;
    seg.first_term = terms.size() - 1;
    terms.push_back(complement);
    steps.push_back(SubnormalSeries::Step::Line);
    seg.last_term = terms.size() - 1;
    seg.eig = 1;
    seg.derived_length = 1;
    seg.contribution = 1;
    out.segments.push_back(seg);
    ++out.line_steps;
    current = complement;
  }

  for (const auto& seg : out.segments) out.certified_dl_bound = checked_add(out.certified_dl_bound, seg.contribution);

  if (!is_subnormal(l, out.series, top))
    throw Error(ErrorCode::InternalInconsistency, "refined series is not subnormal");
  for (const auto& t : terms)
    if (t.image(a) != t) throw Error(ErrorCode::InternalInconsistency, "refined series term is not invariant");
  if (out.line_steps != out.fix)
    throw Error(ErrorCode::InternalInconsistency, "line steps do not match the fixed-space dimension");

  out.certificate_holds = segments_ok && out.derived_length <= out.certified_dl_bound &&
                          out.certified_dl_bound <= out.stated_bound;
  return out;
}

RefinedSeries refine_series(const Automorphism& a, const BoundFunction& k) {
  return refine_series(a.algebra(), a.matrix(), Subspace::full(a.algebra().dim()), k);
}

}  // namespace liebound
