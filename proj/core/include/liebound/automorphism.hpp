#ifndef LIEBOUND_AUTOMORPHISM_HPP
#define LIEBOUND_AUTOMORPHISM_HPP

#include <liebound/bounds.hpp>
#include <liebound/lie_algebra.hpp>
#include <liebound/matrix.hpp>
#include <liebound/subspace.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace liebound {

/// eig: distinct complex eigenvalues; fix: dimension of the fixed space;
/// order: smallest n with A^n = I, absent when aperiodic.
struct AutStats {
  std::size_t eig = 0;
  std::size_t fix = 0;
  bool semisimple = false;
  std::optional<std::uint64_t> order;

  friend bool operator==(const AutStats&, const AutStats&) = default;
};

// Computed without materializing eigenvalues: eig from the squarefree part of
// the characteristic polynomial, semisimplicity from a squarefree minimal
// polynomial, order from its cyclotomic factors.
AutStats stats(const Matrix& a);
std::size_t eig_count(const Matrix& a);
std::size_t fix_dim(const Matrix& a);
Subspace fixed_space(const Matrix& a);
std::optional<std::uint64_t> matrix_order(const Matrix& a);

/// An invertible matrix acting on a Lie algebra by columns (image of e_j is
/// column j) that preserves the bracket. Only validate_aut() builds one.
class Automorphism {
 public:
  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  AutStats stats() const { return liebound::stats(matrix_); }

 private:
  friend Automorphism validate_aut(const LieAlgebra& l, const Matrix& a);
  Automorphism(LieAlgebra l, Matrix a) : algebra_(std::move(l)), matrix_(std::move(a)) {}

  LieAlgebra algebra_;
  Matrix matrix_;
};

/// Throws NotInvertible, or NotHomomorphism naming the first violating pair.
Automorphism validate_aut(const LieAlgebra& l, const Matrix& a);

/// Matrix R of a on the invariant subspace u, in u's canonical coordinates:
/// a * b_j = sum_i R(i, j) b_i. Throws NotInvariant.
Matrix restrict(const Matrix& a, const Subspace& u);

/// Restriction to an invariant subalgebra, as an automorphism of
/// subalgebra(l, u).
Automorphism restrict(const Automorphism& a, const Subspace& u);

/// Map induced on upper / lower (lower within upper, both invariant), in the
/// coordinates used by quotient(): the non-pivot columns of lower inside upper.
Matrix induced_on_section(const Matrix& a, const Subspace& upper, const Subspace& lower);

struct InducedQuotient {
  Quotient quotient;
  Automorphism automorphism;
};

/// The automorphism of L / I with proj * A = induced * proj.
/// Throws NotIdeal or NotInvariant.
InducedQuotient induced_quotient(const Automorphism& a, const Subspace& ideal);

/// An a-invariant complement C to w inside v that contains d.
///
/// Requires a(v) = v, a(w) = w, a(d) = d, w and d inside v, w and d meeting
/// only in 0 (PreconditionViolation otherwise). Works in v / d: a projection P
/// onto the image of w that commutes with the induced map is found by one
/// linear solve, and C is the preimage of ker P. The solve can only fail when a
/// is not semisimple, which is reported as NoSolution.
Subspace invariant_complement(const Matrix& a, const Subspace& v, const Subspace& w, const Subspace& d);

/// Per-segment record of the refinement: either a run of derived-series steps
/// on which the induced automorphism has no fixed points, or one line step.
struct SeriesSegment {
  SubnormalSeries::Step kind = SubnormalSeries::Step::FixedPointFree;
  std::size_t first_term = 0;  // index into terms
  std::size_t last_term = 0;
  std::size_t eig = 0;                 // of the induced map on the segment quotient
  std::size_t derived_length = 0;      // of the segment quotient
  std::uint64_t contribution = 0;      // K(eig), or 1 for a line step
};

struct RefinedSeries {
  SubnormalSeries series;
  std::vector<SeriesSegment> segments;
  std::size_t eig = 0;  // of the automorphism on the top term
  std::size_t fix = 0;
  std::size_t line_steps = 0;
  std::size_t derived_length = 0;           // of the top term
  std::uint64_t certified_dl_bound = 0;     // sum of contributions
  std::uint64_t stated_bound = 0;           // (fix + 1) K(eig) + fix
  // derived_length <= certified_dl_bound <= stated_bound, plus every
  // fixed-point-free segment having derived length <= K(eig of segment).
  bool certificate_holds = false;
};

/// Refines the derived series of the solvable algebra `top` into an
/// a-stable subnormal series with one extra term per independent fixed point,
/// splitting off a fixed line each time. See RefinedSeries for the
/// certificate. Throws NotSolvable / NotSemisimple.
RefinedSeries refine_series(const LieAlgebra& l, const Matrix& a, const Subspace& top,
                            const BoundFunction& k = shalev_K);
RefinedSeries refine_series(const Automorphism& a, const BoundFunction& k = shalev_K);

}  // namespace liebound

#endif  // LIEBOUND_AUTOMORPHISM_HPP
