#ifndef LIEBOUND_LIE_ALGEBRA_HPP
#define LIEBOUND_LIE_ALGEBRA_HPP

#include <liebound/matrix.hpp>
#include <liebound/subspace.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liebound {

/// One structure constant: [e_i, e_j] has coefficient `value` on e_k (0-based).
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar value;
};

/// A finite-dimensional Lie algebra given by structure constants in the basis
/// e_0, ..., e_{dim-1}.
///
/// Only brackets [e_i, e_j] with i < j are stored; [e_j, e_i] is the negative
/// and [e_i, e_i] is zero, so antisymmetry holds by construction. The Jacobi
/// identity is not enforced here: run validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Constants with i > j are negated and stored as (j, i); i == j is rejected.
  // Repeated (i, j, k) entries accumulate.
  LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants, std::string name = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  LieAlgebra renamed(std::string name) const;

  // [e_i, e_j] as a coordinate vector.
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  // ad(x) with column j = [x, e_j].
  Matrix ad(const Vector& x) const;
  Matrix ad_basis(std::size_t i) const;

  // Nonzero constants with i < j, ordered by (i, j, k).
  std::vector<StructureConstant> constants() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;
  const Sparse& entry(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  std::size_t dim_ = 0;
  std::string name_;
  std::vector<Sparse> table_;  // dim*dim, both orders filled
};

struct JacobiViolation {
  std::size_t i, j, k;  // 0-based, i < j < k
  Vector residual;
};

/// All triples i<j<k whose Jacobi sum is nonzero. Empty means the table
/// defines a Lie algebra.
std::vector<JacobiViolation> validate(const LieAlgebra& l);

/// Span of all [u, v] over basis pairs, canonical form.
Subspace subspace_bracket(const LieAlgebra& l, const Subspace& u, const Subspace& v);

bool is_subalgebra(const LieAlgebra& l, const Subspace& u);
// True iff [within, u] is contained in u (u is an ideal of `within`).
bool is_ideal(const LieAlgebra& l, const Subspace& u, const Subspace& within);
bool is_ideal(const LieAlgebra& l, const Subspace& u);

/// u, [u,u], [[u,u],[u,u]], ... ending at 0 or at the first repeated term.
std::vector<Subspace> derived_series(const LieAlgebra& l, const Subspace& u);
/// Number of strict steps to reach 0; nullopt if the series stalls (not solvable).
std::optional<std::size_t> derived_length(const LieAlgebra& l, const Subspace& u);
std::optional<std::size_t> derived_length(const LieAlgebra& l);

/// u, [u,u], [u,[u,u]], ... ending at 0 or at the first repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra& l, const Subspace& u);
std::optional<std::size_t> nilpotency_class(const LieAlgebra& l, const Subspace& u);
std::optional<std::size_t> nilpotency_class(const LieAlgebra& l);

/// kappa(e_i, e_j) = trace(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& l);

/// The solvable radical, computed as the Killing-orthogonal of [L, L].
///
/// The result is checked to be a solvable ideal with a semisimple quotient;
/// a failed check throws InternalInconsistency.
Subspace radical(const LieAlgebra& l);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;  // dim(Q) x dim(L)
  Matrix lift;        // dim(L) x dim(Q), e_a of Q -> e_{free column a} of L
};

/// L / I. The quotient basis is the images of the standard basis vectors at
/// the non-pivot columns of I's canonical basis. Throws NotIdeal.
Quotient quotient(const LieAlgebra& l, const Subspace& ideal);

/// The subalgebra u as a Lie algebra in the coordinates of u's canonical
/// basis. Throws NotSubalgebra.
LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& u);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// A descending chain from the full space to 0 in which each term is an ideal
/// of its predecessor.
struct SubnormalSeries {
  enum class Step { FixedPointFree, Line, Derived };
  std::vector<Subspace> terms;
  std::vector<Step> steps;  // steps[k] labels terms[k] -> terms[k+1]
};

std::string_view to_string(SubnormalSeries::Step step);

// Strictly descending, starts at `top`, ends at 0, each term an ideal of the previous.
bool is_subnormal(const LieAlgebra& l, const SubnormalSeries& s, const Subspace& top);

}  // namespace liebound

#endif  // LIEBOUND_LIE_ALGEBRA_HPP
