#ifndef LIEBOUND_GENERATORS_HPP
#define LIEBOUND_GENERATORS_HPP

#include <liebound/automorphism.hpp>
#include <liebound/lie_algebra.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liebound {

LieAlgebra gen_abelian(std::size_t d);
// [x, y] = y
LieAlgebra gen_borel2();
// [x, y] = z
LieAlgebra gen_heisenberg();
// [e1, e_i] = e_{i+1} for 2 <= i <= d-1 (1-based); d >= 3.
LieAlgebra gen_filiform(std::size_t d);
// Basis E_ij (i != j) in lexicographic order, then H_k = E_kk - E_{k+1,k+1}.
LieAlgebra gen_sl(std::size_t n);

// e1 -> a e1, e_i -> a^{i-2} b e_i for i >= 2.
Automorphism filiform_torus_aut(std::size_t d, const Scalar& a, const Scalar& b);
// diag(a, b, ab)
Automorphism heisenberg_torus_aut(const Scalar& a, const Scalar& b);
// Conjugation by diag(entries): E_ij -> (t_i / t_j) E_ij, H_k fixed.
Automorphism sl_diag_aut(std::size_t n, const Vector& entries);

// Block-diagonal automorphism of direct_sum(a.algebra(), b.algebra()).
Automorphism direct_sum_aut(const Automorphism& a, const Automorphism& b);

struct CyclicSum {
  LieAlgebra algebra;
  Automorphism automorphism;
};

/// m copies of base; copy j goes to copy j+1 identically, and the wrap-around
/// step m-1 -> 0 applies `twist` (identity when absent). The m-th power
/// restricted to copy 0 is therefore the twist.
CyclicSum gen_cyclic_sum(const LieAlgebra& base, std::size_t m, const std::optional<Matrix>& twist = std::nullopt);

struct InvolutionSearch {
  Automorphism best;
  std::size_t min_fix = 0;
  std::size_t examined = 0;
  std::string recipe;
};

/// Smallest fixed space among involutions in the implemented families: the
/// torus recipes (a, b) in {-1, 1}^2, then diagonal sign matrices, at most
/// `budget` candidates in all. An upper bound on the true minimum over all
/// involutions. Throws EmptyFamily if nothing qualifies.
InvolutionSearch search_involutions(const LieAlgebra& l, std::size_t budget);

enum class Family { Abelian, Borel2, Heisenberg, Filiform, Sl, DirectSum, CyclicSum };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

/// What to build: a family, its parameters, and optionally an automorphism
/// recipe.
///
/// Parameters: abelian d | filiform d | sl n | direct-sum name... |
/// cyclic-sum name m. Names are abelianD, borel2, heisenberg, filiformD, slN.
/// Recipes: identity | diag:v1,...,vd | torus:a,b (filiform, heisenberg) |
/// conj:t1,...,tn (sl) | r1|r2|... (one per direct summand) | for cyclic-sum
/// the recipe is the twist on the base.
struct FamilySpec {
  Family family = Family::Abelian;
  std::vector<std::string> parameters;
  std::optional<std::string> automorphism_recipe;
};

struct Generated {
  LieAlgebra algebra;
  std::optional<Automorphism> automorphism;
};

Generated generate(const FamilySpec& spec);

/// Builds a named algebra (abelianD, borel2, heisenberg, filiformD, slN).
LieAlgebra algebra_by_name(std::string_view name);

/// Applies a recipe to an algebra produced by algebra_by_name(name).
Automorphism apply_recipe(const LieAlgebra& l, std::string_view name, std::string_view recipe);

/// One (algebra, semisimple automorphism) pair of the built-in corpus.
struct CorpusEntry {
  std::string label;
  FamilySpec spec;
};

/// Solvable, semisimple and mixed pairs, periodic and aperiodic, used by the
/// `check` command and the test suites.
std::vector<CorpusEntry> standard_corpus();

}  // namespace liebound

#endif  // LIEBOUND_GENERATORS_HPP
